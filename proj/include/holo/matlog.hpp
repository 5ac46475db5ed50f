// Principal matrix logarithm and exponential for holonomy matrices.
#pragma once

#include "holo/types.hpp"

namespace holo {

// Matrix exponential (Pade with scaling and squaring).
Mat matrix_exp(const Mat& A);

// Principal logarithm via inverse scaling-and-squaring. The result L is
// verified to satisfy exp(L) = M within 1e-9 relative to max(1, ||M||);
// violations (eigenvalues on the closed negative real axis, or transports
// too far from the identity) throw LogFailure so the caller can reject the
// loop without aborting the run.
Mat matrix_log(const Mat& M);

}  // namespace holo
