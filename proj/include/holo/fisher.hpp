// Statistical oracle for the metric: estimates E[(d_a l)(d_b l)] directly from
// the model, by Monte Carlo sampling and by Gauss-Hermite quadrature, without
// touching the closed-form component tables.
#pragma once

#include <cstdint>
#include <vector>

#include "holo/manifolds.hpp"
#include "holo/types.hpp"

namespace holo {

struct FisherEstimate {
  Mat value;
  Mat std_error;
  long long samples = 0;
};

// Mean vector and Cholesky factor of the sampling distribution at a
// primary-chart point. obs_dim is 1 for the univariate family, else 2.
struct ModelParams {
  double mean[2] = {0, 0};
  double chol[2][2] = {{0, 0}, {0, 0}};
  int obs_dim = 2;
};

ModelParams model_params(ManifoldId m, const Point& primary);

// Score vector d_a log p(x | point) in the manifold's primary chart.
std::vector<double> score_vector(ManifoldId m, const Point& primary, const double* obs);

// Chunked Monte Carlo estimate; deterministic for fixed (n_samples, seed)
// independent of thread count.
FisherEstimate fisher_oracle_mc(ManifoldId m, const Point& p,
                                long long n_samples = 200000,
                                std::uint64_t seed = 42);

// Tensor-product Gauss-Hermite quadrature estimate.
Mat fisher_oracle_gh(ManifoldId m, const Point& p, int order = 40);

// Physicists' Gauss-Hermite rule (weight exp(-z^2)) via the Jacobi matrix.
void gauss_hermite(int order, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace holo
