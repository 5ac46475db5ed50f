// Signature-aware frame construction and index gymnastics.
#pragma once

#include <vector>

#include "holo/jet.hpp"
#include "holo/types.hpp"

namespace holo {

inline constexpr double kFrameTol = 1e-10;
inline constexpr double kDegeneracyTol = 1e-9;
inline constexpr double kLinTol = 1e-10;

// Change of basis W with W^T form W = diag(-1,...,-1,+1,...,+1), negative
// directions first. Throws DegeneracyError when the form is near-singular.
FrameChange orthonormalize(const Mat& form, double degeneracy_tol = kDegeneracyTol);

// Contract slot `slot` of t with g^{-1} (raise) or g (lower).
TensorValue raise_index(const TensorValue& t, int slot, const TensorValue& g);
TensorValue lower_index(const TensorValue& t, int slot, const TensorValue& g);

// Templated Gauss-Jordan inverse usable with jet scalars; pivots on the
// scalar part. Returns false on a vanishing pivot.
template <class T>
bool invert_matrix(const std::vector<std::vector<T>>& A, std::vector<std::vector<T>>& out) {
  const int n = static_cast<int>(A.size());
  std::vector<std::vector<T>> m = A;
  out.assign(n, std::vector<T>(n, T(0.0)));
  for (int i = 0; i < n; ++i) out[i][i] = T(1.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    double best = std::abs(scalar_value(m[col][col]));
    for (int r = col + 1; r < n; ++r) {
      double cand = std::abs(scalar_value(m[r][col]));
      if (cand > best) {
        best = cand;
        piv = r;
      }
    }
    if (best == 0.0) return false;
    std::swap(m[piv], m[col]);
    std::swap(out[piv], out[col]);
    T inv = T(1.0) / m[col][col];
    for (int c = 0; c < n; ++c) {
      m[col][c] = m[col][c] * inv;
      out[col][c] = out[col][c] * inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      T f = m[r][col];
      for (int c = 0; c < n; ++c) {
        m[r][c] = m[r][c] - f * m[col][c];
        out[r][c] = out[r][c] - f * out[col][c];
      }
    }
  }
  return true;
}

}  // namespace holo
