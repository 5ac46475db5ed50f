#include "holo/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

namespace holo {

FrameChange orthonormalize(const Mat& form, double degeneracy_tol) {
  const int n = static_cast<int>(form.rows());
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (form + form.transpose()));
  const Vec lam = es.eigenvalues();
  const Mat V = es.eigenvectors();
  double largest = 0.0, smallest = 0.0;
  for (int i = 0; i < n; ++i) largest = std::max(largest, std::abs(lam[i]));
  smallest = largest;
  for (int i = 0; i < n; ++i) smallest = std::min(smallest, std::abs(lam[i]));
  if (largest == 0.0 || smallest <= degeneracy_tol * largest)
    throw DegeneracyError("orthonormalize: near-degenerate form", smallest, largest);

  // eigenvalues ascend, so negatives already come first
  FrameChange fc;
  fc.matrix = Mat(n, n);
  int neg = 0;
  for (int i = 0; i < n; ++i) {
    if (lam[i] < 0.0) ++neg;
    fc.matrix.col(i) = V.col(i) / std::sqrt(std::abs(lam[i]));
  }
  fc.signature = {neg, n - neg};
  return fc;
}

namespace {

TensorValue contract_slot(const TensorValue& t, int slot, const Mat& m, Valence new_val) {
  const int n = t.dim;
  const int r = t.rank();
  TensorValue out = t;
  out.valences[slot] = new_val;
  std::size_t stride = 1;
  for (int k = r - 1; k > slot; --k) stride *= n;
  const std::size_t total = t.entries.size();
  const std::size_t block = stride * n;
  for (std::size_t base = 0; base < total; base += block) {
    for (std::size_t inner = 0; inner < stride; ++inner) {
      double tmp[8] = {0};
      for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j) acc += m(i, j) * t.entries[base + j * stride + inner];
        tmp[i] = acc;
      }
      for (int i = 0; i < n; ++i) out.entries[base + i * stride + inner] = tmp[i];
    }
  }
  return out;
}

Mat metric_inverse(const TensorValue& g) {
  Mat gm = g.as_matrix();
  Eigen::FullPivLU<Mat> lu(gm);
  if (!lu.isInvertible())
    throw DegeneracyError("index operation: singular metric", 0.0, gm.norm());
  return lu.inverse();
}

}  // namespace

TensorValue raise_index(const TensorValue& t, int slot, const TensorValue& g) {
  if (slot < 0 || slot >= t.rank()) throw Error("raise_index: slot out of range");
  if (t.valences[slot] == Valence::Up) throw Error("raise_index: slot already contravariant");
  return contract_slot(t, slot, metric_inverse(g), Valence::Up);
}

TensorValue lower_index(const TensorValue& t, int slot, const TensorValue& g) {
  if (slot < 0 || slot >= t.rank()) throw Error("lower_index: slot out of range");
  if (t.valences[slot] == Valence::Down) throw Error("lower_index: slot already covariant");
  return contract_slot(t, slot, g.as_matrix(), Valence::Down);
}

}  // namespace holo
