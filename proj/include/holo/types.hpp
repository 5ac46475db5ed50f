// Core value types: points, dense tensors, frames, error taxonomy.
#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace holo {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class Chart { SourceParams, NaturalParams };
// ConeOverIndependence is the 5-dim metric cone over the independence
// submanifold in natural coordinates, coordinates (th1..th4, t); it carries
// no statistical model and no chart pair, only a metric.
enum class ManifoldId {
  BivariateGaussian,
  IndependenceSub,
  UnivariateGaussian,
  ConeOverIndependence
};

inline int manifold_dim(ManifoldId m) {
  switch (m) {
    case ManifoldId::BivariateGaussian: return 5;
    case ManifoldId::IndependenceSub: return 4;
    case ManifoldId::UnivariateGaussian: return 2;
    case ManifoldId::ConeOverIndependence: return 5;
  }
  return 0;
}

inline const char* manifold_name(ManifoldId m) {
  switch (m) {
    case ManifoldId::BivariateGaussian: return "bivariate";
    case ManifoldId::IndependenceSub: return "independence";
    case ManifoldId::UnivariateGaussian: return "univariate";
    case ManifoldId::ConeOverIndependence: return "cone";
  }
  return "?";
}

struct Point {
  ManifoldId manifold = ManifoldId::BivariateGaussian;
  Chart chart = Chart::SourceParams;
  std::vector<double> coords;

  int dim() const { return static_cast<int>(coords.size()); }
};

inline Point make_point(ManifoldId m, Chart c, std::vector<double> x) {
  return Point{m, c, std::move(x)};
}

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& msg) : Error(msg) {}
};
struct ChartError : Error {
  explicit ChartError(const std::string& msg) : Error(msg) {}
};
struct DegeneracyError : Error {
  double smallest = 0.0;
  double largest = 0.0;
  DegeneracyError(const std::string& msg, double sm, double lg)
      : Error(msg), smallest(sm), largest(lg) {}
};
struct AmbiguousRankError : Error {
  std::vector<double> singular_values;
  AmbiguousRankError(const std::string& msg, std::vector<double> sv)
      : Error(msg), singular_values(std::move(sv)) {}
};
struct LogFailure : Error {
  explicit LogFailure(const std::string& msg) : Error(msg) {}
};
struct UsageError : Error {
  explicit UsageError(const std::string& msg) : Error(msg) {}
};

enum class Valence { Up, Down };

// Dense multi-index array with declared valences. Index order is documented
// at each producing operation; storage is row-major in the given order.
struct TensorValue {
  int dim = 0;
  std::vector<Valence> valences;
  std::vector<double> entries;
  // declared symmetry: pairs of slots expected symmetric / antisymmetric
  std::vector<std::pair<int, int>> sym_pairs;
  std::vector<std::pair<int, int>> antisym_pairs;

  static TensorValue zeros(int dim, std::vector<Valence> val) {
    TensorValue t;
    t.dim = dim;
    t.valences = std::move(val);
    std::size_t n = 1;
    for (std::size_t k = 0; k < t.valences.size(); ++k) n *= dim;
    t.entries.assign(n, 0.0);
    return t;
  }

  int rank() const { return static_cast<int>(valences.size()); }

  std::size_t offset(std::initializer_list<int> idx) const {
    std::size_t o = 0;
    for (int i : idx) o = o * dim + static_cast<std::size_t>(i);
    return o;
  }
  double& at(std::initializer_list<int> idx) { return entries[offset(idx)]; }
  double at(std::initializer_list<int> idx) const { return entries[offset(idx)]; }

  double operator()(int a) const { return at({a}); }
  double operator()(int a, int b) const { return at({a, b}); }
  double operator()(int a, int b, int c) const { return at({a, b, c}); }
  double operator()(int a, int b, int c, int d) const { return at({a, b, c, d}); }
  double& operator()(int a) { return at({a}); }
  double& operator()(int a, int b) { return at({a, b}); }
  double& operator()(int a, int b, int c) { return at({a, b, c}); }
  double& operator()(int a, int b, int c, int d) { return at({a, b, c, d}); }

  Mat as_matrix() const {
    Mat m(dim, dim);
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b) m(a, b) = at({a, b});
    return m;
  }

  static TensorValue from_matrix(const Mat& m, Valence v1, Valence v2) {
    TensorValue t = zeros(static_cast<int>(m.rows()), {v1, v2});
    for (int a = 0; a < t.dim; ++a)
      for (int b = 0; b < t.dim; ++b) t(a, b) = m(a, b);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (double e : entries) m = std::max(m, std::abs(e));
    return m;
  }

  // Largest violation of the declared (anti)symmetries.
  double symmetry_defect() const;
  bool check_symmetries(double tol) const { return symmetry_defect() <= tol; }
};

inline double TensorValue::symmetry_defect() const {
  const int r = rank();
  std::vector<int> idx(r, 0);
  double worst = 0.0;
  const std::size_t total = entries.size();
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int k = r - 1; k >= 0; --k) {
      idx[k] = static_cast<int>(rem % dim);
      rem /= dim;
    }
    const double v = entries[flat];
    auto swapped = [&](int s1, int s2) {
      std::vector<int> j = idx;
      std::swap(j[s1], j[s2]);
      std::size_t o = 0;
      for (int k = 0; k < r; ++k) o = o * dim + j[k];
      return entries[o];
    };
    for (auto [s1, s2] : sym_pairs) worst = std::max(worst, std::abs(v - swapped(s1, s2)));
    for (auto [s1, s2] : antisym_pairs) worst = std::max(worst, std::abs(v + swapped(s1, s2)));
  }
  return worst;
}

struct FrameChange {
  Mat matrix;                      // columns are the new basis vectors
  std::pair<int, int> signature;   // (negatives, positives)
};

struct TransportResult {
  Mat matrix;
  double err_estimate = 0.0;
  int steps = 0;
};

}  // namespace holo
