// Charts, domains and closed-form component tables for the manifolds:
// the bivariate Gaussian family G (dim 5), its independence submanifold I
// (dim 4), the univariate Gaussian family (dim 2, oracle instance) and the
// metric cone over I (dim 5, cross-check instance).
//
// Coordinate conventions:
//   G source chart   (mu1, mu2, sigma1, sigma2, sigma12), sigmas are variances
//   G natural chart  (th1, ..., th5) with th3 = -sigma2/(2 Delta),
//                    th4 = sigma12/Delta, th5 = -sigma1/(2 Delta)
//   I source chart   (mu1, mu2, sigma1, sigma2)
//   I natural chart  (mu1/sigma1, mu2/sigma2, -1/(2 sigma1), -1/(2 sigma2))
//   univariate       (mu, sigma) with sigma the variance
//
// Tensor components for G and the univariate family are given in the source
// chart; components for I are given in the natural chart. to_primary converts
// any point to the chart its manifold's tables use.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "holo/closed_forms.hpp"
#include "holo/jet.hpp"
#include "holo/linalg.hpp"
#include "holo/types.hpp"

namespace holo {

inline constexpr double kSymTol = 1e-9;

struct DomainBox {
  std::vector<std::pair<double, double>> ranges;
  double delta_min = 0.1;
};

struct ManifoldSpec {
  ManifoldId id;
  int dim;
  std::vector<Chart> charts;
  std::function<TensorValue(const Point&)> metric_fn;
  std::function<TensorValue(const Point&)> christoffel_fn;
  std::function<double(const Point&)> potential_fn;
};

const ManifoldSpec& manifold_spec(ManifoldId id);

Chart primary_chart(ManifoldId m);

bool domain_check(const Point& p);
double delta(const Point& p);
Point to_natural(const Point& p);
Point from_natural(const Point& p);
Point to_primary(const Point& p);

double potential(const Point& theta);
TensorValue metric(const ManifoldSpec& m, const Point& p);
TensorValue metric(ManifoldId m, const Point& p);
TensorValue metric_from_potential(const Point& theta);

// Gamma^c_ab, index order (c, a, b).
TensorValue christoffel(ManifoldId m, const Point& p);
TensorValue christoffel(const ManifoldSpec& m, const Point& p);
// Gamma_ab,c = g_cd Gamma^d_ab, index order (a, b, c).
TensorValue christoffel_lowered(ManifoldId m, const Point& p);
// Finite-difference oracle: (1/2) g^{cd} (d_a g_bd + d_b g_ad - d_d g_ab).
TensorValue christoffel_fd(ManifoldId m, const Point& p);

// (1-alpha)/2 times the third central differences of the potential, in the
// natural chart; totally symmetric, index order (a, b, c).
TensorValue alpha_connection(const Point& theta, double alpha);

// Exact (jet-based) natural-chart objects used as comparison targets.
TensorValue natural_metric(ManifoldId m, const std::vector<double>& theta);
TensorValue natural_christoffel_lowered(ManifoldId m, const std::vector<double>& theta);

// Jacobian d(theta)/d(xi) of to_natural at a source-chart point.
Mat chart_jacobian(const Point& p_source);

DomainBox sampling_box(ManifoldId m);
// Convex subbox on which every point (hence every segment) stays in the
// domain with a safe margin; used for polyline loops and sampled paths.
DomainBox safe_box(ManifoldId m);

bool box_contains(const DomainBox& box, ManifoldId m, Chart chart,
                  const std::vector<double>& x);

// Deterministic sampling in the sampling box (rejection on the Delta floor).
// Returns source-chart coordinates; natural for the cone.
std::vector<double> random_domain_point(ManifoldId m, std::uint64_t seed,
                                        std::uint64_t index);
std::vector<double> random_box_point(const DomainBox& box, ManifoldId m, Chart chart,
                                     std::uint64_t seed, std::uint64_t index);

// ---- templated component tables -----------------------------------------

template <class T>
std::vector<T> to_natural_coords(ManifoldId m, const std::vector<T>& x) {
  using std::vector;
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      const T &m1 = x[0], &m2 = x[1], &s1 = x[2], &s2 = x[3], &s12 = x[4];
      T del = s1 * s2 - s12 * s12;
      T inv = T(1.0) / del;
      return vector<T>{(m1 * s2 - m2 * s12) * inv, (m2 * s1 - m1 * s12) * inv,
                       T(-0.5) * s2 * inv, s12 * inv, T(-0.5) * s1 * inv};
    }
    case ManifoldId::IndependenceSub: {
      const T &m1 = x[0], &m2 = x[1], &s1 = x[2], &s2 = x[3];
      return vector<T>{m1 / s1, m2 / s2, T(-0.5) / s1, T(-0.5) / s2};
    }
    case ManifoldId::UnivariateGaussian: {
      const T &mu = x[0], &v = x[1];
      return vector<T>{mu / v, T(-0.5) / v};
    }
    case ManifoldId::ConeOverIndependence:
      throw ChartError("to_natural_coords: cone has a single chart");
  }
  return {};
}

template <class T>
std::vector<T> from_natural_coords(ManifoldId m, const std::vector<T>& t) {
  using std::vector;
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      const T &t1 = t[0], &t2 = t[1], &t3 = t[2], &t4 = t[3], &t5 = t[4];
      T dd = 4.0 * t3 * t5 - t4 * t4;
      T inv = T(1.0) / dd;
      T s1 = -2.0 * t5 * inv;
      T s2 = -2.0 * t3 * inv;
      T s12 = t4 * inv;
      return vector<T>{s1 * t1 + s12 * t2, s12 * t1 + s2 * t2, s1, s2, s12};
    }
    case ManifoldId::IndependenceSub: {
      T s1 = T(-0.5) / t[2];
      T s2 = T(-0.5) / t[3];
      return vector<T>{-t[0] / (2.0 * t[2]), -t[1] / (2.0 * t[3]), s1, s2};
    }
    case ManifoldId::UnivariateGaussian: {
      T v = T(-0.5) / t[1];
      return vector<T>{-t[0] / (2.0 * t[1]), v};
    }
    case ManifoldId::ConeOverIndependence:
      throw ChartError("from_natural_coords: cone has a single chart");
  }
  return {};
}

template <class T>
T potential_components(ManifoldId m, const std::vector<T>& t) {
  using std::log;
  switch (m) {
    case ManifoldId::BivariateGaussian:
      return closed::potential_bivariate(t.data());
    case ManifoldId::IndependenceSub:
      return closed::potential_independence(t.data());
    case ManifoldId::UnivariateGaussian: {
      // normalizer of exp(th1 x + th2 x^2)
      T w = T(-1.0) / t[1];
      return -t[0] * t[0] / (4.0 * t[1]) + 0.5 * log(closed::pi_v * w);
    }
    case ManifoldId::ConeOverIndependence:
      throw ChartError("potential_components: cone is not an exponential family");
  }
  return T(0.0);
}

// Metric components in the manifold's primary chart.
template <class T>
std::vector<std::vector<T>> metric_components(ManifoldId m, const std::vector<T>& x) {
  std::vector<std::vector<T>> out;
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      T g[5][5];
      closed::metric_bivariate(x.data(), g);
      out.assign(5, std::vector<T>(5, T(0.0)));
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) out[a][b] = g[a][b];
      break;
    }
    case ManifoldId::IndependenceSub: {
      T g[4][4];
      closed::metric_independence(x.data(), g);
      out.assign(4, std::vector<T>(4, T(0.0)));
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[a][b] = g[a][b];
      break;
    }
    case ManifoldId::UnivariateGaussian: {
      out.assign(2, std::vector<T>(2, T(0.0)));
      const T& v = x[1];
      out[0][0] = T(1.0) / v;
      out[1][1] = T(0.5) / (v * v);
      break;
    }
    case ManifoldId::ConeOverIndependence: {
      // warped product -dt^2 + (t^2/6) g_I over the natural chart of I
      std::vector<T> th(x.begin(), x.begin() + 4);
      auto gi = metric_components(ManifoldId::IndependenceSub, th);
      const T& t = x[4];
      const T f = t * t / 6.0;
      out.assign(5, std::vector<T>(5, T(0.0)));
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[a][b] = f * gi[a][b];
      out[4][4] = T(-1.0);
      break;
    }
  }
  return out;
}

// Christoffel components Gamma^c_ab in the primary chart, order [c][a][b].
template <class T>
std::vector<std::vector<std::vector<T>>> christoffel_components(ManifoldId m,
                                                                const std::vector<T>& x) {
  std::vector<std::vector<std::vector<T>>> out;
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      T G[5][5][5];
      closed::christoffel_bivariate(x.data(), G);
      out.assign(5, std::vector<std::vector<T>>(5, std::vector<T>(5, T(0.0))));
      for (int c = 0; c < 5; ++c)
        for (int a = 0; a < 5; ++a)
          for (int b = 0; b < 5; ++b) out[c][a][b] = G[c][a][b];
      break;
    }
    case ManifoldId::IndependenceSub: {
      T G[4][4][4];
      closed::christoffel_independence(x.data(), G);
      out.assign(4, std::vector<std::vector<T>>(4, std::vector<T>(4, T(0.0))));
      for (int c = 0; c < 4; ++c)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) out[c][a][b] = G[c][a][b];
      break;
    }
    case ManifoldId::UnivariateGaussian: {
      out.assign(2, std::vector<std::vector<T>>(2, std::vector<T>(2, T(0.0))));
      const T& v = x[1];
      T half = T(-0.5) / v;
      out[0][0][1] = half;
      out[0][1][0] = half;
      out[1][0][0] = T(1.0);
      out[1][1][1] = T(-1.0) / v;
      break;
    }
    case ManifoldId::ConeOverIndependence: {
      // warped product g = -dt^2 + f(t) g_I with f = t^2/6:
      //   Gamma^t_ab = (f'/2) gI_ab = (t/6) gI_ab
      //   Gamma^a_tb = (f'/2f) delta^a_b = (1/t) delta^a_b
      //   Gamma^a_bc = Gamma_I^a_bc, all others zero
      std::vector<T> th(x.begin(), x.begin() + 4);
      auto gi = metric_components(ManifoldId::IndependenceSub, th);
      auto Gi = christoffel_components(ManifoldId::IndependenceSub, th);
      const T& t = x[4];
      out.assign(5, std::vector<std::vector<T>>(5, std::vector<T>(5, T(0.0))));
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          out[4][a][b] = (t / 6.0) * gi[a][b];
          for (int c = 0; c < 4; ++c) out[c][a][b] = Gi[c][a][b];
        }
      for (int a = 0; a < 4; ++a) {
        out[a][4][a] = T(1.0) / t;
        out[a][a][4] = T(1.0) / t;
      }
      break;
    }
  }
  return out;
}

// Ricci components in the primary chart.
template <class T>
std::vector<std::vector<T>> ricci_components(ManifoldId m, const std::vector<T>& x) {
  std::vector<std::vector<T>> out;
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      T r[5][5];
      closed::ricci_bivariate(x.data(), r);
      out.assign(5, std::vector<T>(5, T(0.0)));
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) out[a][b] = r[a][b];
      break;
    }
    case ManifoldId::IndependenceSub: {
      T r[4][4];
      closed::ricci_independence(x.data(), r);
      out.assign(4, std::vector<T>(4, T(0.0)));
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) out[a][b] = r[a][b];
      break;
    }
    case ManifoldId::UnivariateGaussian: {
      out.assign(2, std::vector<T>(2, T(0.0)));
      const T& v = x[1];
      out[0][0] = T(-0.5) / v;
      out[1][1] = T(-0.25) / (v * v);
      break;
    }
    case ManifoldId::ConeOverIndependence:
      throw ChartError("ricci_components: no closed table for the cone");
  }
  return out;
}

// Riemann component table R_abcd (all slots down) in the primary chart,
// following R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + Gamma Gamma - Gamma Gamma.
template <class T>
std::vector<std::vector<std::vector<std::vector<T>>>> riemann_components(
    ManifoldId m, const std::vector<T>& x) {
  std::vector<std::vector<std::vector<std::vector<T>>>> out;
  auto fill = [&out](auto& R, int n) {
    out.assign(n, std::vector<std::vector<std::vector<T>>>(
                      n, std::vector<std::vector<T>>(n, std::vector<T>(n, T(0.0)))));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) out[a][b][c][d] = R[a][b][c][d];
  };
  switch (m) {
    case ManifoldId::BivariateGaussian: {
      T R[5][5][5][5];
      closed::riemann_bivariate(x.data(), R);
      fill(R, 5);
      break;
    }
    case ManifoldId::IndependenceSub: {
      T R[4][4][4][4];
      closed::riemann_independence(x.data(), R);
      fill(R, 4);
      break;
    }
    case ManifoldId::UnivariateGaussian: {
      T R[2][2][2][2];
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d) R[a][b][c][d] = T(0.0);
      const T& v = x[1];
      T r = T(-0.25) / (v * v * v);
      R[0][1][0][1] = r;
      R[1][0][0][1] = -r;
      R[0][1][1][0] = -r;
      R[1][0][1][0] = r;
      fill(R, 2);
      break;
    }
    case ManifoldId::ConeOverIndependence:
      throw ChartError("riemann_components: no closed table for the cone");
  }
  return out;
}

}  // namespace holo
