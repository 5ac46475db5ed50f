// Curvature of a metric given as a function of coordinates. The second-order
// jet of the metric at a point supplies g, dg and ddg exactly, from which
// Christoffel symbols and the curvature tensor follow by assembly:
//   R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb
//           + Gamma^a_ce Gamma^e_db - Gamma^a_de Gamma^e_cb
// All derived tensors (Ricci, scalar, sectional, Schouten, Weyl) use this
// sign convention throughout.
#pragma once

#include <functional>
#include <vector>

#include "holo/manifolds.hpp"
#include "holo/types.hpp"

namespace holo {

// Affine conformal exponent Upsilon(x) = offset + coeff . x.
struct LinearUpsilon {
  std::vector<double> coeff;
  double offset = 0.0;

  template <class T>
  T operator()(const std::vector<T>& x) const {
    T s(offset);
    for (std::size_t i = 0; i < coeff.size(); ++i) s += coeff[i] * x[i];
    return s;
  }
  const std::vector<double>& gradient() const { return coeff; }
};

// A metric presented both as plain values and as a second-order jet.
struct MetricField {
  int dim = 0;
  std::function<std::vector<std::vector<double>>(const std::vector<double>&)> value;
  std::function<std::vector<std::vector<J2>>(const std::vector<J2>&)> jet2;
};

MetricField base_metric_field(ManifoldId m);
MetricField conformal_metric_field(ManifoldId m, const LinearUpsilon& ups);
// Cone over the independence submanifold, coordinates (th1..th4, t), metric
// -dt^2 + (t^2/6) g_I.
MetricField cone_metric_field();

struct CurvaturePack {
  int dim = 0;
  TensorValue metric;
  TensorValue christoffel;  // Gamma^c_ab, order (c, a, b)
  TensorValue riemann;      // R_abcd, all indices down
  TensorValue ricci;
  double scal = 0.0;
  Mat sectional;      // coordinate-plane curvatures, zero diagonal
  double j_scalar = 0.0;
  TensorValue schouten;  // zero-sized for dim < 3
  TensorValue weyl;      // zero-sized for dim < 3
};

CurvaturePack curvature_from_metric(const MetricField& mf, const std::vector<double>& x);
// Curvature of a manifold's Fisher-Rao metric at a point (jet pipeline over
// the metric component table; independent of the closed curvature tables).
CurvaturePack curvature(ManifoldId m, const Point& p);

TensorValue riemann(ManifoldId m, const Point& p);
TensorValue ricci(ManifoldId m, const Point& p);
double scalar_curvature(ManifoldId m, const Point& p);
double sectional(ManifoldId m, const Point& p, int a, int b);
TensorValue schouten(ManifoldId m, const Point& p);
TensorValue weyl(ManifoldId m, const Point& p);
// Ric - (scal/n) g; identically zero iff the metric is Einstein.
TensorValue einstein_defect(ManifoldId m, const Point& p);

// Closed component tables wrapped as TensorValue, for cross-checks.
TensorValue riemann_closed(ManifoldId m, const Point& p);
TensorValue ricci_closed(ManifoldId m, const Point& p);
// Finite-difference Riemann from the Christoffel table.
TensorValue riemann_fd(ManifoldId m, const Point& p);

// Pointwise rescaled metric exp(2 Upsilon(x)) g(x) at p.
TensorValue conformal_rescale(ManifoldId m, const Point& p, const LinearUpsilon& ups);

}  // namespace holo
