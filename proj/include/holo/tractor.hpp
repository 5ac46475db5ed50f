// Standard tractor bundle in a fixed scale. A tractor at a point is the
// triple (sigma, X^1..X^n, y) stored as an (n+2)-vector. The pairing is
//   <V, W> = sigma_V y_W + g(X_V, X_W) + y_V sigma_W
// with g the Fisher-Rao metric at the base point, i.e. Gram matrix
//   H = [[0, 0, 1], [0, g, 0], [1, 0, 0]],  signature (1, n+1).
// The connection acts as nabla_b V = d_b V + M_b V with
//   M_b[0][1+c]   = -g_bc
//   M_b[1+a][0]   = P_b^a          (Schouten, index raised by g)
//   M_b[1+a][1+c] = Gamma^a_bc
//   M_b[1+a][n+1] = delta^a_b
//   M_b[n+1][1+c] = -P_bc
// Conformal change of scale g -> exp(2 Upsilon) g maps components by
//   (sigma, X^a, y) -> (sigma, X^a + Upsilon^a sigma,
//                       y - Upsilon_b X^b - 1/2 Upsilon_b Upsilon^b sigma),
// which preserves the pairing above exactly; the accumulated Upsilon
// gradient is carried on the tractor as its scale tag.
#pragma once

#include <functional>
#include <vector>

#include "holo/curvature.hpp"
#include "holo/manifolds.hpp"
#include "holo/types.hpp"

namespace holo {

struct Tractor {
  Point base;
  Vec comp;        // (sigma, X^1..X^n, y)
  Vec scale_grad;  // accumulated Upsilon gradient; zero in the Fisher-Rao scale

  double sigma() const { return comp(0); }
  double y() const { return comp(comp.size() - 1); }
};

Tractor make_tractor(const Point& base, double sigma, const Vec& x_up, double y);

// Gram matrix of the pairing at p, size (n+2) x (n+2).
Mat tractor_gram(ManifoldId m, const Point& p);

double tractor_inner(const Tractor& V, const Tractor& W);

// Connection matrices M_b for every coordinate direction b.
std::vector<Mat> tractor_connection(ManifoldId m, const Point& p);
// Same, built from an arbitrary metric field (used for rescaled metrics).
std::vector<Mat> tractor_connection_from_metric(const MetricField& mf,
                                                const std::vector<double>& x);

// A tractor field: components (sigma, X, y) as a function of primary-chart
// coordinates, in the Fisher-Rao scale.
using TractorField = std::function<Vec(const std::vector<double>&)>;

// Covariant derivative of the field at p in coordinate direction b.
Tractor tractor_derivative(ManifoldId m, const TractorField& field, const Point& p,
                           int b);

Tractor tractor_conformal_change(const Tractor& V, const LinearUpsilon& ups);

// Curvature F_ab = d_a M_b - d_b M_a + [M_a, M_b], exact via first-order jets
// of the connection entries.
Mat tractor_curvature(ManifoldId m, const Point& p, int a, int b);

// Max-abs residual of the conformal transformation law of the connection:
// the connection built from exp(2 Upsilon) g must equal
// E M_b E^{-1} - (d_b E) E^{-1} with E the weight-adjusted change matrix
// diag(e^U, e^{-U} I, e^{-U}) followed by the component change above.
double tractor_conformal_connection_residual(ManifoldId m, const std::vector<double>& x,
                                             const LinearUpsilon& ups);

}  // namespace holo
