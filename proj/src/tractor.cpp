#include "holo/tractor.hpp"

#include <cmath>

#include "holo/derivatives.hpp"
#include "holo/linalg.hpp"

namespace holo {

namespace {

template <class T>
void schouten_components(ManifoldId m, const std::vector<T>& x,
                         std::vector<std::vector<T>>& P,
                         std::vector<std::vector<T>>& ginv) {
  const int n = manifold_dim(m);
  const auto g = metric_components(m, x);
  const auto ric = ricci_components(m, x);
  if (!invert_matrix(g, ginv)) throw DegeneracyError("schouten: singular metric", 0, 0);
  T scal(0.0);
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) scal += ginv[b][d] * ric[b][d];
  const T j = scal / (2.0 * (n - 1));
  P.assign(n, std::vector<T>(n, T(0.0)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) P[a][b] = (ric[a][b] - j * g[a][b]) / (n - 2);
}

// M[b][row][col] of size n x (n+2) x (n+2)
template <class T>
std::vector<std::vector<std::vector<T>>> connection_components(
    ManifoldId m, const std::vector<T>& x) {
  const int n = manifold_dim(m);
  const auto g = metric_components(m, x);
  const auto Gam = christoffel_components(m, x);
  std::vector<std::vector<T>> P, ginv;
  schouten_components(m, x, P, ginv);
  auto M = std::vector<std::vector<std::vector<T>>>(
      n, std::vector<std::vector<T>>(n + 2, std::vector<T>(n + 2, T(0.0))));
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) M[b][0][1 + c] = -g[b][c];
    for (int a = 0; a < n; ++a) {
      T up(0.0);
      for (int c = 0; c < n; ++c) up += ginv[a][c] * P[b][c];
      M[b][1 + a][0] = up;
      for (int c = 0; c < n; ++c) M[b][1 + a][1 + c] = Gam[a][b][c];
      if (a == b) M[b][1 + a][n + 1] = T(1.0);
    }
    for (int c = 0; c < n; ++c) M[b][n + 1][1 + c] = -P[b][c];
  }
  return M;
}

Mat gram_from_matrix(const std::vector<std::vector<double>>& g) {
  const int n = static_cast<int>(g.size());
  Mat H = Mat::Zero(n + 2, n + 2);
  H(0, n + 1) = 1.0;
  H(n + 1, 0) = 1.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) H(1 + a, 1 + b) = g[a][b];
  return H;
}

}  // namespace

Tractor make_tractor(const Point& base, double sigma, const Vec& x_up, double y) {
  const Point q = to_primary(base);
  const int n = manifold_dim(base.manifold);
  if (x_up.size() != n) throw Error("make_tractor: tangent slot has wrong dimension");
  Tractor t;
  t.base = q;
  t.comp = Vec::Zero(n + 2);
  t.comp(0) = sigma;
  for (int i = 0; i < n; ++i) t.comp(1 + i) = x_up(i);
  t.comp(n + 1) = y;
  t.scale_grad = Vec::Zero(n);
  return t;
}

Mat tractor_gram(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  return gram_from_matrix(metric_components(m, q.coords));
}

double tractor_inner(const Tractor& V, const Tractor& W) {
  if (V.base.manifold != W.base.manifold || V.base.chart != W.base.chart)
    throw Error("tractor_inner: base point mismatch");
  if ((V.base.coords != W.base.coords))
    throw Error("tractor_inner: base point mismatch");
  if ((V.scale_grad - W.scale_grad).cwiseAbs().maxCoeff() > 1e-12)
    throw Error("tractor_inner: scale mismatch");
  const Mat H = tractor_gram(V.base.manifold, V.base);
  return V.comp.dot(H * W.comp);
}

std::vector<Mat> tractor_connection(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  const auto Mc = connection_components(m, q.coords);
  const int n = manifold_dim(m);
  std::vector<Mat> out(n, Mat::Zero(n + 2, n + 2));
  for (int b = 0; b < n; ++b)
    for (int r = 0; r < n + 2; ++r)
      for (int c = 0; c < n + 2; ++c) out[b](r, c) = Mc[b][r][c];
  return out;
}

std::vector<Mat> tractor_connection_from_metric(const MetricField& mf,
                                                const std::vector<double>& x) {
  const CurvaturePack cp = curvature_from_metric(mf, x);
  const int n = cp.dim;
  std::vector<std::vector<double>> ginv(n, std::vector<double>(n));
  {
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g[a][b] = cp.metric(a, b);
    if (!invert_matrix(g, ginv))
      throw DegeneracyError("tractor_connection_from_metric: singular metric", 0, 0);
  }
  std::vector<Mat> out(n, Mat::Zero(n + 2, n + 2));
  for (int b = 0; b < n; ++b) {
    for (int c = 0; c < n; ++c) out[b](0, 1 + c) = -cp.metric(b, c);
    for (int a = 0; a < n; ++a) {
      double up = 0.0;
      for (int c = 0; c < n; ++c) up += ginv[a][c] * cp.schouten(b, c);
      out[b](1 + a, 0) = up;
      for (int c = 0; c < n; ++c) out[b](1 + a, 1 + c) = cp.christoffel(a, b, c);
      if (a == b) out[b](1 + a, n + 1) = 1.0;
    }
    for (int c = 0; c < n; ++c) out[b](n + 1, 1 + c) = -cp.schouten(b, c);
  }
  return out;
}

Tractor tractor_derivative(ManifoldId m, const TractorField& field, const Point& p,
                           int b) {
  const Point q = to_primary(p);
  const int n = manifold_dim(m);
  DomainPredicate dom = [m, &q](const std::vector<double>& x) {
    return domain_check(Point{m, q.chart, x});
  };
  const double h = default_step(q.coords[b]);
  Vec dV(n + 2);
  for (int r = 0; r < n + 2; ++r) {
    ScalarField fr = [&field, r](const std::vector<double>& x) { return field(x)(r); };
    dV(r) = central_difference_richardson(fr, q.coords, b, h, dom);
  }
  const std::vector<Mat> M = tractor_connection(m, q);
  Tractor out;
  out.base = q;
  out.comp = dV + M[b] * field(q.coords);
  out.scale_grad = Vec::Zero(n);
  return out;
}

Tractor tractor_conformal_change(const Tractor& V, const LinearUpsilon& ups) {
  const ManifoldId m = V.base.manifold;
  const int n = manifold_dim(m);
  const auto g = metric_components(m, V.base.coords);
  std::vector<std::vector<double>> ginv;
  if (!invert_matrix(g, ginv))
    throw DegeneracyError("tractor_conformal_change: singular metric", 0, 0);

  const auto& grad = ups.gradient();
  Vec up = Vec::Zero(n);  // Upsilon^a = g^{ab} Upsilon_b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) up(a) += ginv[a][b] * grad[b];
  double norm2 = 0.0;  // Upsilon_b Upsilon^b
  for (int b = 0; b < n; ++b) norm2 += grad[b] * up(b);

  const double sigma = V.comp(0);
  double dot = 0.0;  // Upsilon_b X^b
  for (int b = 0; b < n; ++b) dot += grad[b] * V.comp(1 + b);

  Tractor out = V;
  for (int a = 0; a < n; ++a) out.comp(1 + a) = V.comp(1 + a) + up(a) * sigma;
  out.comp(n + 1) = V.comp(n + 1) - dot - 0.5 * norm2 * sigma;
  for (int b = 0; b < n; ++b) out.scale_grad(b) += grad[b];
  return out;
}

Mat tractor_curvature(ManifoldId m, const Point& p, int a, int b) {
  if (a == b) throw Error("tractor_curvature: repeated direction");
  if (a > b) return -tractor_curvature(m, p, b, a);
  const Point q = to_primary(p);
  const int n = manifold_dim(m);
  std::vector<J1> xj(n);
  for (int i = 0; i < n; ++i) xj[i] = j1_variable(q.coords[i], i);
  const auto Mj = connection_components(m, xj);

  Mat Ma(n + 2, n + 2), Mb(n + 2, n + 2), daMb(n + 2, n + 2), dbMa(n + 2, n + 2);
  for (int r = 0; r < n + 2; ++r)
    for (int c = 0; c < n + 2; ++c) {
      Ma(r, c) = Mj[a][r][c].v;
      Mb(r, c) = Mj[b][r][c].v;
      daMb(r, c) = Mj[b][r][c].d[a];
      dbMa(r, c) = Mj[a][r][c].d[b];
    }
  return daMb - dbMa + Ma * Mb - Mb * Ma;
}

namespace {

// E(x) = D C with D = diag(e^U, e^{-U} I, e^{-U}) and C the component change;
// the raised gradient Upsilon^a = g^{ab} Upsilon_b varies with x through g.
template <class T>
std::vector<std::vector<T>> change_matrix(ManifoldId m, const std::vector<T>& x,
                                          const LinearUpsilon& ups) {
  const int n = manifold_dim(m);
  const auto g = metric_components(m, x);
  std::vector<std::vector<T>> ginv;
  invert_matrix(g, ginv);
  const auto& grad = ups.gradient();
  std::vector<T> up(n, T(0.0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) up[a] += ginv[a][b] * grad[b];
  T norm2(0.0);
  for (int b = 0; b < n; ++b) norm2 += grad[b] * up[b];

  std::vector<std::vector<T>> C(n + 2, std::vector<T>(n + 2, T(0.0)));
  for (int i = 0; i < n + 2; ++i) C[i][i] = T(1.0);
  for (int a = 0; a < n; ++a) C[1 + a][0] = up[a];
  for (int b = 0; b < n; ++b) C[n + 1][1 + b] = T(-1.0) * grad[b];
  C[n + 1][0] = -0.5 * norm2;

  using std::exp;
  const T u = ups(x);
  const T ep = exp(u), en = exp(-u);
  std::vector<std::vector<T>> E(n + 2, std::vector<T>(n + 2, T(0.0)));
  for (int r = 0; r < n + 2; ++r) {
    const T& d = (r == 0) ? ep : en;
    for (int c = 0; c < n + 2; ++c) E[r][c] = d * C[r][c];
  }
  return E;
}

}  // namespace

double tractor_conformal_connection_residual(ManifoldId m, const std::vector<double>& x,
                                             const LinearUpsilon& ups) {
  const int n = manifold_dim(m);
  // literal connection of the rescaled metric
  const std::vector<Mat> Mhat =
      tractor_connection_from_metric(conformal_metric_field(m, ups), x);
  const std::vector<Mat> M = tractor_connection_from_metric(base_metric_field(m), x);

  std::vector<J1> xj(n);
  for (int i = 0; i < n; ++i) xj[i] = j1_variable(x[i], i);
  const auto Ej = change_matrix(m, xj, ups);

  Mat E(n + 2, n + 2);
  for (int r = 0; r < n + 2; ++r)
    for (int c = 0; c < n + 2; ++c) E(r, c) = Ej[r][c].v;
  const Mat Einv = E.inverse();

  double worst = 0.0;
  for (int b = 0; b < n; ++b) {
    Mat dE(n + 2, n + 2);
    for (int r = 0; r < n + 2; ++r)
      for (int c = 0; c < n + 2; ++c) dE(r, c) = Ej[r][c].d[b];
    const Mat rhs = E * M[b] * Einv - dE * Einv;
    worst = std::max(worst, (Mhat[b] - rhs).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace holo
