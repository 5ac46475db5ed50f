#include "holo/curvature.hpp"

#include <cmath>

#include "holo/derivatives.hpp"
#include "holo/linalg.hpp"

namespace holo {

MetricField base_metric_field(ManifoldId m) {
  MetricField mf;
  mf.dim = manifold_dim(m);
  mf.value = [m](const std::vector<double>& x) { return metric_components(m, x); };
  mf.jet2 = [m](const std::vector<J2>& x) { return metric_components(m, x); };
  return mf;
}

MetricField conformal_metric_field(ManifoldId m, const LinearUpsilon& ups) {
  MetricField mf;
  mf.dim = manifold_dim(m);
  mf.value = [m, ups](const std::vector<double>& x) {
    auto g = metric_components(m, x);
    const double f = std::exp(2.0 * ups(x));
    for (auto& row : g)
      for (auto& e : row) e = f * e;
    return g;
  };
  mf.jet2 = [m, ups](const std::vector<J2>& x) {
    auto g = metric_components(m, x);
    const J2 f = exp(2.0 * ups(x));
    for (auto& row : g)
      for (auto& e : row) e = f * e;
    return g;
  };
  return mf;
}

MetricField cone_metric_field() {
  constexpr int nb = 4;
  MetricField mf;
  mf.dim = nb + 1;
  mf.value = [](const std::vector<double>& x) {
    std::vector<double> th(x.begin(), x.begin() + nb);
    auto gi = metric_components(ManifoldId::IndependenceSub, th);
    const double t = x[nb];
    const double f = t * t / 6.0;
    std::vector<std::vector<double>> g(nb + 1, std::vector<double>(nb + 1, 0.0));
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b) g[a][b] = f * gi[a][b];
    g[nb][nb] = -1.0;
    return g;
  };
  mf.jet2 = [](const std::vector<J2>& x) {
    std::vector<J2> th(x.begin(), x.begin() + nb);
    auto gi = metric_components(ManifoldId::IndependenceSub, th);
    const J2& t = x[nb];
    const J2 f = t * t / 6.0;
    std::vector<std::vector<J2>> g(nb + 1, std::vector<J2>(nb + 1, J2(0.0)));
    for (int a = 0; a < nb; ++a)
      for (int b = 0; b < nb; ++b) g[a][b] = f * gi[a][b];
    g[nb][nb] = J2(-1.0);
    return g;
  };
  return mf;
}

CurvaturePack curvature_from_metric(const MetricField& mf, const std::vector<double>& x) {
  const int n = mf.dim;
  std::vector<J2> xj(n);
  for (int i = 0; i < n; ++i) xj[i] = j2_variable(x[i], i);
  const auto gj = mf.jet2(xj);

  // g, dg[c][a][b] = d_c g_ab, ddg[e][c][a][b] = d_e d_c g_ab
  std::vector<std::vector<double>> g(n, std::vector<double>(n));
  auto dg = std::vector<std::vector<std::vector<double>>>(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n)));
  auto ddg = std::vector<std::vector<std::vector<std::vector<double>>>>(
      n, std::vector<std::vector<std::vector<double>>>(
             n, std::vector<std::vector<double>>(n, std::vector<double>(n))));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      g[a][b] = gj[a][b].v.v;
      for (int c = 0; c < n; ++c) {
        dg[c][a][b] = gj[a][b].d[c].v;
        for (int e = 0; e < n; ++e) ddg[e][c][a][b] = gj[a][b].d[c].d[e];
      }
    }

  std::vector<std::vector<double>> ginv;
  if (!invert_matrix(g, ginv))
    throw DegeneracyError("curvature_from_metric: singular metric", 0.0, 0.0);

  // Gamma^a_bc and d_e Gamma^a_bc
  auto Gam = std::vector<std::vector<std::vector<double>>>(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  auto dGam = std::vector<std::vector<std::vector<std::vector<double>>>>(
      n, std::vector<std::vector<std::vector<double>>>(
             n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))));
  // dginv[e][a][d] = d_e g^{ad} = -g^{am} dg[e][m][k] g^{kd}
  auto dginv = std::vector<std::vector<std::vector<double>>>(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int e = 0; e < n; ++e)
    for (int a = 0; a < n; ++a)
      for (int d = 0; d < n; ++d) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m)
          for (int k = 0; k < n; ++k) acc += ginv[a][m] * dg[e][m][k] * ginv[k][d];
        dginv[e][a][d] = -acc;
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double acc = 0.0;
        for (int d = 0; d < n; ++d)
          acc += 0.5 * ginv[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
        Gam[a][b][c] = acc;
        for (int e = 0; e < n; ++e) {
          double de = 0.0;
          for (int d = 0; d < n; ++d) {
            de += 0.5 * dginv[e][a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
            de += 0.5 * ginv[a][d] * (ddg[e][b][d][c] + ddg[e][c][d][b] - ddg[e][d][b][c]);
          }
          dGam[e][a][b][c] = de;
        }
      }

  CurvaturePack out;
  out.dim = n;
  out.metric = TensorValue::zeros(n, {Valence::Down, Valence::Down});
  out.metric.sym_pairs = {{0, 1}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) out.metric(a, b) = g[a][b];

  out.christoffel = TensorValue::zeros(n, {Valence::Up, Valence::Down, Valence::Down});
  out.christoffel.sym_pairs = {{1, 2}};
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) out.christoffel(c, a, b) = Gam[c][a][b];

  // R^a_bcd, then lower the first slot
  out.riemann =
      TensorValue::zeros(n, {Valence::Down, Valence::Down, Valence::Down, Valence::Down});
  out.riemann.antisym_pairs = {{0, 1}, {2, 3}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double up = dGam[c][a][d][b] - dGam[d][a][c][b];
          for (int e = 0; e < n; ++e)
            up += Gam[a][c][e] * Gam[e][d][b] - Gam[a][d][e] * Gam[e][c][b];
          for (int f = 0; f < n; ++f) {
            // accumulate g_fa R^a_bcd into slot (f,b,c,d)
            out.riemann(f, b, c, d) += g[f][a] * up;
          }
        }

  out.ricci = TensorValue::zeros(n, {Valence::Down, Valence::Down});
  out.ricci.sym_pairs = {{0, 1}};
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      double acc = 0.0;
      for (int a = 0; a < n; ++a)
        for (int f = 0; f < n; ++f) acc += ginv[a][f] * out.riemann(f, b, a, d);
      out.ricci(b, d) = acc;
    }

  out.scal = 0.0;
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) out.scal += ginv[b][d] * out.ricci(b, d);

  out.sectional = Mat::Zero(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const double denom = g[a][a] * g[b][b] - g[a][b] * g[a][b];
      out.sectional(a, b) = out.riemann(a, b, a, b) / denom;
    }

  out.j_scalar = out.scal / (2.0 * (n - 1));
  if (n >= 3) {
    out.schouten = TensorValue::zeros(n, {Valence::Down, Valence::Down});
    out.schouten.sym_pairs = {{0, 1}};
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        out.schouten(a, b) = (out.ricci(a, b) - out.j_scalar * g[a][b]) / (n - 2);

    out.weyl = TensorValue::zeros(
        n, {Valence::Down, Valence::Down, Valence::Down, Valence::Down});
    out.weyl.antisym_pairs = {{0, 1}, {2, 3}};
    const auto& P = out.schouten;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            out.weyl(a, b, c, d) =
                out.riemann(a, b, c, d) - (g[a][c] * P(b, d) + g[b][d] * P(a, c) -
                                           g[a][d] * P(b, c) - g[b][c] * P(a, d));
  }
  return out;
}

CurvaturePack curvature(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  return curvature_from_metric(base_metric_field(m), q.coords);
}

TensorValue riemann(ManifoldId m, const Point& p) { return curvature(m, p).riemann; }
TensorValue ricci(ManifoldId m, const Point& p) { return curvature(m, p).ricci; }
double scalar_curvature(ManifoldId m, const Point& p) { return curvature(m, p).scal; }

double sectional(ManifoldId m, const Point& p, int a, int b) {
  if (a == b) throw Error("sectional: repeated coordinate direction");
  return curvature(m, p).sectional(a, b);
}

TensorValue schouten(ManifoldId m, const Point& p) { return curvature(m, p).schouten; }
TensorValue weyl(ManifoldId m, const Point& p) { return curvature(m, p).weyl; }

TensorValue einstein_defect(ManifoldId m, const Point& p) {
  CurvaturePack c = curvature(m, p);
  const int n = c.dim;
  TensorValue d = TensorValue::zeros(n, {Valence::Down, Valence::Down});
  d.sym_pairs = {{0, 1}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      d(a, b) = c.ricci(a, b) - (c.scal / n) * c.metric(a, b);
  return d;
}

TensorValue riemann_closed(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  const auto R = riemann_components(m, q.coords);
  const int n = manifold_dim(m);
  TensorValue t =
      TensorValue::zeros(n, {Valence::Down, Valence::Down, Valence::Down, Valence::Down});
  t.antisym_pairs = {{0, 1}, {2, 3}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) t(a, b, c, d) = R[a][b][c][d];
  return t;
}

TensorValue ricci_closed(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  const auto r = ricci_components(m, q.coords);
  const int n = manifold_dim(m);
  TensorValue t = TensorValue::zeros(n, {Valence::Down, Valence::Down});
  t.sym_pairs = {{0, 1}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = r[a][b];
  return t;
}

TensorValue riemann_fd(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  const int n = manifold_dim(m);
  DomainPredicate dom = [m, &q](const std::vector<double>& x) {
    return domain_check(Point{m, q.chart, x});
  };
  // dGam[e][a][b][c] = d_e Gamma^a_bc by Richardson differences of the table
  auto dGam = std::vector<std::vector<std::vector<std::vector<double>>>>(
      n, std::vector<std::vector<std::vector<double>>>(
             n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0))));
  for (int e = 0; e < n; ++e) {
    const double h = default_step(q.coords[e]);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = b; c < n; ++c) {
          ScalarField f = [m, a, b, c](const std::vector<double>& x) {
            return christoffel_components(m, x)[a][b][c];
          };
          const double v = central_difference_richardson(f, q.coords, e, h, dom);
          dGam[e][a][b][c] = v;
          dGam[e][a][c][b] = v;
        }
  }
  const auto Gam = christoffel_components(m, q.coords);
  const auto g = metric_components(m, q.coords);
  TensorValue t =
      TensorValue::zeros(n, {Valence::Down, Valence::Down, Valence::Down, Valence::Down});
  t.antisym_pairs = {{0, 1}, {2, 3}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          double up = dGam[c][a][d][b] - dGam[d][a][c][b];
          for (int e = 0; e < n; ++e)
            up += Gam[a][c][e] * Gam[e][d][b] - Gam[a][d][e] * Gam[e][c][b];
          for (int f = 0; f < n; ++f) t(f, b, c, d) += g[f][a] * up;
        }
  return t;
}

TensorValue conformal_rescale(ManifoldId m, const Point& p, const LinearUpsilon& ups) {
  const Point q = to_primary(p);
  TensorValue g = metric(m, q);
  const double f = std::exp(2.0 * ups(q.coords));
  for (auto& e : g.entries) e *= f;
  return g;
}

}  // namespace holo
