#include "holo/manifolds.hpp"

#include <cmath>

#include "holo/derivatives.hpp"
#include "holo/rng.hpp"

namespace holo {

Chart primary_chart(ManifoldId m) {
  return (m == ManifoldId::IndependenceSub || m == ManifoldId::ConeOverIndependence)
             ? Chart::NaturalParams
             : Chart::SourceParams;
}

bool domain_check(const Point& p) {
  const auto& x = p.coords;
  if (p.dim() != manifold_dim(p.manifold)) return false;
  for (double c : x)
    if (!std::isfinite(c)) return false;
  switch (p.manifold) {
    case ManifoldId::BivariateGaussian:
      if (p.chart == Chart::SourceParams)
        return x[2] > 0.0 && x[3] > 0.0 && x[2] * x[3] - x[4] * x[4] > 0.0;
      return x[2] < 0.0 && x[4] < 0.0 && 4.0 * x[2] * x[4] - x[3] * x[3] > 0.0;
    case ManifoldId::IndependenceSub:
      if (p.chart == Chart::SourceParams) return x[2] > 0.0 && x[3] > 0.0;
      return x[2] < 0.0 && x[3] < 0.0;
    case ManifoldId::UnivariateGaussian:
      if (p.chart == Chart::SourceParams) return x[1] > 0.0;
      return x[1] < 0.0;
    case ManifoldId::ConeOverIndependence:
      // (th1..th4, t) with (th) in the natural domain of I and t > 0
      return p.chart == Chart::NaturalParams && x[2] < 0.0 && x[3] < 0.0 && x[4] > 0.0;
  }
  return false;
}

double delta(const Point& p) {
  if (p.manifold != ManifoldId::BivariateGaussian)
    throw ChartError("delta: defined on the bivariate manifold");
  if (p.chart != Chart::SourceParams)
    throw ChartError("delta: expects the source-parameter chart");
  return p.coords[2] * p.coords[3] - p.coords[4] * p.coords[4];
}

Point to_natural(const Point& p) {
  if (p.chart == Chart::NaturalParams) return p;
  if (!domain_check(p)) throw DomainError("to_natural: point outside domain");
  Point q{p.manifold, Chart::NaturalParams, to_natural_coords(p.manifold, p.coords)};
  if (!domain_check(q))
    throw DomainError("to_natural: image violates natural-chart constraints");
  return q;
}

Point from_natural(const Point& p) {
  if (p.chart == Chart::SourceParams) return p;
  if (!domain_check(p)) throw DomainError("from_natural: point outside domain");
  Point q{p.manifold, Chart::SourceParams, from_natural_coords(p.manifold, p.coords)};
  if (!domain_check(q))
    throw DomainError("from_natural: image violates source-chart constraints");
  return q;
}

Point to_primary(const Point& p) {
  const Chart want = primary_chart(p.manifold);
  if (p.chart == want) {
    if (!domain_check(p)) throw DomainError("point outside domain");
    return p;
  }
  return want == Chart::NaturalParams ? to_natural(p) : from_natural(p);
}

double potential(const Point& theta) {
  if (theta.chart != Chart::NaturalParams)
    throw ChartError("potential: expects natural coordinates");
  if (!domain_check(theta)) throw DomainError("potential: invalid natural coordinates");
  return potential_components(theta.manifold, theta.coords);
}

TensorValue metric(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  auto g = metric_components(m, q.coords);
  const int n = manifold_dim(m);
  TensorValue t = TensorValue::zeros(n, {Valence::Down, Valence::Down});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = g[a][b];
  t.sym_pairs = {{0, 1}};
  return t;
}

TensorValue metric(const ManifoldSpec& m, const Point& p) { return metric(m.id, p); }

TensorValue metric_from_potential(const Point& theta) {
  if (theta.chart != Chart::NaturalParams)
    throw ChartError("metric_from_potential: expects natural coordinates");
  if (!domain_check(theta)) throw DomainError("metric_from_potential: invalid point");
  const ManifoldId m = theta.manifold;
  const int n = manifold_dim(m);
  ScalarField phi = [m](const std::vector<double>& t) {
    return potential_components(m, t);
  };
  DomainPredicate dom = [m](const std::vector<double>& t) {
    return domain_check(Point{m, Chart::NaturalParams, t});
  };
  TensorValue g = TensorValue::zeros(n, {Valence::Down, Valence::Down});
  for (int a = 0; a < n; ++a) {
    const double ha = 1e-4 * std::max(1.0, std::abs(theta.coords[a]));
    for (int b = a; b < n; ++b) {
      const double hb = 1e-4 * std::max(1.0, std::abs(theta.coords[b]));
      const double v = second_difference(phi, theta.coords, a, b, ha, hb, dom);
      g(a, b) = v;
      g(b, a) = v;
    }
  }
  g.sym_pairs = {{0, 1}};
  return g;
}

TensorValue christoffel(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  auto G = christoffel_components(m, q.coords);
  const int n = manifold_dim(m);
  TensorValue t = TensorValue::zeros(n, {Valence::Up, Valence::Down, Valence::Down});
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t(c, a, b) = G[c][a][b];
  t.sym_pairs = {{1, 2}};
  return t;
}

TensorValue christoffel(const ManifoldSpec& m, const Point& p) {
  return christoffel(m.id, p);
}

TensorValue christoffel_lowered(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  auto G = christoffel_components(m, q.coords);
  auto g = metric_components(m, q.coords);
  const int n = manifold_dim(m);
  TensorValue t = TensorValue::zeros(n, {Valence::Down, Valence::Down, Valence::Down});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        double acc = 0.0;
        for (int d = 0; d < n; ++d) acc += g[c][d] * G[d][a][b];
        t(a, b, c) = acc;
      }
  t.sym_pairs = {{0, 1}};
  return t;
}

TensorValue christoffel_fd(ManifoldId m, const Point& p) {
  const Point q = to_primary(p);
  const int n = manifold_dim(m);
  DomainPredicate dom = [m, &q](const std::vector<double>& x) {
    return domain_check(Point{m, q.chart, x});
  };
  // dg[c][a][b] = d_c g_ab via Richardson-extrapolated central differences
  std::vector<std::vector<std::vector<double>>> dg(
      n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (int c = 0; c < n; ++c) {
    const double h = default_step(q.coords[c]);
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        ScalarField fab = [m, a, b](const std::vector<double>& x) {
          return metric_components(m, x)[a][b];
        };
        const double v = central_difference_richardson(fab, q.coords, c, h, dom);
        dg[c][a][b] = v;
        dg[c][b][a] = v;
      }
  }
  auto g = metric_components(m, q.coords);
  std::vector<std::vector<double>> ginv;
  if (!invert_matrix(g, ginv)) throw DegeneracyError("christoffel_fd: singular metric", 0, 0);
  TensorValue t = TensorValue::zeros(n, {Valence::Up, Valence::Down, Valence::Down});
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double acc = 0.0;
        for (int d = 0; d < n; ++d)
          acc += 0.5 * ginv[c][d] * (dg[a][d][b] + dg[b][d][a] - dg[d][a][b]);
        t(c, a, b) = acc;
      }
  t.sym_pairs = {{1, 2}};
  return t;
}

TensorValue alpha_connection(const Point& theta, double alpha) {
  if (theta.chart != Chart::NaturalParams)
    throw ChartError("alpha_connection: expects natural coordinates");
  if (!domain_check(theta)) throw DomainError("alpha_connection: invalid point");
  const ManifoldId m = theta.manifold;
  const int n = manifold_dim(m);
  ScalarField phi = [m](const std::vector<double>& t) {
    return potential_components(m, t);
  };
  DomainPredicate dom = [m](const std::vector<double>& t) {
    return domain_check(Point{m, Chart::NaturalParams, t});
  };
  auto step3 = [&](int i) { return 1e-3 * std::max(1.0, std::abs(theta.coords[i])); };
  TensorValue t = TensorValue::zeros(n, {Valence::Down, Valence::Down, Valence::Down});
  const double factor = 0.5 * (1.0 - alpha);
  if (factor != 0.0) {
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b)
        for (int c = b; c < n; ++c) {
          const double v =
              factor * third_difference_richardson(phi, theta.coords, a, b, c, step3(a),
                                                   step3(b), step3(c), dom);
          int perm[6][3] = {{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}};
          for (auto& pr : perm) t(pr[0], pr[1], pr[2]) = v;
        }
  }
  t.sym_pairs = {{0, 1}, {1, 2}};
  return t;
}

TensorValue natural_metric(ManifoldId m, const std::vector<double>& theta) {
  const int n = manifold_dim(m);
  std::vector<J2> tj(n);
  for (int i = 0; i < n; ++i) tj[i] = j2_variable(theta[i], i);
  const J2 phi = potential_components(m, tj);
  TensorValue g = TensorValue::zeros(n, {Valence::Down, Valence::Down});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g(a, b) = phi.d[a].d[b];
  g.sym_pairs = {{0, 1}};
  return g;
}

TensorValue natural_christoffel_lowered(ManifoldId m, const std::vector<double>& theta) {
  const int n = manifold_dim(m);
  std::vector<J3> tj(n);
  for (int i = 0; i < n; ++i) tj[i] = j3_variable(theta[i], i);
  const J3 phi = potential_components(m, tj);
  TensorValue t = TensorValue::zeros(n, {Valence::Down, Valence::Down, Valence::Down});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t(a, b, c) = 0.5 * phi.d[a].d[b].d[c];
  t.sym_pairs = {{0, 1}, {1, 2}};
  return t;
}

Mat chart_jacobian(const Point& p_source) {
  if (p_source.chart != Chart::SourceParams)
    throw ChartError("chart_jacobian: expects a source-chart point");
  const ManifoldId m = p_source.manifold;
  const int n = manifold_dim(m);
  std::vector<J1> xj(n);
  for (int i = 0; i < n; ++i) xj[i] = j1_variable(p_source.coords[i], i);
  auto th = to_natural_coords(m, xj);
  Mat J(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) J(r, c) = th[r].d[c];
  return J;
}

DomainBox sampling_box(ManifoldId m) {
  DomainBox box;
  switch (m) {
    case ManifoldId::BivariateGaussian:
      box.ranges = {{-2, 2}, {-2, 2}, {0.5, 3}, {0.5, 3}, {-1.2, 1.2}};
      box.delta_min = 0.1;
      break;
    case ManifoldId::IndependenceSub:
      box.ranges = {{-2, 2}, {-2, 2}, {0.5, 3}, {0.5, 3}};
      box.delta_min = 0.0;
      break;
    case ManifoldId::UnivariateGaussian:
      box.ranges = {{-2, 2}, {0.5, 3}};
      box.delta_min = 0.0;
      break;
    case ManifoldId::ConeOverIndependence:
      box.ranges = {{-0.8, 0.8}, {-0.8, 0.8}, {-0.9, -0.2}, {-0.9, -0.2}, {0.7, 1.5}};
      box.delta_min = 0.0;
      break;
  }
  return box;
}

DomainBox safe_box(ManifoldId m) {
  DomainBox box;
  switch (m) {
    case ManifoldId::BivariateGaussian:
      // convex; on it Delta >= 0.8*0.8 - 0.35^2 > 0.5
      box.ranges = {{-1, 1}, {-1, 1}, {0.8, 2.0}, {0.8, 2.0}, {-0.35, 0.35}};
      box.delta_min = 0.5;
      break;
    case ManifoldId::IndependenceSub:
      // natural chart: th3, th4 bounded away from 0
      box.ranges = {{-0.8, 0.8}, {-0.8, 0.8}, {-0.9, -0.2}, {-0.9, -0.2}};
      box.delta_min = 0.0;
      break;
    case ManifoldId::UnivariateGaussian:
      box.ranges = {{-2, 2}, {0.5, 3}};
      box.delta_min = 0.0;
      break;
    case ManifoldId::ConeOverIndependence:
      box.ranges = {{-0.8, 0.8}, {-0.8, 0.8}, {-0.9, -0.2}, {-0.9, -0.2}, {0.7, 1.5}};
      box.delta_min = 0.0;
      break;
  }
  return box;
}

bool box_contains(const DomainBox& box, ManifoldId m, Chart chart,
                  const std::vector<double>& x) {
  if (x.size() != box.ranges.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < box.ranges[i].first || x[i] > box.ranges[i].second) return false;
  if (!domain_check(Point{m, chart, x})) return false;
  if (m == ManifoldId::BivariateGaussian && chart == Chart::SourceParams &&
      box.delta_min > 0.0)
    return x[2] * x[3] - x[4] * x[4] >= box.delta_min;
  return true;
}

std::vector<double> random_box_point(const DomainBox& box, ManifoldId m, Chart chart,
                                     std::uint64_t seed, std::uint64_t index) {
  SplitMix rng(mix_seed(seed, index));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<double> x(box.ranges.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      x[i] = rng.range(box.ranges[i].first, box.ranges[i].second);
    if (box_contains(box, m, chart, x)) return x;
  }
  throw Error("random_box_point: rejection sampling failed");
}

std::vector<double> random_domain_point(ManifoldId m, std::uint64_t seed,
                                        std::uint64_t index) {
  const Chart chart = m == ManifoldId::ConeOverIndependence ? Chart::NaturalParams
                                                            : Chart::SourceParams;
  return random_box_point(sampling_box(m), m, chart, seed, index);
}

namespace {

ManifoldSpec make_spec(ManifoldId id) {
  ManifoldSpec s;
  s.id = id;
  s.dim = manifold_dim(id);
  s.charts = id == ManifoldId::ConeOverIndependence
                 ? std::vector<Chart>{Chart::NaturalParams}
                 : std::vector<Chart>{Chart::SourceParams, Chart::NaturalParams};
  s.metric_fn = [id](const Point& p) { return metric(id, p); };
  s.christoffel_fn = [id](const Point& p) { return christoffel(id, p); };
  s.potential_fn = [](const Point& p) { return potential(to_natural(p)); };
  return s;
}

}  // namespace

const ManifoldSpec& manifold_spec(ManifoldId id) {
  static const ManifoldSpec g = make_spec(ManifoldId::BivariateGaussian);
  static const ManifoldSpec i = make_spec(ManifoldId::IndependenceSub);
  static const ManifoldSpec u = make_spec(ManifoldId::UnivariateGaussian);
  static const ManifoldSpec c = make_spec(ManifoldId::ConeOverIndependence);
  switch (id) {
    case ManifoldId::BivariateGaussian: return g;
    case ManifoldId::IndependenceSub: return i;
    case ManifoldId::ConeOverIndependence: return c;
    default: return u;
  }
}

}  // namespace holo
