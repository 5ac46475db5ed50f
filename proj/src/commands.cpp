#include "holo/commands.hpp"

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "holo/curvature.hpp"
#include "holo/fisher.hpp"
#include "holo/holonomy.hpp"
#include "holo/loops.hpp"
#include "holo/manifolds.hpp"
#include "holo/matlog.hpp"
#include "holo/tractor.hpp"
#include "holo/transport.hpp"

namespace holo {

namespace {

struct EvalPoint {
  Point source;
  Point primary;
  CurvaturePack pack;
};

std::vector<EvalPoint> tensor_eval_points(ManifoldId id, const Point& base_source,
                                          int count, std::uint64_t seed) {
  std::vector<std::vector<double>> named;
  if (id == ManifoldId::BivariateGaussian)
    named = {{0, 0, 2, 3, 1}, {0.3, -0.4, 1.3, 0.9, 0.2}};
  else
    named = {{1, 0, 2, 1}, {0.6, -0.24, 1.5, 0.8}};

  std::vector<EvalPoint> out;
  auto push = [&](std::vector<double> x) {
    EvalPoint e;
    e.source = Point{id, Chart::SourceParams, std::move(x)};
    e.primary = to_primary(e.source);
    e.pack = curvature(id, e.primary);
    out.push_back(std::move(e));
  };
  push(base_source.coords);
  for (auto& x : named) push(x);
  for (int i = 0; i < count; ++i) push(random_domain_point(id, seed, 1000 + i));
  return out;
}

double max_dev(const TensorValue& a, const TensorValue& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    worst = std::max(worst, std::abs(a.entries[i] - b.entries[i]));
  return worst;
}

Record dev_record(const std::string& name, const std::string& target, double dev,
                  double tol) {
  Record r;
  r.name = name;
  r.target = target;
  r.computed = dev;
  r.tolerance = tol;
  r.pass = dev <= tol;
  return r;
}

Record value_record(const std::string& name, const std::string& target, double value,
                    double expected, double tol) {
  Record r;
  r.name = name;
  r.target = target;
  r.computed = value;
  r.tolerance = tol;
  r.pass = std::abs(value - expected) <= tol;
  return r;
}

std::string number_list(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += format_double(xs[i]);
  }
  return s;
}

double weyl_trace_dev(const CurvaturePack& pack) {
  if (pack.weyl.entries.empty()) return 0.0;
  const Mat gi = pack.metric.as_matrix().inverse();
  const int n = pack.dim;
  double worst = 0.0;
  for (int b = 0; b < n; ++b)
    for (int d = 0; d < n; ++d) {
      double t = 0.0;
      for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) t += gi(a, c) * pack.weyl(a, b, c, d);
      worst = std::max(worst, std::abs(t));
    }
  return worst;
}

double schouten_trace_dev(const CurvaturePack& pack) {
  const Mat gi = pack.metric.as_matrix().inverse();
  double tr = 0.0;
  for (int a = 0; a < pack.dim; ++a)
    for (int b = 0; b < pack.dim; ++b) tr += gi(a, b) * pack.schouten(a, b);
  return std::abs(tr - pack.j_scalar);
}

double bianchi_first_dev(const CurvaturePack& pack) {
  const int n = pack.dim;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          worst = std::max(worst, std::abs(pack.riemann(a, b, c, d) +
                                           pack.riemann(a, c, d, b) +
                                           pack.riemann(a, d, b, c)));
  return worst;
}

double pair_symmetry_dev(const CurvaturePack& pack) {
  const int n = pack.dim;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          worst = std::max(worst,
                           std::abs(pack.riemann(a, b, c, d) - pack.riemann(c, d, a, b)));
  return worst;
}

double antisymmetry_dev(const CurvaturePack& pack) {
  const int n = pack.dim;
  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          worst = std::max(worst,
                           std::abs(pack.riemann(a, b, c, d) + pack.riemann(b, a, c, d)));
          worst = std::max(worst,
                           std::abs(pack.riemann(a, b, c, d) + pack.riemann(a, b, d, c)));
        }
  return worst;
}

// Exact d_c g_ab via first-order jets of the metric table.
double compatibility_dev(ManifoldId id, const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<J1> xj;
  xj.reserve(x.size());
  for (int i = 0; i < n; ++i) xj.push_back(j1_variable(x[i], i));
  const auto gj = metric_components(id, xj);
  const auto g = metric_components(id, x);
  const auto G = christoffel_components(id, x);
  double worst = 0.0;
  for (int c = 0; c < n; ++c)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        double s = gj[a][b].d[c];
        for (int e = 0; e < n; ++e) s -= G[e][c][a] * g[e][b] + G[e][c][b] * g[a][e];
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

// Sectional curvature closed forms, internal index pairs.
double sectional_closed_bivariate(int a, int b, const std::vector<double>& s) {
  if (a > b) std::swap(a, b);
  const double s1 = s[2], s2 = s[3], q = s[4] * s[4];
  if (a == 0 && b == 1) return 0.25;
  if ((a == 0 && b == 2) || (a == 1 && b == 3) || (a == 2 && b == 4) || (a == 3 && b == 4))
    return -0.5;
  if ((a == 0 && b == 3) || (a == 1 && b == 2)) return -q / (2.0 * s1 * s2);
  if ((a == 0 && b == 4) || (a == 1 && b == 4))
    return -(s1 * s2 + 3.0 * q) / (4.0 * (s1 * s2 + q));
  return -q / (s1 * s2 + q);  // internal (2,3)
}

void tensor_records_bivariate(VerificationReport& rep, const std::string& sec,
                              const RunConfig& cfg, const Point& base) {
  const ManifoldId id = ManifoldId::BivariateGaussian;
  const double tol = cfg.tolerance;
  const auto pts = tensor_eval_points(id, base, cfg.sample_points, cfg.seed);

  double d_metric = 0, d_hess_fd = 0, d_gamma = 0, d_gamma_fd = 0;
  double d_riem = 0, d_ricci = 0, d_scal = 0;
  double d_weyl = 0, d_weyl_tr = 0, d_schouten = 0;
  // display index (1..5) -> internal index
  const int im[5] = {0, 1, 2, 4, 3};
  Mat d_sect = Mat::Zero(5, 5);

  for (const auto& e : pts) {
    const Point th = to_natural(e.source);
    const Mat hess = natural_metric(id, th.coords).as_matrix();
    const Mat jac = chart_jacobian(e.source);
    const Mat tab = metric(id, e.primary).as_matrix();
    d_metric = std::max(d_metric, (tab - jac.transpose() * hess * jac).cwiseAbs().maxCoeff());
    d_hess_fd = std::max(
        d_hess_fd, (metric_from_potential(th).as_matrix() - hess).cwiseAbs().maxCoeff());

    d_gamma = std::max(d_gamma, max_dev(christoffel(id, e.primary), e.pack.christoffel));
    d_gamma_fd =
        std::max(d_gamma_fd, max_dev(christoffel(id, e.primary), christoffel_fd(id, e.primary)));
    d_riem = std::max(d_riem, max_dev(riemann_closed(id, e.primary), e.pack.riemann));
    d_ricci = std::max(d_ricci, max_dev(ricci_closed(id, e.primary), e.pack.ricci));
    d_scal = std::max(d_scal, std::abs(e.pack.scal + 4.5));

    for (int i = 1; i <= 5; ++i)
      for (int j = i + 1; j <= 5; ++j) {
        const int a = im[i - 1], b = im[j - 1];
        const double closed = sectional_closed_bivariate(a, b, e.source.coords);
        d_sect(i - 1, j - 1) =
            std::max(d_sect(i - 1, j - 1), std::abs(e.pack.sectional(a, b) - closed));
      }

    const double s1 = e.source.coords[2], s2 = e.source.coords[3], s12 = e.source.coords[4];
    const double del = s1 * s2 - s12 * s12;
    d_weyl = std::max(d_weyl, std::abs(e.pack.weyl(0, 1, 2, 4) + s2 / (4.0 * del * del)));
    d_weyl_tr = std::max(d_weyl_tr, weyl_trace_dev(e.pack));
    d_schouten = std::max(d_schouten, schouten_trace_dev(e.pack));
  }

  rep.add(sec, dev_record("metric_vs_potential_hessian",
                          "g = Hess(phi), pulled back through theta(xi)", d_metric, tol));
  rep.add(sec, dev_record("potential_hessian_fd",
                          "g = Hess(phi), second differences of phi", d_hess_fd, 1e-3));
  rep.add(sec, dev_record("christoffel_table_vs_pipeline",
                          "Gamma^c_ab = (1/2) g^{cd} (d_a g_bd + d_b g_ad - d_d g_ab)",
                          d_gamma, tol));
  rep.add(sec, dev_record("christoffel_vs_finite_differences",
                          "Gamma^c_ab from central differences of the metric",
                          d_gamma_fd, 1e-6));
  rep.add(sec, dev_record("riemann_table_vs_pipeline",
                          "R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + Gamma^a_ce "
                          "Gamma^e_db - Gamma^a_de Gamma^e_cb",
                          d_riem, tol));
  rep.add(sec, dev_record("ricci_table_vs_pipeline", "Ric_bd = R^a_bad", d_ricci, tol));
  rep.add(sec, value_record("scal_base", "scal = -9/2", pts[0].pack.scal, -4.5, tol));
  rep.add(sec, dev_record("scal_sampled", "scal = -9/2", d_scal, tol));
  rep.add(sec, value_record("j_scalar", "J = scal/(2(n-1)) = -9/16", pts[0].pack.j_scalar,
                            -9.0 / 16.0, tol));

  const char* sect_targets[5][5] = {};
  (void)sect_targets;
  const struct {
    int i, j;
    const char* target;
  } sect[] = {
      {1, 2, "k(1,2) = 1/4"},
      {1, 3, "k(1,3) = -1/2"},
      {1, 4, "k(1,4) = -(sigma1 sigma2 + 3 sigma12^2)/(4 (sigma1 sigma2 + sigma12^2))"},
      {1, 5, "k(1,5) = -sigma12^2/(2 sigma1 sigma2)"},
      {2, 3, "k(2,3) = -sigma12^2/(2 sigma1 sigma2)"},
      {2, 4, "k(2,4) = -(sigma1 sigma2 + 3 sigma12^2)/(4 (sigma1 sigma2 + sigma12^2))"},
      {2, 5, "k(2,5) = -1/2"},
      {3, 4, "k(3,4) = -1/2"},
      {3, 5, "k(3,5) = -sigma12^2/(sigma1 sigma2 + sigma12^2)"},
      {4, 5, "k(4,5) = -1/2"},
  };
  for (const auto& s : sect)
    rep.add(sec, dev_record("sectional_" + std::to_string(s.i) + std::to_string(s.j),
                            s.target, d_sect(s.i - 1, s.j - 1), tol));

  rep.add(sec, dev_record("weyl_C1234", "C_1234 = -sigma2/(4 Delta^2)", d_weyl, tol));
  rep.add(sec, dev_record("weyl_trace", "g^{ac} C_abcd = 0", d_weyl_tr, tol));
  rep.add(sec, dev_record("schouten_trace", "g^{ab} P_ab = J", d_schouten, tol));

  {
    Record r;
    r.name = "riemann_display_sign";
    r.target = "R_1212 = -1/(4 Delta)";
    r.computed = pts[0].pack.riemann(0, 1, 0, 1);
    r.tolerance = 0.0;
    r.pass = true;
    r.checked = false;
    r.note = "the stated component display carries an overall sign relative to the "
             "convention R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + ...; under that "
             "convention R_1212 = +1/(4 Delta), shown here at the base point; the closed "
             "tables follow the convention and are cross-checked against finite differences";
    rep.add(sec, r);
  }
  {
    Record r;
    r.name = "einstein_defect_base";
    r.target = "Ric - (scal/n) g";
    r.computed = einstein_defect(id, pts[0].primary).max_abs();
    r.tolerance = 0.0;
    r.pass = true;
    r.checked = false;
    r.note = "the bivariate Fisher-Rao metric is not Einstein; contrast with the "
             "independence submanifold, where the defect vanishes";
    rep.add(sec, r);
  }
}

void tensor_records_independence(VerificationReport& rep, const std::string& sec,
                                 const RunConfig& cfg, const Point& base) {
  const ManifoldId id = ManifoldId::IndependenceSub;
  const double tol = cfg.tolerance;
  const auto pts = tensor_eval_points(id, base, cfg.sample_points, cfg.seed);

  double d_metric = 0, d_hess_fd = 0, d_metric_disp = 0, d_gamma = 0, d_gamma_fd = 0;
  double d_riem = 0, d_riem2 = 0;
  double d_r1313 = 0, d_r2424 = 0, d_ricci_disp = 0, d_scal = 0, d_einstein = 0;
  double d_schouten_e = 0, d_schouten_tr = 0, d_sect13 = 0, d_sect24 = 0, d_sect0 = 0;
  double d_c1313 = 0, d_c1234 = 0, d_weyl_tr = 0;

  struct GammaCheck {
    const char* name;
    const char* target;
    bool lowered;
    int i, j, k;
    std::function<double(double, double, double, double)> form;
  };
  const std::vector<GammaCheck> gammas = {
      {"Gamma_13,1", "Gamma_13,1 = sigma1^2", true, 0, 2, 0,
       [](double, double, double s1, double) { return s1 * s1; }},
      {"Gamma_33,1", "Gamma_33,1 = 4 mu1 sigma1^2", true, 2, 2, 0,
       [](double m1, double, double s1, double) { return 4.0 * m1 * s1 * s1; }},
      {"Gamma_24,2", "Gamma_24,2 = sigma2^2", true, 1, 3, 1,
       [](double, double, double, double s2) { return s2 * s2; }},
      {"Gamma_44,2", "Gamma_44,2 = 4 mu2 sigma2^2", true, 3, 3, 1,
       [](double, double m2, double, double s2) { return 4.0 * m2 * s2 * s2; }},
      {"Gamma_33,3_resolved", "Gamma_33,3 = 4 sigma1^2 (3 mu1^2 + sigma1)", true, 2, 2, 2,
       [](double m1, double, double s1, double) { return 4.0 * s1 * s1 * (3.0 * m1 * m1 + s1); }},
      {"Gamma_11^1", "Gamma_11^1 = -mu1", false, 0, 0, 0,
       [](double m1, double, double, double) { return -m1; }},
      {"Gamma_13^3", "Gamma_13^3 = mu1", false, 2, 0, 2,
       [](double m1, double, double, double) { return m1; }},
      {"Gamma_31^1", "Gamma_31^1 = sigma1 - 2 mu1^2", false, 0, 2, 0,
       [](double m1, double, double s1, double) { return s1 - 2.0 * m1 * m1; }},
      {"Gamma_11^3", "Gamma_11^3 = 1/2", false, 2, 0, 0,
       [](double, double, double, double) { return 0.5; }},
      {"Gamma_22^4", "Gamma_22^4 = 1/2", false, 3, 1, 1,
       [](double, double, double, double) { return 0.5; }},
      {"Gamma_33^1", "Gamma_33^1 = -4 mu1^3", false, 0, 2, 2,
       [](double m1, double, double, double) { return -4.0 * m1 * m1 * m1; }},
      {"Gamma_33^3", "Gamma_33^3 = 2 (sigma1 + mu1^2)", false, 2, 2, 2,
       [](double m1, double, double s1, double) { return 2.0 * (s1 + m1 * m1); }},
      {"Gamma_22^2", "Gamma_22^2 = -mu2", false, 1, 1, 1,
       [](double, double m2, double, double) { return -m2; }},
      {"Gamma_24^4", "Gamma_24^4 = mu2", false, 3, 1, 3,
       [](double, double m2, double, double) { return m2; }},
      {"Gamma_42^2_resolved", "Gamma_42^2 = sigma2 - 2 mu2^2", false, 1, 3, 1,
       [](double, double m2, double, double s2) { return s2 - 2.0 * m2 * m2; }},
      {"Gamma_44^2", "Gamma_44^2 = -4 mu2^3", false, 1, 3, 3,
       [](double, double m2, double, double) { return -4.0 * m2 * m2 * m2; }},
      {"Gamma_44^4", "Gamma_44^4 = 2 (sigma2 + mu2^2)", false, 3, 3, 3,
       [](double, double m2, double, double s2) { return 2.0 * (s2 + m2 * m2); }},
  };
  std::vector<double> d_gammas(gammas.size(), 0.0);

  for (const auto& e : pts) {
    const double m1 = e.source.coords[0], m2 = e.source.coords[1];
    const double s1 = e.source.coords[2], s2 = e.source.coords[3];
    const auto& th = e.primary.coords;

    const Point thp = to_natural(e.source);
    d_metric = std::max(d_metric,
                        max_dev(metric(id, e.primary), natural_metric(id, thp.coords)));
    d_hess_fd = std::max(d_hess_fd, max_dev(metric_from_potential(thp),
                                            natural_metric(id, thp.coords)));

    Mat disp = Mat::Zero(4, 4);
    disp(0, 0) = s1;
    disp(1, 1) = s2;
    disp(0, 2) = disp(2, 0) = 2.0 * m1 * s1;
    disp(1, 3) = disp(3, 1) = 2.0 * m2 * s2;
    disp(2, 2) = 2.0 * s1 * (2.0 * m1 * m1 + s1);
    disp(3, 3) = 2.0 * s2 * (2.0 * m2 * m2 + s2);
    const Mat tab = metric(id, e.primary).as_matrix();
    d_metric_disp = std::max(d_metric_disp, (tab - disp).cwiseAbs().maxCoeff());

    d_gamma = std::max(d_gamma, max_dev(christoffel(id, e.primary), e.pack.christoffel));
    d_gamma_fd =
        std::max(d_gamma_fd, max_dev(christoffel(id, e.primary), christoffel_fd(id, e.primary)));

    const TensorValue gam = christoffel(id, e.primary);
    const TensorValue gam_low = christoffel_lowered(id, e.primary);
    for (std::size_t k = 0; k < gammas.size(); ++k) {
      const auto& gc = gammas[k];
      const double val = gc.lowered ? gam_low(gc.i, gc.j, gc.k) : gam(gc.i, gc.j, gc.k);
      d_gammas[k] = std::max(d_gammas[k], std::abs(val - gc.form(m1, m2, s1, s2)));
    }

    d_riem = std::max(d_riem, max_dev(riemann_closed(id, e.primary), e.pack.riemann));
    TensorValue expct = TensorValue::zeros(4, {Valence::Down, Valence::Down, Valence::Down,
                                               Valence::Down});
    const double r1 = -s1 * s1 * s1, r2 = -s2 * s2 * s2;
    expct(0, 2, 0, 2) = r1;
    expct(2, 0, 0, 2) = -r1;
    expct(0, 2, 2, 0) = -r1;
    expct(2, 0, 2, 0) = r1;
    expct(1, 3, 1, 3) = r2;
    expct(3, 1, 1, 3) = -r2;
    expct(1, 3, 3, 1) = -r2;
    expct(3, 1, 3, 1) = r2;
    d_riem2 = std::max(d_riem2, max_dev(e.pack.riemann, expct));
    d_r1313 = std::max(d_r1313, std::abs(e.pack.riemann(0, 2, 0, 2) - r1));
    d_r2424 = std::max(d_r2424, std::abs(e.pack.riemann(1, 3, 1, 3) - r2));

    const Mat ric_disp = -0.5 * disp;
    d_ricci_disp =
        std::max(d_ricci_disp, (e.pack.ricci.as_matrix() - ric_disp).cwiseAbs().maxCoeff());
    d_scal = std::max(d_scal, std::abs(e.pack.scal + 2.0));

    double de = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        de = std::max(de, std::abs(e.pack.ricci(a, b) -
                                   (e.pack.scal / 4.0) * e.pack.metric(a, b)));
    d_einstein = std::max(d_einstein, de);

    double dp = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        dp = std::max(dp, std::abs(e.pack.schouten(a, b) + e.pack.metric(a, b) / 12.0));
    d_schouten_e = std::max(d_schouten_e, dp);
    d_schouten_tr = std::max(d_schouten_tr, schouten_trace_dev(e.pack));

    d_sect13 = std::max(d_sect13, std::abs(e.pack.sectional(0, 2) + 0.5));
    d_sect24 = std::max(d_sect24, std::abs(e.pack.sectional(1, 3) + 0.5));
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        if ((a == 0 && b == 2) || (a == 1 && b == 3)) continue;
        d_sect0 = std::max(d_sect0, std::abs(e.pack.sectional(a, b)));
      }

    const double t3 = th[2], t4 = th[3];
    d_c1313 = std::max(d_c1313,
                       std::abs(e.pack.weyl(0, 2, 0, 2) - 1.0 / (12.0 * t3 * t3 * t3)));
    d_c1234 = std::max(d_c1234, std::abs(e.pack.weyl(0, 1, 2, 3) -
                                         th[0] * th[1] / (24.0 * t3 * t3 * t4 * t4)));
    d_weyl_tr = std::max(d_weyl_tr, weyl_trace_dev(e.pack));
  }

  rep.add(sec, dev_record("metric_vs_potential_hessian", "g = Hess(phi)", d_metric, tol));
  rep.add(sec, dev_record("potential_hessian_fd",
                          "g = Hess(phi), second differences of phi", d_hess_fd, 1e-3));
  rep.add(sec, dev_record("metric_display",
                          "g = [[sigma1, 0, 2 mu1 sigma1, 0], [0, sigma2, 0, 2 mu2 sigma2], "
                          "[2 mu1 sigma1, 0, 2 sigma1 (2 mu1^2 + sigma1), 0], "
                          "[0, 2 mu2 sigma2, 0, 2 sigma2 (2 mu2^2 + sigma2)]]",
                          d_metric_disp, tol));
  rep.add(sec, dev_record("christoffel_table_vs_pipeline",
                          "Gamma^c_ab = (1/2) g^{cd} (d_a g_bd + d_b g_ad - d_d g_ab)",
                          d_gamma, tol));
  rep.add(sec, dev_record("christoffel_vs_finite_differences",
                          "Gamma^c_ab from central differences of the metric",
                          d_gamma_fd, 1e-6));
  for (std::size_t k = 0; k < gammas.size(); ++k)
    rep.add(sec, dev_record(gammas[k].name, gammas[k].target, d_gammas[k], tol));

  // Two stated connection components do not match the computed table.
  {
    const Point p{id, Chart::SourceParams, {1, 0, 2, 1}};
    const TensorValue gl = christoffel_lowered(id, to_primary(p));
    Record r;
    r.name = "christoffel_display_33_3";
    r.target = "Gamma_33,3 = 4 sigma1^2 (3 mu2^2 + sigma1)";
    r.computed = gl(2, 2, 2);
    r.tolerance = 0.0;
    r.pass = true;
    r.checked = false;
    r.note = "at (mu1, mu2, sigma1, sigma2) = (1, 0, 2, 1) the stated form gives 32; the "
             "computed component is 80 and matches 4 sigma1^2 (3 mu1^2 + sigma1) at every "
             "sampled point (see Gamma_33,3_resolved); the X-factor component cannot "
             "depend on mu2";
    rep.add(sec, r);
  }
  {
    const Point p{id, Chart::SourceParams, {0.6, -0.24, 1.5, 0.8}};
    const TensorValue g = christoffel(id, to_primary(p));
    Record r;
    r.name = "christoffel_display_42_2";
    r.target = "Gamma_42^2 = sigma2 + 2 mu2^2";
    r.computed = g(1, 3, 1);
    r.tolerance = 0.0;
    r.pass = true;
    r.checked = false;
    r.note = "at (mu1, mu2, sigma1, sigma2) = (0.6, -0.24, 1.5, 0.8) the stated form gives "
             "0.9152; the computed component is 0.6848 and matches sigma2 - 2 mu2^2 at "
             "every sampled point (see Gamma_42^2_resolved), mirroring the stated "
             "Gamma_31^1 = sigma1 - 2 mu1^2";
    rep.add(sec, r);
  }

  rep.add(sec, dev_record("riemann_table_vs_pipeline",
                          "R^a_bcd = d_c Gamma^a_db - d_d Gamma^a_cb + Gamma^a_ce "
                          "Gamma^e_db - Gamma^a_de Gamma^e_cb",
                          d_riem, tol));
  rep.add(sec, dev_record("riemann_two_components",
                          "R_1313 and R_2424 are the only non-vanishing independent "
                          "components",
                          d_riem2, tol));
  rep.add(sec, dev_record("R_1313", "R_1313 = -sigma1^3", d_r1313, tol));
  rep.add(sec, dev_record("R_2424", "R_2424 = -sigma2^3", d_r2424, tol));
  rep.add(sec, dev_record("ricci_display",
                          "Ric = -[[sigma1/2, 0, mu1 sigma1, 0], [0, sigma2/2, 0, mu2 "
                          "sigma2], [mu1 sigma1, 0, sigma1 (2 mu1^2 + sigma1), 0], [0, "
                          "mu2 sigma2, 0, sigma2 (2 mu2^2 + sigma2)]]",
                          d_ricci_disp, tol));
  rep.add(sec, value_record("scal_base", "scal = -2", pts[0].pack.scal, -2.0, tol));
  rep.add(sec, dev_record("scal_sampled", "scal = -2", d_scal, tol));
  rep.add(sec, value_record("j_scalar", "J = scal/(2(n-1)) = -1/3", pts[0].pack.j_scalar,
                            -1.0 / 3.0, tol));
  rep.add(sec, dev_record("einstein_defect", "Ric = -(1/2) g", d_einstein,
                          std::min(tol, 1e-9)));
  rep.add(sec, dev_record("schouten_einstein", "P = -g/12", d_schouten_e, tol));
  rep.add(sec, dev_record("schouten_trace", "g^{ab} P_ab = J", d_schouten_tr, tol));
  rep.add(sec, dev_record("sectional_13", "k(1,3) = -1/2", d_sect13, tol));
  rep.add(sec, dev_record("sectional_24", "k(2,4) = -1/2", d_sect24, tol));
  rep.add(sec, dev_record("sectional_zero_planes",
                          "k = 0 on the remaining coordinate planes", d_sect0, tol));
  rep.add(sec, dev_record("weyl_C1313", "C_1313 = 1/(12 theta3^3)", d_c1313, tol));
  rep.add(sec, dev_record("weyl_C1234_closed",
                          "C_1234 = theta1 theta2/(24 theta3^2 theta4^2)", d_c1234, tol));
  rep.add(sec, dev_record("weyl_trace", "g^{ac} C_abcd = 0", d_weyl_tr, tol));

  {
    // pts[2] is the fixed point (0.6, -0.24, 1.5, 0.8)
    const auto& e = pts[2];
    const double m1 = e.source.coords[0], m2 = e.source.coords[1];
    const double s1 = e.source.coords[2], s2 = e.source.coords[3];
    const double stated = -(7.0 / 3.0) * s1 * s2 * (2.0 * m1 * m1 + s1) * (2.0 * m2 * m2 + s2);
    Record r;
    r.name = "weyl_C1234_display";
    r.target = "C_1234 = -(7/3) sigma1 sigma2 (2 mu1^2 + sigma1)(2 mu2^2 + sigma2)";
    r.computed = e.pack.weyl(0, 1, 2, 3);
    r.tolerance = 0.0;
    r.pass = true;
    r.checked = false;
    r.note = "stated form and independent computation shown side by side at "
             "(mu1, mu2, sigma1, sigma2) = (0.6, -0.24, 1.5, 0.8): stated " +
             format_double(stated) + ", computed " + format_double(r.computed) +
             "; the computed component matches theta1 theta2/(24 theta3^2 theta4^2) "
             "= (2/3) mu1 mu2 sigma1 sigma2 at every sampled point";
    rep.add(sec, r);
  }
}

void holonomy_summary_fill(HolonomySummary& summ, const HolonomyEstimate& est) {
  summ.dimension = est.dimension;
  summ.label = est.label;
  summ.gap = est.gap;
  summ.loop_count = est.loop_count;
  summ.rejected_loops = est.rejected_loops;
  summ.bracket_rounds = est.bracket_rounds;
  summ.max_skew_residual = est.max_skew_residual;
  summ.bracket_residual = est.bracket_residual;
  summ.max_gram_drift = est.max_gram_drift;
  summ.max_step_error = est.max_step_error;
  summ.singular_values = est.singular_values;
  for (const auto& sub : est.invariant_subspaces) {
    HolonomySummary::Line line;
    line.norm = sub.norm_type;
    for (int r = 0; r < sub.basis.rows(); ++r) line.components.push_back(sub.basis(r, 0));
    line.complement_residual = sub.complement_residual;
    summ.invariant_subspaces.push_back(std::move(line));
  }
}

}  // namespace

void build_tensor_records(VerificationReport& rep, const std::string& section,
                          const RunConfig& cfg, const Point& base) {
  if (manifold_from_selector(cfg.manifold) == ManifoldId::BivariateGaussian)
    tensor_records_bivariate(rep, section, cfg, base);
  else
    tensor_records_independence(rep, section, cfg, base);
}

void build_holonomy_records(VerificationReport& rep, const std::string& section,
                            const RunConfig& cfg, const Point& base) {
  const ManifoldId id = manifold_from_selector(cfg.manifold);
  const ManifoldSpec& spec = manifold_spec(id);
  const bool biv = id == ManifoldId::BivariateGaussian;

  HoloConfig h;
  h.seed = cfg.seed;
  h.polyline_loops = cfg.loops;
  h.scales = cfg.scales;
  h.steps_per_unit = cfg.steps_per_unit;
  h.curvature_points = cfg.curvature_points;
  h.use_openmp = cfg.use_openmp;

  const int want_dim = biv ? 21 : 10;
  const std::string want_label = biv ? "SO^0(1,6)" : "SO^0(1,4)";
  const std::string anchor =
      biv ? "Hol(G, [g]) = SO^0(1,6)" : "Hol(I, [g]) = SO^0(1,4)";

  HolonomySummary summ;
  summ.manifold = cfg.manifold;

  HolonomyEstimate est;
  try {
    est = holonomy_algebra_estimate(spec, base, h);
  } catch (const AmbiguousRankError& e) {
    Record r;
    r.name = "rank_decision";
    r.target = anchor;
    r.computed_text = "ambiguous";
    r.tolerance = h.gap_min;
    r.pass = false;
    r.note = std::string(e.what()) + "; singular values: " + number_list(e.singular_values);
    rep.add(section, r);
    rep.holonomy.push_back(summ);
    return;
  }
  holonomy_summary_fill(summ, est);

  {
    Record r;
    r.name = "algebra_dimension";
    r.target = anchor;
    r.computed = est.dimension;
    r.tolerance = 0.0;
    r.pass = est.dimension == want_dim;
    if (!r.pass) r.note = "expected dimension " + std::to_string(want_dim);
    rep.add(section, r);
  }
  {
    Record r;
    r.name = "group_label";
    r.target = anchor;
    r.computed_text = est.label;
    r.tolerance = 0.0;
    r.pass = est.label == want_label;
    rep.add(section, r);
  }
  {
    Record r;
    r.name = "rank_gap";
    r.target = "singular value ratio across the rank cut > 10^3";
    r.computed = est.gap;
    r.tolerance = 1e3;
    r.pass = est.gap >= 1e3;
    r.note = "pass requires computed >= tolerance";
    rep.add(section, r);
  }
  rep.add(section, dev_record("skew_residual", "h(A v, w) + h(v, A w) = 0",
                              est.max_skew_residual, h.skew_tol));
  rep.add(section, dev_record("bracket_closure", "[hol, hol] is contained in hol",
                              est.bracket_residual, 1e-7));
  rep.add(section, dev_record("pairing_drift", "loop transports preserve h",
                              est.max_gram_drift, 1e-7));
  rep.add(section, dev_record("step_error", "step-halving error estimate",
                              est.max_step_error, 1e-8));
  {
    Record r;
    r.name = "rejected_loops";
    r.target = "loops rejected by the matrix-log guard";
    r.computed = est.rejected_loops;
    r.tolerance = 0.0;
    r.pass = true;
    r.checked = false;
    r.note = std::to_string(est.loop_count) + " loops transported";
    rep.add(section, r);
  }
  {
    Record r;
    r.name = "invariant_subspace_count";
    r.target = biv ? "no proper invariant subspace"
                   : "a single invariant line L^1 with positive square norm";
    r.computed = static_cast<double>(est.invariant_subspaces.size());
    r.tolerance = 0.0;
    r.pass = static_cast<int>(est.invariant_subspaces.size()) == (biv ? 0 : 1);
    rep.add(section, r);
  }

  if (!biv) {
    if (!est.invariant_subspaces.empty()) {
      const auto& line = est.invariant_subspaces.front();
      Record r;
      r.name = "invariant_line_norm";
      r.target = "<L^1, L^1> > 0 since scal(g) < 0";
      r.computed_text = line.norm_type;
      r.tolerance = 0.0;
      r.pass = line.norm_type == "positive";
      rep.add(section, r);
      rep.add(section, dev_record("complement_invariance",
                                  "the h-orthogonal complement of L^1 is invariant",
                                  line.complement_residual, 1e-7));
    }

    try {
      const auto tractors = solve_parallel_tractor(spec, est, h);
      {
        Record r;
        r.name = "parallel_tractor_count";
        r.target = "nabla V = 0 has a one-dimensional solution space";
        r.computed = static_cast<double>(tractors.size());
        r.tolerance = 0.0;
        r.pass = tractors.size() == 1;
        rep.add(section, r);
      }
      if (!tractors.empty()) {
        const auto& pt = tractors.front();
        rep.add(section, dev_record("parallel_tractor_residual",
                                    "Phi V = V on every validation loop",
                                    pt.loop_residual, 1e-6));
        {
          Record r;
          r.name = "parallel_tractor_norm";
          r.target = "<V, V> > 0";
          r.computed_text = pt.norm_type;
          r.tolerance = 0.0;
          r.pass = pt.norm_type == "positive";
          rep.add(section, r);
        }
        if (!est.invariant_subspaces.empty()) {
          const Vec v = pt.tractor.comp.normalized();
          const Vec u = est.invariant_subspaces.front().basis.col(0).normalized();
          const double c = std::min(1.0, std::abs(v.dot(u)));
          rep.add(section, dev_record("parallel_tractor_alignment",
                                      "V spans the invariant line L^1",
                                      std::sqrt(std::max(0.0, 1.0 - c * c)), 1e-6));
        }
        summ.has_tractor = true;
        for (int i = 0; i < pt.tractor.comp.size(); ++i)
          summ.tractor_components.push_back(pt.tractor.comp(i));
        summ.tractor_norm = pt.norm_type;
        summ.tractor_residual = pt.loop_residual;
      }
    } catch (const Error& e) {
      Record r;
      r.name = "parallel_tractor";
      r.target = "nabla V = 0";
      r.computed_text = "error";
      r.pass = false;
      r.note = e.what();
      rep.add(section, r);
    }

    try {
      const Point nat = to_primary(base);
      const HolonomyEstimate cone_est = cone_holonomy_crosscheck(nat, 1.0, h);
      const auto sig = cone_signature(nat, 1.0);
      {
        Record r;
        r.name = "cone_dimension";
        r.target = "dim hol(C(I), g_C) = dim Hol(I, [g]) = 10";
        r.computed = cone_est.dimension;
        r.tolerance = 0.0;
        r.pass = cone_est.dimension == 10 && cone_est.dimension == est.dimension;
        rep.add(section, r);
      }
      {
        Record r;
        r.name = "cone_label";
        r.target = "Hol(C(I), g_C) = SO^0(1,4)";
        r.computed_text = cone_est.label;
        r.tolerance = 0.0;
        r.pass = cone_est.label == "SO^0(1,4)";
        rep.add(section, r);
      }
      {
        Record r;
        r.name = "cone_rank_gap";
        r.target = "singular value ratio across the rank cut > 10^3";
        r.computed = cone_est.gap;
        r.tolerance = 1e3;
        r.pass = cone_est.gap >= 1e3;
        r.note = "pass requires computed >= tolerance";
        rep.add(section, r);
      }
      {
        Record r;
        r.name = "cone_signature";
        r.target = "the signature of g_C = (1,5)";
        r.computed_text = "(" + std::to_string(sig.first) + "," + std::to_string(sig.second) + ")";
        r.tolerance = 0.0;
        r.pass = true;
        r.checked = false;
        r.note = "the eigenvalues of the 5-dimensional cone metric -dt^2 + (t^2/6) g split "
                 "into one negative and four positive, so the computed signature is (1,4); "
                 "a 5-dimensional metric cannot realize (1,5); the holonomy dimension "
                 "cross-check above is unaffected";
        rep.add(section, r);
      }
      summ.has_cone = true;
      summ.cone_dimension = cone_est.dimension;
      summ.cone_label = cone_est.label;
      summ.cone_gap = cone_est.gap;
      summ.cone_sig_neg = sig.first;
      summ.cone_sig_pos = sig.second;
    } catch (const Error& e) {
      Record r;
      r.name = "cone_crosscheck";
      r.target = "dim hol(C(I), g_C) = dim Hol(I, [g])";
      r.computed_text = "error";
      r.pass = false;
      r.note = e.what();
      rep.add(section, r);
    }
  }

  rep.holonomy.push_back(std::move(summ));
}

void build_property_records(VerificationReport& rep, const std::string& section,
                            const RunConfig& cfg) {
  const double tol = cfg.tolerance;
  const ManifoldId both[2] = {ManifoldId::BivariateGaussian, ManifoldId::IndependenceSub};

  double d_bianchi = 0, d_pair = 0, d_anti = 0, d_weyl_tr = 0, d_compat = 0;
  double d_gram_fd = 0, d_fskew = 0;
  for (const ManifoldId id : both) {
    const Chart pc = primary_chart(id);
    const int n = manifold_dim(id);
    std::vector<Point> pts;
    pts.push_back(to_primary(Point{id, Chart::SourceParams,
                                   id == ManifoldId::BivariateGaussian
                                       ? std::vector<double>{0, 0, 1, 1, 0}
                                       : std::vector<double>{0, 0, 1, 1}}));
    for (int i = 0; i < 6; ++i)
      pts.push_back(Point{id, pc, random_box_point(safe_box(id), id, pc, cfg.seed, 4000 + i)});

    for (const auto& p : pts) {
      const CurvaturePack pack = curvature(id, p);
      d_bianchi = std::max(d_bianchi, bianchi_first_dev(pack));
      d_pair = std::max(d_pair, pair_symmetry_dev(pack));
      d_anti = std::max(d_anti, antisymmetry_dev(pack));
      d_weyl_tr = std::max(d_weyl_tr, weyl_trace_dev(pack));
      d_compat = std::max(d_compat, compatibility_dev(id, p.coords));

      const Mat H = tractor_gram(id, p);
      const auto M = tractor_connection(id, p);
      for (int b = 0; b < n; ++b) {
        const double hstep = 1e-6 * std::max(1.0, std::abs(p.coords[b]));
        Point pp = p, pm = p;
        pp.coords[b] += hstep;
        pm.coords[b] -= hstep;
        const Mat dH = (tractor_gram(id, pp) - tractor_gram(id, pm)) / (2.0 * hstep);
        d_gram_fd = std::max(
            d_gram_fd, (dH - (M[b].transpose() * H + H * M[b])).cwiseAbs().maxCoeff());
      }
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
          const Mat F = tractor_curvature(id, p, a, b);
          d_fskew = std::max(d_fskew, (F.transpose() * H + H * F).cwiseAbs().maxCoeff());
        }
    }
  }
  rep.add(section, dev_record("bianchi_first", "R_abcd + R_acdb + R_adbc = 0", d_bianchi, tol));
  rep.add(section, dev_record("riemann_pair_symmetry", "R_abcd = R_cdab", d_pair, tol));
  rep.add(section,
          dev_record("riemann_antisymmetry", "R_abcd = -R_bacd = -R_abdc", d_anti, tol));
  rep.add(section, dev_record("weyl_trace_free", "g^{ac} C_abcd = 0", d_weyl_tr, tol));
  rep.add(section, dev_record("metric_compatibility", "nabla_c g_ab = 0", d_compat, tol));
  rep.add(section,
          dev_record("pairing_preservation",
                     "d_b h(V, W) = h(nabla_b V, W) + h(V, nabla_b W)", d_gram_fd, 1e-7));
  rep.add(section, dev_record("tractor_curvature_skew",
                              "h(F_ab v, w) + h(v, F_ab w) = 0", d_fskew, 1e-7));

  for (const ManifoldId id : both) {
    const bool biv = id == ManifoldId::BivariateGaussian;
    double worst_z = 0.0, worst_gh = 0.0;
    for (int i = 0; i < 10; ++i) {
      const Point p = to_primary(
          Point{id, Chart::SourceParams, random_domain_point(id, cfg.seed, 500 + i)});
      const Mat g = metric(id, p).as_matrix();
      const FisherEstimate mc = fisher_oracle_mc(id, p, 200000, cfg.seed);
      for (int a = 0; a < g.rows(); ++a)
        for (int b = 0; b < g.cols(); ++b) {
          const double dev = std::abs(mc.value(a, b) - g(a, b));
          if (dev > 0.0) worst_z = std::max(worst_z, dev / std::max(mc.std_error(a, b), 1e-300));
        }
      worst_gh = std::max(worst_gh, (fisher_oracle_gh(id, p, 40) - g).cwiseAbs().maxCoeff());
    }
    const std::string suffix = biv ? "_bivariate" : "_independence";
    Record r = dev_record("fisher_mc" + suffix,
                          "g_ab = E[(d_a l)(d_b l)], Monte Carlo within 4 standard errors",
                          worst_z, 4.0);
    r.note = "computed is the worst standardized deviation over 10 sampled points";
    rep.add(section, r);
    rep.add(section, dev_record("fisher_gh" + suffix,
                                "g_ab = E[(d_a l)(d_b l)], Gauss-Hermite quadrature",
                                worst_gh, tol));
  }

  {
    double worst = 0.0;
    for (const ManifoldId id : both)
      for (int i = 0; i < 6; ++i) {
        const Point src{id, Chart::SourceParams, random_domain_point(id, cfg.seed, 650 + i)};
        const Point th = to_natural(src);
        worst = std::max(worst, max_dev(alpha_connection(th, 0.0),
                                        natural_christoffel_lowered(id, th.coords)));
      }
    rep.add(section,
            dev_record("alpha_zero_connection",
                       "the alpha = 0 connection is the Levi-Civita connection in "
                       "natural coordinates",
                       worst, 1e-4));
  }

  {
    double worst = 0.0;
    for (const ManifoldId id : both)
      for (int i = 0; i < 8; ++i) {
        const auto x = random_domain_point(id, cfg.seed, 700 + i);
        const Point src{id, Chart::SourceParams, x};
        const Point back = from_natural(to_natural(src));
        for (std::size_t k = 0; k < x.size(); ++k)
          worst = std::max(worst, std::abs(back.coords[k] - x[k]));
      }
    rep.add(section, dev_record("chart_roundtrip", "from_natural(to_natural(x)) = x",
                                worst, tol));
  }
  {
    const Point p{ManifoldId::BivariateGaussian, Chart::SourceParams, {0, 0, 1, 1, 0}};
    const std::vector<double> want = {0, 0, -0.5, 0, -0.5};
    const auto th = to_natural(p).coords;
    double worst = 0.0;
    for (int k = 0; k < 5; ++k) worst = std::max(worst, std::abs(th[k] - want[k]));
    rep.add(section, dev_record("natural_map_bivariate",
                                "theta(0,0,1,1,0) = (0, 0, -1/2, 0, -1/2)", worst, tol));
  }
  {
    const Point p{ManifoldId::IndependenceSub, Chart::SourceParams, {1, 0, 2, 1}};
    const std::vector<double> want = {0.5, 0, -0.25, -0.5};
    const auto th = to_natural(p).coords;
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(th[k] - want[k]));
    rep.add(section, dev_record("natural_map_independence",
                                "theta(1,0,2,1) = (1/2, 0, -1/4, -1/2)", worst, tol));
  }

  const double pi = closed::pi_v;
  {
    const Point p{ManifoldId::BivariateGaussian, Chart::SourceParams, {0, 0, 1, 1, 0}};
    rep.add(section, value_record("potential_bivariate_base", "phi(0,0,1,1,0) = log(2 pi)",
                                  potential(to_natural(p)), std::log(2.0 * pi), tol));
  }
  {
    const Point p{ManifoldId::BivariateGaussian, Chart::SourceParams, {0, 0, 2, 3, 1}};
    rep.add(section,
            value_record("potential_bivariate_2", "phi(0,0,2,3,1) = log(2 sqrt(5) pi)",
                         potential(to_natural(p)), std::log(2.0 * std::sqrt(5.0) * pi), tol));
  }
  {
    const Point p{ManifoldId::BivariateGaussian, Chart::SourceParams, {0.3, -0.4, 1.3, 0.9, 0.2}};
    rep.add(section,
            value_record("potential_bivariate_3",
                         "phi(0.3,-0.4,1.3,0.9,0.2) = 337/2260 + log(sqrt(113) pi / 5)",
                         potential(to_natural(p)),
                         337.0 / 2260.0 + std::log(std::sqrt(113.0) * pi / 5.0), tol));
  }
  {
    const Point p{ManifoldId::IndependenceSub, Chart::SourceParams, {1, 0, 2, 1}};
    const double phi = potential(to_natural(p));
    rep.add(section,
            value_record("potential_independence",
                         "phi(1,0,2,1) = 1/4 + (3/2) log 2 + log pi", phi,
                         0.25 + 1.5 * std::log(2.0) + std::log(pi), tol));
    Record r;
    r.name = "potential_display_sign";
    r.target = "phi = log(2 pi sqrt(Delta)) + Delta (theta2^2 theta3 + theta1^2 theta4)";
    r.computed = phi;
    r.tolerance = 0.0;
    r.pass = true;
    r.checked = false;
    r.note = "with Delta = 1/(4 theta3 theta4), the stated form gives log(2 pi sqrt(2)) - "
             "1/4 at theta = (1/2, 0, -1/4, -1/2), while the computed potential equals "
             "log(2 pi sqrt(2)) + 1/4 there and matches log(2 pi sqrt(Delta)) - Delta "
             "(theta2^2 theta3 + theta1^2 theta4) at every sampled point; the quadratic "
             "term enters with the opposite sign";
    rep.add(section, r);
  }

  {
    const ManifoldId id = ManifoldId::UnivariateGaussian;
    double d_g = 0, d_r = 0, d_gh = 0;
    std::vector<std::vector<double>> xs = {{0, 1}, {1, 2}, {-0.5, 0.7}};
    for (int i = 0; i < 5; ++i) xs.push_back(random_domain_point(id, cfg.seed, 800 + i));
    for (const auto& x : xs) {
      const Point p{id, Chart::SourceParams, x};
      const Mat hess = natural_metric(id, to_natural(p).coords).as_matrix();
      const Mat jac = chart_jacobian(p);
      const Mat tab = metric(id, p).as_matrix();
      d_g = std::max(d_g, (tab - jac.transpose() * hess * jac).cwiseAbs().maxCoeff());
      d_r = std::max(d_r, max_dev(riemann_closed(id, p), riemann(id, p)));
      d_gh = std::max(d_gh, (fisher_oracle_gh(id, p, 40) - tab).cwiseAbs().maxCoeff());
    }
    rep.add(section, dev_record("univariate_metric", "g = diag(1/sigma, 1/(2 sigma^2))",
                                d_g, tol));
    rep.add(section, dev_record("univariate_riemann", "R_1212 = -1/(4 sigma^3)", d_r, tol));
    rep.add(section, dev_record("univariate_fisher_gh",
                                "g_ab = E[(d_a l)(d_b l)], Gauss-Hermite quadrature",
                                d_gh, tol));
  }

  for (const ManifoldId id : both) {
    const Chart pc = primary_chart(id);
    const int n = manifold_dim(id);
    LinearUpsilon ups;
    ups.coeff.assign(static_cast<std::size_t>(n), 0.0);
    ups.coeff[0] = 0.1;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const auto x = random_box_point(safe_box(id), id, pc, cfg.seed, 600 + i);
      worst = std::max(worst, tractor_conformal_connection_residual(id, x, ups));
    }
    rep.add(section,
            dev_record(std::string("conformal_invariance") +
                           (id == ManifoldId::BivariateGaussian ? "_bivariate"
                                                                : "_independence"),
                       "the tractor connection is invariant under g -> exp(2 Upsilon) g, "
                       "Upsilon = 0.1 x1",
                       worst, 1e-5));
  }

  {
    const ManifoldId id = ManifoldId::BivariateGaussian;
    const ManifoldSpec& spec = manifold_spec(id);
    const Point base = to_primary(Point{id, Chart::SourceParams, {0, 0, 1, 1, 0}});
    const ConnectionField conn = tractor_connection_field(spec);
    TransportOptions opt;
    opt.steps_per_unit = cfg.steps_per_unit;
    const Mat F = tractor_curvature(id, base, 0, 1);
    auto estimate = [&](double eps) {
      const TransportResult tr = transport_loop(conn, rectangle_loop(base, 0, 1, eps), opt);
      return Mat(-matrix_log(tr.matrix) / (eps * eps));
    };
    const Mat x1 = estimate(0.05), x2 = estimate(0.025);
    const Mat rich = 2.0 * x2 - x1;
    rep.add(section, dev_record("small_loop_curvature",
                                "log Phi_eps = -eps^2 F_ab + O(eps^3)",
                                (rich - F).cwiseAbs().maxCoeff(), 1e-3));
  }

  {
    const MetricField mf = cone_metric_field();
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
      const auto x = random_box_point(safe_box(ManifoldId::ConeOverIndependence),
                                      ManifoldId::ConeOverIndependence,
                                      Chart::NaturalParams, cfg.seed, 750 + i);
      worst = std::max(worst, curvature_from_metric(mf, x).ricci.max_abs());
    }
    rep.add(section, dev_record("cone_ricci_flat", "Ric(g_C) = 0", worst, 1e-4));
  }

  {
    const ManifoldId id = ManifoldId::IndependenceSub;
    const ManifoldSpec& spec = manifold_spec(id);
    const Point base = to_primary(Point{id, Chart::SourceParams, {0, 0, 1, 1}});
    const auto loops = loop_family(spec, base, 4, cfg.seed, {0.1});
    const ConnectionField conn = tractor_connection_field(spec);
    TransportOptions opt;
    opt.steps_per_unit = cfg.steps_per_unit;
    const auto serial = transport_loops(conn, loops, opt, false);
    const auto parallel = transport_loops(conn, loops, opt, true);
    double worst = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i)
      worst = std::max(worst,
                       (serial[i].matrix - parallel[i].matrix).cwiseAbs().maxCoeff());
    rep.add(section, dev_record("transport_determinism",
                                "serial and OpenMP transports agree bitwise", worst, 0.0));
  }
}

VerificationReport cmd_tensors(const RunConfig& cfg) {
  validate_config(cfg);
  VerificationReport rep;
  rep.tool = "tensors";
  rep.manifold = cfg.manifold;
  rep.seed = cfg.seed;
  rep.config_hash = config_hash(cfg);
  build_tensor_records(rep, "tensors", cfg, config_base_point(cfg));
  return rep;
}

VerificationReport cmd_holonomy(const RunConfig& cfg) {
  validate_config(cfg);
  VerificationReport rep;
  rep.tool = "holonomy";
  rep.manifold = cfg.manifold;
  rep.seed = cfg.seed;
  rep.config_hash = config_hash(cfg);
  build_holonomy_records(rep, "holonomy", cfg, config_base_point(cfg));
  return rep;
}

VerificationReport cmd_verify_all(const RunConfig& cfg) {
  validate_config(cfg);
  VerificationReport rep;
  rep.tool = "verify-all";
  rep.manifold = "both";
  rep.seed = cfg.seed;
  rep.config_hash = config_hash(cfg);
  for (const char* name : {"bivariate", "independence"}) {
    RunConfig sub = cfg;
    sub.manifold = name;
    if (cfg.manifold != name) sub.point.clear();
    const Point base = config_base_point(sub);
    build_tensor_records(rep, std::string(name) + "_tensors", sub, base);
    build_holonomy_records(rep, std::string(name) + "_holonomy", sub, base);
  }
  build_property_records(rep, "properties", cfg);
  return rep;
}

}  // namespace holo
