#include "holo/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "holo/curvature.hpp"
#include "holo/linalg.hpp"
#include "holo/matlog.hpp"
#include "holo/rng.hpp"

namespace holo {

namespace {

Mat vec_rows(const std::vector<Mat>& mats) {
  const int k = static_cast<int>(mats.front().rows());
  Mat stack(static_cast<int>(mats.size()), k * k);
  for (std::size_t i = 0; i < mats.size(); ++i)
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) stack(static_cast<int>(i), r * k + c) = mats[i](r, c);
  return stack;
}

Mat unvec(const Vec& row, int k) {
  Mat m(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) m(r, c) = row(r * k + c);
  return m;
}

struct RankedBasis {
  std::vector<Mat> basis;            // orthonormal under Frobenius
  std::vector<double> singular_values;
  int rank = 0;
  double gap = 0.0;
};

// Rank and orthonormal span basis of a generator list by SVD of the stacked
// row matrix; enforces a clear singular-value gap at the cut.
RankedBasis ranked_span(const std::vector<Mat>& gens, double rank_tol, double gap_min) {
  RankedBasis out;
  if (gens.empty()) return out;
  const int k = static_cast<int>(gens.front().rows());
  Eigen::JacobiSVD<Mat> svd(vec_rows(gens), Eigen::ComputeThinV);
  const Vec sv = svd.singularValues();
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  const double cut = rank_tol * sv(0);
  int r = 0;
  while (r < sv.size() && sv(r) > cut) ++r;
  out.rank = r;
  if (r < sv.size()) {
    out.gap = sv(r) > 0.0 ? sv(r - 1) / sv(r) : std::numeric_limits<double>::infinity();
    if (out.gap < gap_min) {
      std::ostringstream os;
      os << "ambiguous holonomy rank: s[" << r - 1 << "]/s[" << r << "] = " << out.gap
         << " < gap_min " << gap_min;
      throw AmbiguousRankError(os.str(), out.singular_values);
    }
  } else {
    out.gap = std::numeric_limits<double>::infinity();
  }
  out.basis.reserve(r);
  for (int j = 0; j < r; ++j) out.basis.push_back(unvec(svd.matrixV().col(j), k));
  return out;
}

double frob(const Mat& m) { return std::sqrt((m.array() * m.array()).sum()); }

// Residual of projecting each bracket back onto the span.
double bracket_span_residual(const std::vector<Mat>& basis) {
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const Mat br = basis[i] * basis[j] - basis[j] * basis[i];
      Mat rem = br;
      for (const Mat& b : basis) rem -= (br.array() * b.array()).sum() * b;
      const double denom = std::max(1.0, frob(br));
      worst = std::max(worst, frob(rem) / denom);
    }
  return worst;
}

std::vector<Mat> batch_curvature_ops(
    const ConnectionField& conn, const ManifoldSpec& m, const Point& base,
    const std::function<Mat(const std::vector<double>&, int, int)>& curv,
    const HoloConfig& cfg, const TransportOptions& opt) {
  std::vector<Mat> ops(static_cast<std::size_t>(cfg.curvature_points));
  const DomainBox box = safe_box(m.id);
  const Chart chart = primary_chart(m.id);
  const int n = m.dim;
  const int count = cfg.curvature_points;
  std::string first_error;
  auto one = [&](int i) {
    SplitMix rng(mix_seed(cfg.seed, 3000 + static_cast<std::uint64_t>(i)));
    const auto q =
        random_box_point(box, m.id, chart, cfg.seed, 2000 + static_cast<std::uint64_t>(i));
    const int a = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
    int b = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
    if (b >= a) ++b;
    const Mat F = curv(q, a, b);
    const auto tr = transport_path(conn, {base.coords, q}, opt);
    // pull the operator at q back to the base fiber
    ops[static_cast<std::size_t>(i)] = tr.matrix.fullPivLu().solve(F * tr.matrix);
  };
#ifdef _OPENMP
  if (cfg.use_openmp) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) {
      try {
        one(i);
      } catch (const std::exception& e) {
#pragma omp critical
        if (first_error.empty()) first_error = e.what();
      }
    }
    if (!first_error.empty()) throw Error(first_error);
    return ops;
  }
#endif
  for (int i = 0; i < count; ++i) one(i);
  return ops;
}

}  // namespace

HolonomyEstimate holonomy_from_connection(
    const ConnectionField& conn, const ManifoldSpec& m, const Point& base,
    const Mat& gram, const std::function<Mat(const std::vector<double>&, int, int)>& curv,
    const HoloConfig& cfg) {
  if (!domain_check(base)) throw DomainError("holonomy: base point outside domain");
  TransportOptions opt;
  opt.steps_per_unit = cfg.steps_per_unit;

  HolonomyEstimate est;
  est.base = base;
  est.gram = gram;

  // 1. loop transports and their logarithms
  const auto loops = loop_family(m, base, cfg.polyline_loops, cfg.seed, cfg.scales);
  const auto transports = transport_loops(conn, loops, opt, cfg.use_openmp);
  est.loop_count = static_cast<int>(loops.size());
  std::vector<Mat> gens;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    const Mat& phi = transports[i].matrix;
    est.max_gram_drift = std::max(
        est.max_gram_drift, (phi.transpose() * gram * phi - gram).cwiseAbs().maxCoeff());
    est.max_step_error = std::max(est.max_step_error, transports[i].err_estimate);
    try {
      Mat L = matrix_log(phi);
      if (loops[i].kind == LoopKind::CoordRectangle) L /= loops[i].eps * loops[i].eps;
      gens.push_back(L);
    } catch (const LogFailure&) {
      ++est.rejected_loops;
    }
  }

  // 2. transported curvature operators as a second generator source
  if (curv && cfg.curvature_points > 0) {
    const auto ops = batch_curvature_ops(conn, m, base, curv, cfg, opt);
    gens.insert(gens.end(), ops.begin(), ops.end());
  }
  if (gens.empty()) throw Error("holonomy: no usable generators");

  // 3. move to the eta-orthonormal frame of the Gram matrix, drop dust
  const FrameChange fc = orthonormalize(gram);
  const Mat W = fc.matrix;
  const Mat Winv = W.partialPivLu().inverse();
  std::vector<Mat> tilde;
  tilde.reserve(gens.size());
  double max_norm = 0.0;
  for (const Mat& g : gens) max_norm = std::max(max_norm, frob(Winv * g * W));
  for (const Mat& g : gens) {
    Mat t = Winv * g * W;
    if (frob(t) >= cfg.drop_tol * max_norm) tilde.push_back(std::move(t));
  }

  // 4. rank by SVD, then close under brackets until stable or capped
  RankedBasis rb = ranked_span(tilde, cfg.rank_tol, cfg.gap_min);
  int stable = 0;
  for (int round = 0; round < cfg.bracket_cap; ++round) {
    std::vector<Mat> enlarged = rb.basis;
    for (std::size_t i = 0; i < rb.basis.size(); ++i)
      for (std::size_t j = i + 1; j < rb.basis.size(); ++j)
        enlarged.push_back(rb.basis[i] * rb.basis[j] - rb.basis[j] * rb.basis[i]);
    RankedBasis next = ranked_span(enlarged, cfg.rank_tol, cfg.gap_min);
    est.bracket_rounds = round + 1;
    stable = next.rank == rb.rank ? stable + 1 : 1;
    rb = std::move(next);
    if (stable >= cfg.stable_rounds) break;
  }
  est.dimension = rb.rank;
  est.singular_values = rb.singular_values;
  est.gap = rb.gap;
  est.bracket_residual = bracket_span_residual(rb.basis);

  // 5. back to the coordinate frame; basis elements must be H-skew
  est.algebra_basis.reserve(rb.basis.size());
  for (const Mat& b : rb.basis) {
    Mat A = W * b * Winv;
    est.max_skew_residual = std::max(
        est.max_skew_residual, (A.transpose() * gram + gram * A).cwiseAbs().maxCoeff());
    est.algebra_basis.push_back(std::move(A));
  }
  if (est.max_skew_residual > cfg.skew_tol) {
    std::ostringstream os;
    os << "holonomy: basis violates H-skewness by " << est.max_skew_residual;
    throw Error(os.str());
  }
  return est;
}

HolonomyEstimate holonomy_algebra_estimate(const ManifoldSpec& m, const Point& base,
                                           const HoloConfig& cfg) {
  const Point primary = to_primary(base);
  const ConnectionField conn = tractor_connection_field(m);
  const Mat gram = tractor_gram(m.id, primary);
  const ManifoldId id = m.id;
  const Chart chart = primary_chart(id);
  auto curv = [id, chart](const std::vector<double>& x, int a, int b) {
    return tractor_curvature(id, Point{id, chart, x}, a, b);
  };
  HolonomyEstimate est = holonomy_from_connection(conn, m, primary, gram, curv, cfg);
  refine_invariant_subspaces(est);
  est.label = classify_group(est, m.dim);
  return est;
}

void refine_invariant_subspaces(HolonomyEstimate& est, double kernel_tol) {
  est.invariant_subspaces.clear();
  if (est.algebra_basis.empty()) return;
  const int k = static_cast<int>(est.gram.rows());
  const int r = static_cast<int>(est.algebra_basis.size());
  Mat stacked(r * k, k);
  for (int i = 0; i < r; ++i) stacked.middleRows(i * k, k) = est.algebra_basis[i];
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinV);
  const Vec sv = svd.singularValues();
  const double cut = kernel_tol * sv(0);
  std::vector<int> kernel_cols;
  for (int j = 0; j < sv.size(); ++j)
    if (sv(j) <= cut) kernel_cols.push_back(j);
  if (kernel_cols.empty()) return;

  // split the kernel into H-orthogonal lines via the restricted Gram form
  const int g = static_cast<int>(kernel_cols.size());
  Mat K(k, g);
  for (int j = 0; j < g; ++j) K.col(j) = svd.matrixV().col(kernel_cols[j]);
  const Mat Hr = K.transpose() * est.gram * K;
  Eigen::SelfAdjointEigenSolver<Mat> eig(0.5 * (Hr + Hr.transpose()));
  for (int j = 0; j < g; ++j) {
    InvariantSubspace sub;
    Vec v = K * eig.eigenvectors().col(j);
    v /= v.norm();
    sub.basis = v;
    const double q = v.dot(est.gram * v);
    sub.norm_type = q > 1e-9 ? "positive" : (q < -1e-9 ? "negative" : "null");

    // H-orthogonal complement and its invariance defect
    Eigen::JacobiSVD<Mat> row_svd(Mat(v.transpose() * est.gram), Eigen::ComputeFullV);
    Mat comp = row_svd.matrixV().rightCols(k - 1);
    double worst = 0.0;
    for (const Mat& A : est.algebra_basis)
      worst = std::max(worst, (v.transpose() * est.gram * A * comp).cwiseAbs().maxCoeff());
    sub.complement_residual = worst;
    est.invariant_subspaces.push_back(std::move(sub));
  }
}

std::string classify_group(const HolonomyEstimate& est, int n) {
  const int full = (n + 2) * (n + 1) / 2;
  const int einstein = (n + 1) * n / 2;
  bool positive_line = false;
  for (const auto& s : est.invariant_subspaces)
    if (s.basis.cols() == 1 && s.norm_type == "positive") positive_line = true;
  if (est.dimension == full && est.invariant_subspaces.empty())
    return "SO^0(1," + std::to_string(n + 1) + ")";
  if (est.dimension == einstein && positive_line)
    return "SO^0(1," + std::to_string(n) + ")";
  return "unclassified";
}

TensorValue cone_metric(const Point& p_on_I, double t) {
  if (!(t > 0.0)) throw DomainError("cone_metric: t must be positive");
  if (p_on_I.manifold != ManifoldId::IndependenceSub)
    throw ChartError("cone_metric: expects a point on the independence submanifold");
  const Point th = to_natural(p_on_I);
  std::vector<double> x = th.coords;
  x.push_back(t);
  const auto g = metric_components(ManifoldId::ConeOverIndependence, x);
  TensorValue out = TensorValue::zeros(5, {Valence::Down, Valence::Down});
  out.sym_pairs = {{0, 1}};
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b) out(a, b) = g[a][b];
  return out;
}

std::pair<int, int> cone_signature(const Point& p_on_I, double t) {
  const Mat g = cone_metric(p_on_I, t).as_matrix();
  Eigen::SelfAdjointEigenSolver<Mat> eig(g);
  int neg = 0, pos = 0;
  for (int i = 0; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i) < 0.0) ++neg;
    if (eig.eigenvalues()(i) > 0.0) ++pos;
  }
  return {neg, pos};
}

HolonomyEstimate cone_holonomy_crosscheck(const Point& p_on_I, double t,
                                          const HoloConfig& cfg) {
  const Point th = to_natural(p_on_I);
  std::vector<double> x = th.coords;
  x.push_back(t);
  const ManifoldSpec& cone = manifold_spec(ManifoldId::ConeOverIndependence);
  const Point base{ManifoldId::ConeOverIndependence, Chart::NaturalParams, x};
  const ConnectionField conn = tangent_connection_field(cone);
  const Mat gram = metric(ManifoldId::ConeOverIndependence, base).as_matrix();
  const MetricField mf = cone_metric_field();
  auto curv = [mf](const std::vector<double>& q, int a, int b) {
    const CurvaturePack pack = curvature_from_metric(mf, q);
    const Mat g = pack.metric.as_matrix();
    const Mat ginv = g.partialPivLu().inverse();
    Mat F = Mat::Zero(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) {
        double acc = 0.0;
        for (int f = 0; f < 5; ++f) acc += ginv(i, f) * pack.riemann(f, j, a, b);
        F(i, j) = acc;
      }
    return F;
  };
  HolonomyEstimate est = holonomy_from_connection(conn, cone, base, gram, curv, cfg);
  refine_invariant_subspaces(est);
  est.label = classify_group(est, 3);
  return est;
}

std::vector<ParallelTractor> solve_parallel_tractor(const ManifoldSpec& m,
                                                    const HolonomyEstimate& est,
                                                    const HoloConfig& cfg) {
  std::vector<ParallelTractor> out;
  if (est.algebra_basis.empty()) return out;
  const int k = static_cast<int>(est.gram.rows());

  // fresh validation loops; their logs also refine the kernel
  const ConnectionField conn = tractor_connection_field(m);
  TransportOptions opt;
  opt.steps_per_unit = cfg.steps_per_unit;
  std::vector<LoopPath> val_loops;
  for (int i = 0; i < 20; ++i)
    val_loops.push_back(polyline_loop(m, est.base, mix_seed(cfg.seed, 7000 + i)));
  const auto transports = transport_loops(conn, val_loops, opt, cfg.use_openmp);

  std::vector<Mat> gens = est.algebra_basis;
  for (const auto& tr : transports) {
    try {
      gens.push_back(matrix_log(tr.matrix));
    } catch (const LogFailure&) {
    }
  }
  const int r = static_cast<int>(gens.size());
  Mat stacked(r * k, k);
  for (int i = 0; i < r; ++i) stacked.middleRows(i * k, k) = gens[i];
  Eigen::JacobiSVD<Mat> svd(stacked, Eigen::ComputeThinV);
  const Vec sv = svd.singularValues();
  for (int j = 0; j < sv.size(); ++j) {
    if (sv(j) > 1e-6 * sv(0)) continue;
    Vec v = svd.matrixV().col(j);
    // Fisher-Rao scale representative: unit primary slot when possible
    if (std::abs(v(0)) > 1e-8)
      v /= v(0);
    else
      v /= v.norm();
    double resid = 0.0;
    for (const auto& tr : transports)
      resid = std::max(resid, (tr.matrix * v - v).cwiseAbs().maxCoeff());
    ParallelTractor pt;
    pt.tractor.base = est.base;
    pt.tractor.comp = v;
    pt.tractor.scale_grad = Vec::Zero(k - 2);
    const double q = v.dot(est.gram * v) / v.squaredNorm();
    pt.norm_type = q > 1e-9 ? "positive" : (q < -1e-9 ? "negative" : "null");
    pt.loop_residual = resid;
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace holo
