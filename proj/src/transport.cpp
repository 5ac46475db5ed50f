#include "holo/transport.hpp"

#include <cmath>

#include "holo/tractor.hpp"

namespace holo {

ConnectionField tractor_connection_field(const ManifoldSpec& m) {
  ConnectionField c;
  c.base_dim = m.dim;
  c.fiber_dim = m.dim + 2;
  const ManifoldId id = m.id;
  const Chart chart = primary_chart(id);
  c.coeffs = [id, chart](const std::vector<double>& x) {
    return tractor_connection(id, Point{id, chart, x});
  };
  c.domain_ok = [id, chart](const std::vector<double>& x) {
    return domain_check(Point{id, chart, x});
  };
  c.christoffel = [id](const std::vector<double>& x) {
    return christoffel_components(id, x);
  };
  return c;
}

ConnectionField tangent_connection_field(const ManifoldSpec& m) {
  ConnectionField c;
  c.base_dim = m.dim;
  c.fiber_dim = m.dim;
  const ManifoldId id = m.id;
  const Chart chart = primary_chart(id);
  c.coeffs = [id](const std::vector<double>& x) {
    const auto G = christoffel_components(id, x);
    const int n = manifold_dim(id);
    std::vector<Mat> M(n, Mat::Zero(n, n));
    for (int b = 0; b < n; ++b)
      for (int a = 0; a < n; ++a)
        for (int cc = 0; cc < n; ++cc) M[b](a, cc) = G[a][b][cc];
    return M;
  };
  c.domain_ok = [id, chart](const std::vector<double>& x) {
    return domain_check(Point{id, chart, x});
  };
  c.christoffel = [id](const std::vector<double>& x) {
    return christoffel_components(id, x);
  };
  return c;
}

namespace {

double seg_length(const std::vector<double>& p, const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) s += (q[k] - p[k]) * (q[k] - p[k]);
  return std::sqrt(s);
}

int seg_steps(double len, const TransportOptions& opt, int boost) {
  const int n = static_cast<int>(std::ceil(opt.steps_per_unit * len));
  return boost * std::max(opt.min_steps, n);
}

// -(xdot^b M_b(x)), guarding the domain.
Mat drift(const ConnectionField& conn, const std::vector<double>& x,
          const std::vector<double>& v) {
  if (conn.domain_ok && !conn.domain_ok(x))
    throw DomainError("transport: path left the domain");
  const auto M = conn.coeffs(x);
  Mat A = Mat::Zero(conn.fiber_dim, conn.fiber_dim);
  for (int b = 0; b < conn.base_dim; ++b) A -= v[b] * M[b];
  return A;
}

// RK4 for dPhi/dt = A(x(t)) Phi along the straight segment p -> q.
Mat straight_segment(const ConnectionField& conn, const std::vector<double>& p,
                     const std::vector<double>& q, int steps) {
  const int n = conn.base_dim;
  std::vector<double> v(n), x0(n), xh(n), x1(n);
  for (int k = 0; k < n; ++k) v[k] = q[k] - p[k];
  Mat phi = Mat::Identity(conn.fiber_dim, conn.fiber_dim);
  const double h = 1.0 / steps;
  for (int s = 0; s < steps; ++s) {
    const double t0 = s * h;
    for (int k = 0; k < n; ++k) {
      x0[k] = p[k] + t0 * v[k];
      xh[k] = p[k] + (t0 + 0.5 * h) * v[k];
      x1[k] = p[k] + (t0 + h) * v[k];
    }
    const Mat a0 = drift(conn, x0, v);
    const Mat ah = drift(conn, xh, v);
    const Mat a1 = drift(conn, x1, v);
    const Mat k1 = a0 * phi;
    const Mat k2 = ah * (phi + 0.5 * h * k1);
    const Mat k3 = ah * (phi + 0.5 * h * k2);
    const Mat k4 = a1 * (phi + h * k3);
    phi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return phi;
}

Mat chain_transport(const ConnectionField& conn,
                    const std::vector<std::vector<double>>& waypoints, int boost,
                    const TransportOptions& opt, long long* total_steps) {
  Mat phi = Mat::Identity(conn.fiber_dim, conn.fiber_dim);
  for (std::size_t s = 0; s + 1 < waypoints.size(); ++s) {
    const auto& p = waypoints[s];
    const auto& q = waypoints[s + 1];
    const double len = seg_length(p, q);
    if (len == 0.0) continue;
    const int steps = seg_steps(len, opt, boost);
    phi = straight_segment(conn, p, q, steps) * phi;
    if (total_steps) *total_steps += steps;
  }
  return phi;
}

struct GeodesicState {
  std::vector<double> x;
  std::vector<double> v;
  Mat phi;  // empty when only the endpoint is needed
};

GeodesicState geodesic_rhs(const ConnectionField& conn, const GeodesicState& s,
                           bool with_phi) {
  const int n = conn.base_dim;
  if (conn.domain_ok && !conn.domain_ok(s.x))
    throw DomainError("transport: geodesic left the domain");
  if (!conn.christoffel)
    throw Error("transport: connection lacks Christoffel data for geodesics");
  const auto G = conn.christoffel(s.x);
  GeodesicState d;
  d.x = s.v;
  d.v.assign(n, 0.0);
  for (int c = 0; c < n; ++c) {
    double acc = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) acc += G[c][a][b] * s.v[a] * s.v[b];
    d.v[c] = -acc;
  }
  if (with_phi) {
    const auto M = conn.coeffs(s.x);
    Mat A = Mat::Zero(conn.fiber_dim, conn.fiber_dim);
    for (int b = 0; b < n; ++b) A -= s.v[b] * M[b];
    d.phi = A * s.phi;
  }
  return d;
}

GeodesicState geodesic_axpy(const GeodesicState& s, double h, const GeodesicState& d,
                            bool with_phi) {
  GeodesicState out = s;
  for (std::size_t k = 0; k < out.x.size(); ++k) {
    out.x[k] += h * d.x[k];
    out.v[k] += h * d.v[k];
  }
  if (with_phi) out.phi += h * d.phi;
  return out;
}

// Integrate the coupled geodesic + transport system over t in [0, 1].
GeodesicState geodesic_segment(const ConnectionField& conn, const std::vector<double>& p,
                               const std::vector<double>& v0, int steps, bool with_phi) {
  GeodesicState s;
  s.x = p;
  s.v = v0;
  if (with_phi) s.phi = Mat::Identity(conn.fiber_dim, conn.fiber_dim);
  const double h = 1.0 / steps;
  for (int i = 0; i < steps; ++i) {
    const GeodesicState k1 = geodesic_rhs(conn, s, with_phi);
    const GeodesicState k2 = geodesic_rhs(conn, geodesic_axpy(s, 0.5 * h, k1, with_phi), with_phi);
    const GeodesicState k3 = geodesic_rhs(conn, geodesic_axpy(s, 0.5 * h, k2, with_phi), with_phi);
    const GeodesicState k4 = geodesic_rhs(conn, geodesic_axpy(s, h, k3, with_phi), with_phi);
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      s.x[k] += (h / 6.0) * (k1.x[k] + 2.0 * k2.x[k] + 2.0 * k3.x[k] + k4.x[k]);
      s.v[k] += (h / 6.0) * (k1.v[k] + 2.0 * k2.v[k] + 2.0 * k3.v[k] + k4.v[k]);
    }
    if (with_phi)
      s.phi += (h / 6.0) * (k1.phi + 2.0 * k2.phi + 2.0 * k3.phi + k4.phi);
  }
  return s;
}

Mat triangle_transport(const ConnectionField& conn, const LoopPath& loop, int boost,
                       const TransportOptions& opt, long long* total_steps) {
  Mat phi = Mat::Identity(conn.fiber_dim, conn.fiber_dim);
  for (std::size_t s = 0; s + 1 < loop.waypoints.size(); ++s) {
    const auto& p = loop.waypoints[s];
    const auto& q = loop.waypoints[s + 1];
    const double len = seg_length(p, q);
    if (len == 0.0) continue;
    const auto v0 = geodesic_initial_velocity(conn, p, q, opt);
    const int steps = seg_steps(len, opt, boost);
    const GeodesicState end = geodesic_segment(conn, p, v0, steps, true);
    double gap = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k)
      gap = std::max(gap, std::abs(end.x[k] - q[k]));
    if (gap > 1e-8) throw Error("transport: geodesic segment missed its endpoint");
    phi = end.phi * phi;
    if (total_steps) *total_steps += steps;
  }
  return phi;
}

}  // namespace

std::vector<double> geodesic_initial_velocity(const ConnectionField& conn,
                                              const std::vector<double>& p,
                                              const std::vector<double>& q,
                                              const TransportOptions& opt) {
  const int n = conn.base_dim;
  const int steps = seg_steps(seg_length(p, q), opt, 1);
  std::vector<double> v(n);
  for (int k = 0; k < n; ++k) v[k] = q[k] - p[k];
  for (int iter = 0; iter < 30; ++iter) {
    const GeodesicState end = geodesic_segment(conn, p, v, steps, false);
    Vec miss(n);
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
      miss(k) = q[k] - end.x[k];
      worst = std::max(worst, std::abs(miss(k)));
    }
    if (worst < 1e-11) return v;
    double scale = 0.0;
    for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(v[k]));
    const double delta = 1e-6 * std::max(1.0, scale);
    Mat J(n, n);
    for (int j = 0; j < n; ++j) {
      std::vector<double> vp = v;
      vp[j] += delta;
      const GeodesicState ep = geodesic_segment(conn, p, vp, steps, false);
      for (int k = 0; k < n; ++k) J(k, j) = (ep.x[k] - end.x[k]) / delta;
    }
    const Vec dv = J.fullPivLu().solve(miss);
    for (int k = 0; k < n; ++k) v[k] += dv(k);
  }
  throw Error("geodesic_initial_velocity: shooting did not converge");
}

TransportResult transport_path(const ConnectionField& conn,
                               const std::vector<std::vector<double>>& waypoints,
                               const TransportOptions& opt) {
  if (waypoints.size() < 2) {
    TransportResult r;
    r.matrix = Mat::Identity(conn.fiber_dim, conn.fiber_dim);
    return r;
  }
  long long steps1 = 0, steps2 = 0;
  const Mat coarse = chain_transport(conn, waypoints, 1, opt, &steps1);
  Mat fine = chain_transport(conn, waypoints, 2, opt, &steps2);
  double err = (coarse - fine).cwiseAbs().maxCoeff();
  if (err > opt.check_tol) {
    steps1 = steps2 = 0;
    const Mat c4 = chain_transport(conn, waypoints, 4, opt, &steps1);
    fine = chain_transport(conn, waypoints, 8, opt, &steps2);
    err = (c4 - fine).cwiseAbs().maxCoeff();
  }
  TransportResult r;
  r.matrix = fine;
  r.err_estimate = err;
  r.steps = static_cast<int>(steps2);
  return r;
}

TransportResult transport_loop(const ConnectionField& conn, const LoopPath& loop,
                               const TransportOptions& opt) {
  if (loop_closure_defect(loop) > 1e-12)
    throw Error("transport_loop: loop is not closed");
  if (loop.kind != LoopKind::GeodesicTriangle) return transport_path(conn, loop.waypoints, opt);
  long long steps1 = 0, steps2 = 0;
  const Mat coarse = triangle_transport(conn, loop, 1, opt, &steps1);
  Mat fine = triangle_transport(conn, loop, 2, opt, &steps2);
  double err = (coarse - fine).cwiseAbs().maxCoeff();
  if (err > opt.check_tol) {
    steps1 = steps2 = 0;
    const Mat c4 = triangle_transport(conn, loop, 4, opt, &steps1);
    fine = triangle_transport(conn, loop, 8, opt, &steps2);
    err = (c4 - fine).cwiseAbs().maxCoeff();
  }
  TransportResult r;
  r.matrix = fine;
  r.err_estimate = err;
  r.steps = static_cast<int>(steps2);
  return r;
}

std::vector<TransportResult> transport_loops(const ConnectionField& conn,
                                             const std::vector<LoopPath>& loops,
                                             const TransportOptions& opt,
                                             bool use_openmp) {
  std::vector<TransportResult> out(loops.size());
  const int count = static_cast<int>(loops.size());
#ifdef _OPENMP
  if (use_openmp) {
    std::string first_error;
#pragma omp parallel for schedule(static)
    for (int i = 0; i < count; ++i) {
      try {
        out[i] = transport_loop(conn, loops[i], opt);
      } catch (const std::exception& e) {
#pragma omp critical
        if (first_error.empty()) first_error = e.what();
      }
    }
    if (!first_error.empty()) throw Error(first_error);
    return out;
  }
#else
  (void)use_openmp;
#endif
  for (int i = 0; i < count; ++i) out[i] = transport_loop(conn, loops[i], opt);
  return out;
}

}  // namespace holo
