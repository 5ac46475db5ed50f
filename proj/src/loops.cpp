#include "holo/loops.hpp"

#include <cmath>

#include "holo/rng.hpp"

namespace holo {

LoopPath rectangle_loop(const Point& base, int plane_a, int plane_b, double eps) {
  if (plane_a == plane_b) throw Error("rectangle_loop: repeated plane direction");
  if (!(eps > 0.0)) throw Error("rectangle_loop: side length must be positive");
  LoopPath loop;
  loop.base = base;
  loop.kind = LoopKind::CoordRectangle;
  loop.plane_a = plane_a;
  loop.plane_b = plane_b;
  loop.eps = eps;
  std::vector<double> p = base.coords;
  loop.waypoints.push_back(p);
  p[plane_a] += eps;
  loop.waypoints.push_back(p);
  p[plane_b] += eps;
  loop.waypoints.push_back(p);
  p[plane_a] -= eps;
  loop.waypoints.push_back(p);
  loop.waypoints.push_back(base.coords);
  return loop;
}

LoopPath polyline_loop(const ManifoldSpec& m, const Point& base, std::uint64_t seed) {
  LoopPath loop;
  loop.base = base;
  loop.kind = LoopKind::RandomPolyline;
  loop.seed = seed;
  const DomainBox box = safe_box(m.id);
  const Chart chart = primary_chart(m.id);
  const int count = 2 + static_cast<int>(mix_seed(seed, 0) % 3);
  loop.waypoints.push_back(base.coords);
  for (int i = 0; i < count; ++i)
    loop.waypoints.push_back(random_box_point(box, m.id, chart, seed, 1 + i));
  loop.waypoints.push_back(base.coords);
  return loop;
}

LoopPath geodesic_triangle_loop(const ManifoldSpec& m, const Point& base,
                                std::uint64_t seed) {
  LoopPath loop;
  loop.base = base;
  loop.kind = LoopKind::GeodesicTriangle;
  loop.seed = seed;
  const DomainBox box = safe_box(m.id);
  const Chart chart = primary_chart(m.id);
  loop.waypoints.push_back(base.coords);
  for (int i = 0; i < 2; ++i) {
    std::vector<double> w = random_box_point(box, m.id, chart, seed, 1 + i);
    for (std::size_t k = 0; k < w.size(); ++k)
      w[k] = base.coords[k] + 0.5 * (w[k] - base.coords[k]);
    loop.waypoints.push_back(w);
  }
  loop.waypoints.push_back(base.coords);
  return loop;
}

std::vector<LoopPath> loop_family(const ManifoldSpec& m, const Point& base,
                                  int polyline_count, std::uint64_t seed,
                                  const std::vector<double>& scales) {
  if (polyline_count < 0) throw Error("loop_family: negative polyline count");
  std::vector<LoopPath> out;
  for (int a = 0; a < m.dim; ++a)
    for (int b = a + 1; b < m.dim; ++b)
      for (double eps : scales) out.push_back(rectangle_loop(base, a, b, eps));
  for (int i = 0; i < polyline_count; ++i)
    out.push_back(polyline_loop(m, base, mix_seed(seed, 100 + i)));
  return out;
}

double loop_closure_defect(const LoopPath& loop) {
  if (loop.waypoints.size() < 2) return 0.0;
  const auto& a = loop.waypoints.front();
  const auto& b = loop.waypoints.back();
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

bool loop_in_domain(const ManifoldSpec& m, const LoopPath& loop, int samples) {
  const Chart chart = primary_chart(m.id);
  for (std::size_t s = 0; s + 1 < loop.waypoints.size(); ++s) {
    const auto& p = loop.waypoints[s];
    const auto& q = loop.waypoints[s + 1];
    for (int i = 0; i <= samples; ++i) {
      const double t = static_cast<double>(i) / samples;
      std::vector<double> x(p.size());
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = p[k] + t * (q[k] - p[k]);
      if (!domain_check(Point{m.id, chart, x})) return false;
    }
  }
  return true;
}

}  // namespace holo
