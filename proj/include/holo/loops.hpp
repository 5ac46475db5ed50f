// Closed loops at a base point for holonomy sampling.
#pragma once

#include <cstdint>
#include <vector>

#include "holo/manifolds.hpp"
#include "holo/types.hpp"

namespace holo {

enum class LoopKind { CoordRectangle, RandomPolyline, GeodesicTriangle };

// A closed path at `base`. Rectangles and polylines consist of straight
// coordinate segments through `waypoints` (first == last == base coords).
// Geodesic triangles store their three vertices in `waypoints` (first and
// last equal to base); the connecting Levi-Civita geodesics are computed by
// the transport layer.
struct LoopPath {
  Point base;
  LoopKind kind = LoopKind::CoordRectangle;
  int plane_a = 0;   // CoordRectangle only
  int plane_b = 1;   // CoordRectangle only
  double eps = 0.0;  // CoordRectangle side length
  std::uint64_t seed = 0;
  std::vector<std::vector<double>> waypoints;
};

// base -> base + eps e_a -> base + eps(e_a + e_b) -> base + eps e_b -> base.
LoopPath rectangle_loop(const Point& base, int plane_a, int plane_b, double eps);

// Loop through 2 to 4 waypoints drawn from the manifold's safe box (the box
// is convex, so the straight segments stay in the domain).
LoopPath polyline_loop(const ManifoldSpec& m, const Point& base, std::uint64_t seed);

// Triangle with two extra vertices drawn from the safe box and pulled half
// way toward the base point.
LoopPath geodesic_triangle_loop(const ManifoldSpec& m, const Point& base,
                                std::uint64_t seed);

// Deterministic family: all coordinate rectangles (plane pairs a < b) at the
// given scales, then `polyline_count` random polyline loops. Triangles are
// supported by the transport layer but not part of the default family.
std::vector<LoopPath> loop_family(const ManifoldSpec& m, const Point& base,
                                  int polyline_count, std::uint64_t seed,
                                  const std::vector<double>& scales = {0.05, 0.1, 0.2});

// max-abs gap between first and last waypoint; 0 for well-formed loops.
double loop_closure_defect(const LoopPath& loop);

// Sample each straight segment at `samples` points and run domain_check.
bool loop_in_domain(const ManifoldSpec& m, const LoopPath& loop, int samples = 16);

}  // namespace holo
