// Holonomy Lie-algebra estimation from loop transports, invariant-subspace
// detection, group classification, and the metric-cone cross-check.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "holo/loops.hpp"
#include "holo/manifolds.hpp"
#include "holo/tractor.hpp"
#include "holo/transport.hpp"
#include "holo/types.hpp"

namespace holo {

struct HoloConfig {
  std::uint64_t seed = 42;
  int polyline_loops = 12;
  std::vector<double> scales = {0.05, 0.1, 0.2};
  int steps_per_unit = 400;
  int curvature_points = 40;  // transported curvature operators
  double rank_tol = 1e-6;     // singular values kept relative to the largest
  double gap_min = 100.0;     // required sv ratio across the rank cut
  double skew_tol = 1e-7;     // H-skewness acceptance for basis elements
  double drop_tol = 1e-9;     // relative norm floor for raw generators
  int bracket_cap = 4;        // bracket-closure round limit
  int stable_rounds = 2;      // consecutive equal dimensions to stop early
  bool use_openmp = true;
};

struct InvariantSubspace {
  Mat basis;                   // columns span the subspace
  std::string norm_type;       // "positive" | "null" | "negative" | "mixed"
  double complement_residual;  // invariance defect of the H-orthogonal complement
};

struct HolonomyEstimate {
  Point base;
  Mat gram;                        // H at the base point
  std::vector<Mat> algebra_basis;  // H-skew, orthonormal in the eta frame
  int dimension = 0;
  std::vector<double> singular_values;  // descending, final closure round
  double gap = 0.0;                     // ratio across the rank cut
  double max_skew_residual = 0.0;
  double bracket_residual = 0.0;  // worst bracket distance to the span
  double max_gram_drift = 0.0;    // worst |Phi^T H Phi - H| over loops
  double max_step_error = 0.0;    // worst accepted step-halving estimate
  int loop_count = 0;
  int rejected_loops = 0;  // log failures (loop skipped)
  int bracket_rounds = 0;
  std::vector<InvariantSubspace> invariant_subspaces;
  std::string label;
};

// Tractor-connection holonomy algebra at `base`: logs of loop holonomies
// (coordinate rectangles scaled by 1/eps^2, plus random polylines) together
// with curvature operators transported from random points, closed under
// commutator brackets, rank read off the singular-value spectrum. Throws
// AmbiguousRankError when consecutive singular values around the cut are
// closer than gap_min.
HolonomyEstimate holonomy_algebra_estimate(const ManifoldSpec& m, const Point& base,
                                           const HoloConfig& cfg = {});

// The same pipeline over an arbitrary connection with Gram matrix `gram` at
// the base; `curv(x, a, b)` supplies curvature operators at x (may be null).
HolonomyEstimate holonomy_from_connection(
    const ConnectionField& conn, const ManifoldSpec& m, const Point& base,
    const Mat& gram, const std::function<Mat(const std::vector<double>&, int, int)>& curv,
    const HoloConfig& cfg);

// Common kernel of the algebra, classified by tractor norm, with the
// H-orthogonal complement checked for invariance. Fills
// est.invariant_subspaces and est.label.
void refine_invariant_subspaces(HolonomyEstimate& est, double kernel_tol = 1e-6);

// Finite lookup: dim (n+2)(n+1)/2 with no invariant subspace maps to
// "SO^0(1,n+1)"; a positive-norm invariant line with dim (n+1)n/2 maps to
// "SO^0(1,n)"; anything else is "unclassified".
std::string classify_group(const HolonomyEstimate& est, int n);

// Cone metric over I at (p, t): coordinates (th1..th4, t), -dt^2 + (t^2/6) g.
TensorValue cone_metric(const Point& p_on_I, double t);
// Eigenvalue signature (negatives, positives) of the cone metric.
std::pair<int, int> cone_signature(const Point& p_on_I, double t);
// Levi-Civita holonomy of the cone by the same loop pipeline.
HolonomyEstimate cone_holonomy_crosscheck(const Point& p_on_I, double t,
                                          const HoloConfig& cfg = {});

struct ParallelTractor {
  Tractor tractor;
  std::string norm_type;
  double loop_residual;  // worst |Phi V - V| over the validation loops
};

// Kernel lines of the estimated algebra refined against fresh random loops
// and returned as parallel tractors; the list is empty when the algebra has
// a trivial kernel.
std::vector<ParallelTractor> solve_parallel_tractor(const ManifoldSpec& m,
                                                    const HolonomyEstimate& est,
                                                    const HoloConfig& cfg = {});

}  // namespace holo
