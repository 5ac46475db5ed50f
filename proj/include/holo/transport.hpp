// Parallel transport of bundle frames along paths and loops.
#pragma once

#include <functional>
#include <vector>

#include "holo/loops.hpp"
#include "holo/manifolds.hpp"
#include "holo/types.hpp"

namespace holo {

// First-order connection data over a coordinate patch: coeffs(x)[b] is the
// fiber_dim x fiber_dim matrix M_b acting as (nabla_b s)^i = d_b s^i +
// (M_b)^i_j s^j. A frame matrix Phi is transported along x(t) by
//   dPhi/dt = -(xdot^b M_b(x)) Phi,  Phi(0) = identity.
struct ConnectionField {
  int base_dim = 0;
  int fiber_dim = 0;
  std::function<std::vector<Mat>(const std::vector<double>&)> coeffs;
  std::function<bool(const std::vector<double>&)> domain_ok;
  // Base Christoffels Gamma^c_ab as [c][a][b]; required for geodesic
  // segments only.
  std::function<std::vector<std::vector<std::vector<double>>>(const std::vector<double>&)>
      christoffel;
};

// Tractor connection of a statistical manifold (fiber dim n+2).
ConnectionField tractor_connection_field(const ManifoldSpec& m);
// Levi-Civita connection on the tangent bundle (fiber dim n); works for the
// cone as well.
ConnectionField tangent_connection_field(const ManifoldSpec& m);

struct TransportOptions {
  int steps_per_unit = 400;  // RK4 steps per unit of coordinate arc length
  int min_steps = 8;         // lower bound per segment
  double check_tol = 1e-9;   // step-halving acceptance threshold
};

// Transport along straight coordinate segments through the waypoints. The
// result holds the frame matrix, the step-halving error estimate and the
// total step count of the accepted resolution. Segments failing the halving
// check are re-integrated at 4x steps.
TransportResult transport_path(const ConnectionField& conn,
                               const std::vector<std::vector<double>>& waypoints,
                               const TransportOptions& opt = {});

// Transport around a loop; geodesic triangles solve the segment boundary
// value problems by shooting before integrating the coupled system.
TransportResult transport_loop(const ConnectionField& conn, const LoopPath& loop,
                               const TransportOptions& opt = {});

// Batch transport. Loops are independent; with use_openmp the batch is
// distributed over threads and the output order (hence every byte of every
// result) is identical to the serial run.
std::vector<TransportResult> transport_loops(const ConnectionField& conn,
                                             const std::vector<LoopPath>& loops,
                                             const TransportOptions& opt,
                                             bool use_openmp);

// Initial velocity v with exp_p(v) = q for the connection's geodesics,
// found by Newton shooting.
std::vector<double> geodesic_initial_velocity(const ConnectionField& conn,
                                              const std::vector<double>& p,
                                              const std::vector<double>& q,
                                              const TransportOptions& opt = {});

}  // namespace holo
