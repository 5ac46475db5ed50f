// Report builders behind the command-line tools. Each builder evaluates a
// family of checks and appends one Record per check; targets quote the
// reference forms the computed values are audited against.
#pragma once

#include "holo/config.hpp"
#include "holo/report.hpp"
#include "holo/types.hpp"

namespace holo {

// Closed tables against the derivative pipeline at the base point and at
// sampled points: metric, Christoffels, Riemann, Ricci, scalar, sectional,
// Schouten, Weyl, plus component displays with a divergence on record.
void build_tensor_records(VerificationReport& rep, const std::string& section,
                          const RunConfig& cfg, const Point& base);

// Holonomy algebra estimate with diagnostics; for the independence
// submanifold also the invariant line, the parallel tractor and the cone
// cross-check. A rank ambiguity surfaces as a failing record carrying the
// singular values.
void build_holonomy_records(VerificationReport& rep, const std::string& section,
                            const RunConfig& cfg, const Point& base);

// Cross-cutting identities: Bianchi, Weyl traces, metric compatibility,
// pairing preservation, Fisher oracles, alpha-connection, chart round trips,
// potential values, conformal invariance, cone Ricci-flatness, determinism.
void build_property_records(VerificationReport& rep, const std::string& section,
                            const RunConfig& cfg);

VerificationReport cmd_tensors(const RunConfig& cfg);
VerificationReport cmd_holonomy(const RunConfig& cfg);
VerificationReport cmd_verify_all(const RunConfig& cfg);

}  // namespace holo
