// Run configuration for the command-line tools. Sources, in increasing
// precedence: built-in defaults, a flat key=value config file, the
// TRACTOR_HOLO_SEED environment variable (seed only), command-line flags.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holo/types.hpp"

namespace holo {

struct RunConfig {
  std::string manifold = "bivariate";  // bivariate | independence
  std::vector<double> point;           // source-chart base point; empty = canonical
  std::uint64_t seed = 42;
  int loops = 12;                      // random polyline loops per holonomy estimate
  std::vector<double> scales = {0.05, 0.1, 0.2};
  int steps_per_unit = 400;
  int curvature_points = 40;
  int sample_points = 20;              // random points for tensor cross-checks
  double tolerance = 1e-8;             // numeric record tolerance
  double delta_min = 0.1;              // covariance determinant floor (bivariate)
  std::string format = "json";         // json | text
  std::string out_path;                // empty = stdout
  bool use_openmp = true;
};

// Applies `key=value` lines from the file at path. '#' starts a comment,
// blank lines are skipped, unknown keys and malformed values throw UsageError.
void apply_config_file(RunConfig& cfg, const std::string& path);

// Single key=value assignment (also used for the config file lines).
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// Reads TRACTOR_HOLO_SEED if set; a malformed value throws UsageError.
void apply_env(RunConfig& cfg);

// Parses "x1,x2,..." into doubles; throws UsageError on malformed input.
std::vector<double> parse_point_list(const std::string& csv);

ManifoldId manifold_from_selector(const std::string& selector);

// Source-chart base point for the configured manifold, checked against the
// domain and (for the bivariate family) the delta_min floor.
Point config_base_point(const RunConfig& cfg);

// Ranges and basic consistency; throws UsageError on violations.
void validate_config(const RunConfig& cfg);

// Canonical "key=value\n" rendering of every field, the input to config_hash.
std::string canonical_config_string(const RunConfig& cfg);

// FNV-1a 64-bit hash of the canonical string, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

}  // namespace holo
