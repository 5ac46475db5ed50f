// Verification report model and deterministic renderers. JSON output has a
// fixed field order and 17-significant-digit floats, so identical
// configurations reproduce byte-identical reports (schema: docs/report-schema.md).
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holo {

// One check. `target` quotes the reference form the check is audited
// against; `computed_text`, when set, replaces the numeric `computed`.
// Records with checked=false are informational and do not gate the run.
struct Record {
  std::string name;
  std::string target;
  double computed = 0.0;
  std::string computed_text;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
  bool checked = true;
};

struct ReportSection {
  std::string name;
  std::vector<Record> records;
};

struct HolonomySummary {
  std::string manifold;
  int dimension = 0;
  std::string label;
  double gap = 0.0;
  int loop_count = 0;
  int rejected_loops = 0;
  int bracket_rounds = 0;
  double max_skew_residual = 0.0;
  double bracket_residual = 0.0;
  double max_gram_drift = 0.0;
  double max_step_error = 0.0;
  std::vector<double> singular_values;

  struct Line {
    std::string norm;
    std::vector<double> components;
    double complement_residual = 0.0;
  };
  std::vector<Line> invariant_subspaces;

  bool has_tractor = false;
  std::vector<double> tractor_components;
  std::string tractor_norm;
  double tractor_residual = 0.0;

  bool has_cone = false;
  int cone_dimension = 0;
  std::string cone_label;
  double cone_gap = 0.0;
  int cone_sig_neg = 0;
  int cone_sig_pos = 0;
};

struct VerificationReport {
  std::string tool;
  std::string manifold;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<ReportSection> sections;
  std::vector<HolonomySummary> holonomy;

  bool overall_pass() const;
  Record& add(const std::string& section, Record r);
};

// "%.17g" rendering shared by every numeric field.
std::string format_double(double v);

std::string render_json(const VerificationReport& rep);
std::string render_text(const VerificationReport& rep);

// Writes in the requested format to out_path, or stdout when empty.
void write_report(const VerificationReport& rep, const std::string& format,
                  const std::string& out_path);

// 0 when every checked record passes, 1 otherwise.
int report_exit_code(const VerificationReport& rep);

}  // namespace holo
