#include "holo/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "holo/types.hpp"

namespace holo {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_kv(std::string& out, const char* key, const std::string& value) {
  out += '"';
  out += key;
  out += "\":\"";
  out += json_escape(value);
  out += '"';
}

void append_num(std::string& out, const char* key, double value) {
  out += '"';
  out += key;
  out += "\":";
  out += format_double(value);
}

void append_int(std::string& out, const char* key, long long value) {
  out += '"';
  out += key;
  out += "\":";
  out += std::to_string(value);
}

void append_bool(std::string& out, const char* key, bool value) {
  out += '"';
  out += key;
  out += "\":";
  out += value ? "true" : "false";
}

void append_list(std::string& out, const char* key, const std::vector<double>& xs) {
  out += '"';
  out += key;
  out += "\":[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += format_double(xs[i]);
  }
  out += ']';
}

void append_record(std::string& out, const Record& r) {
  out += '{';
  append_kv(out, "name", r.name);
  out += ',';
  append_kv(out, "target", r.target);
  out += ',';
  if (r.computed_text.empty()) {
    append_num(out, "computed", r.computed);
  } else {
    append_kv(out, "computed", r.computed_text);
  }
  out += ',';
  append_num(out, "tolerance", r.tolerance);
  out += ',';
  append_bool(out, "pass", r.pass);
  if (!r.note.empty()) {
    out += ',';
    append_kv(out, "note", r.note);
  }
  if (!r.checked) {
    out += ',';
    append_bool(out, "checked", false);
  }
  out += '}';
}

void append_holonomy(std::string& out, const HolonomySummary& h) {
  out += '{';
  append_kv(out, "manifold", h.manifold);
  out += ',';
  append_int(out, "dimension", h.dimension);
  out += ',';
  append_kv(out, "label", h.label);
  out += ',';
  append_num(out, "gap", h.gap);
  out += ',';
  append_int(out, "loop_count", h.loop_count);
  out += ',';
  append_int(out, "rejected_loops", h.rejected_loops);
  out += ',';
  append_int(out, "bracket_rounds", h.bracket_rounds);
  out += ',';
  append_num(out, "max_skew_residual", h.max_skew_residual);
  out += ',';
  append_num(out, "bracket_residual", h.bracket_residual);
  out += ',';
  append_num(out, "max_gram_drift", h.max_gram_drift);
  out += ',';
  append_num(out, "max_step_error", h.max_step_error);
  out += ',';
  append_list(out, "singular_values", h.singular_values);
  out += ',';
  out += "\"invariant_subspaces\":[";
  for (std::size_t i = 0; i < h.invariant_subspaces.size(); ++i) {
    const auto& line = h.invariant_subspaces[i];
    if (i) out += ',';
    out += '{';
    append_kv(out, "norm", line.norm);
    out += ',';
    append_list(out, "components", line.components);
    out += ',';
    append_num(out, "complement_residual", line.complement_residual);
    out += '}';
  }
  out += ']';
  if (h.has_tractor) {
    out += ",\"parallel_tractor\":{";
    append_list(out, "components", h.tractor_components);
    out += ',';
    append_kv(out, "norm", h.tractor_norm);
    out += ',';
    append_num(out, "loop_residual", h.tractor_residual);
    out += '}';
  }
  if (h.has_cone) {
    out += ",\"cone\":{";
    append_int(out, "dimension", h.cone_dimension);
    out += ',';
    append_kv(out, "label", h.cone_label);
    out += ',';
    append_num(out, "gap", h.cone_gap);
    out += ",\"signature\":[";
    out += std::to_string(h.cone_sig_neg);
    out += ',';
    out += std::to_string(h.cone_sig_pos);
    out += "]}";
  }
  out += '}';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

bool VerificationReport::overall_pass() const {
  for (const auto& sec : sections)
    for (const auto& r : sec.records)
      if (r.checked && !r.pass) return false;
  return true;
}

Record& VerificationReport::add(const std::string& section, Record r) {
  for (auto& sec : sections)
    if (sec.name == section) {
      sec.records.push_back(std::move(r));
      return sec.records.back();
    }
  sections.push_back(ReportSection{section, {}});
  sections.back().records.push_back(std::move(r));
  return sections.back().records.back();
}

std::string render_json(const VerificationReport& rep) {
  std::string out;
  out += '{';
  append_kv(out, "tool", rep.tool);
  out += ',';
  append_kv(out, "manifold", rep.manifold);
  out += ',';
  append_int(out, "seed", static_cast<long long>(rep.seed));
  out += ',';
  append_kv(out, "config_hash", rep.config_hash);
  out += ',';
  out += "\"sections\":[";
  for (std::size_t s = 0; s < rep.sections.size(); ++s) {
    if (s) out += ',';
    out += '{';
    append_kv(out, "name", rep.sections[s].name);
    out += ",\"records\":[";
    for (std::size_t i = 0; i < rep.sections[s].records.size(); ++i) {
      if (i) out += ',';
      append_record(out, rep.sections[s].records[i]);
    }
    out += "]}";
  }
  out += "],";
  out += "\"holonomy\":[";
  for (std::size_t i = 0; i < rep.holonomy.size(); ++i) {
    if (i) out += ',';
    append_holonomy(out, rep.holonomy[i]);
  }
  out += "],";
  append_bool(out, "overall_pass", rep.overall_pass());
  out += "}\n";
  return out;
}

std::string render_text(const VerificationReport& rep) {
  std::string out;
  out += "tool: " + rep.tool + "\n";
  out += "manifold: " + rep.manifold + "\n";
  out += "seed: " + std::to_string(rep.seed) + "\n";
  out += "config_hash: " + rep.config_hash + "\n";
  for (const auto& sec : rep.sections) {
    out += "section " + sec.name + "\n";
    for (const auto& r : sec.records) {
      out += r.checked ? (r.pass ? "  [PASS] " : "  [FAIL] ") : "  [INFO] ";
      out += r.name;
      out += "  computed=";
      out += r.computed_text.empty() ? format_double(r.computed) : r.computed_text;
      out += "  tolerance=" + format_double(r.tolerance);
      out += "  target=\"" + r.target + "\"";
      if (!r.note.empty()) out += "\n         note: " + r.note;
      out += '\n';
    }
  }
  for (const auto& h : rep.holonomy) {
    out += "holonomy " + h.manifold + ": dimension=" + std::to_string(h.dimension) +
           " label=" + h.label + " gap=" + format_double(h.gap) +
           " loops=" + std::to_string(h.loop_count) +
           " rejected=" + std::to_string(h.rejected_loops) + "\n";
    for (const auto& line : h.invariant_subspaces) {
      out += "  invariant line (" + line.norm + " norm), components";
      for (double c : line.components) out += " " + format_double(c);
      out += '\n';
    }
    if (h.has_tractor) {
      out += "  parallel tractor (" + h.tractor_norm +
             " norm), loop residual=" + format_double(h.tractor_residual) + ", components";
      for (double c : h.tractor_components) out += " " + format_double(c);
      out += '\n';
    }
    if (h.has_cone) {
      out += "  cone crosscheck: dimension=" + std::to_string(h.cone_dimension) +
             " label=" + h.cone_label + " signature=(" + std::to_string(h.cone_sig_neg) +
             "," + std::to_string(h.cone_sig_pos) + ")\n";
    }
  }
  out += std::string("overall: ") + (rep.overall_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

void write_report(const VerificationReport& rep, const std::string& format,
                  const std::string& out_path) {
  const std::string body = format == "text" ? render_text(rep) : render_json(rep);
  if (out_path.empty()) {
    std::cout << body;
    std::cout.flush();
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  out << body;
}

int report_exit_code(const VerificationReport& rep) { return rep.overall_pass() ? 0 : 1; }

}  // namespace holo
