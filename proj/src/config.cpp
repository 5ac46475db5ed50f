#include "holo/config.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "holo/manifolds.hpp"

namespace holo {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw UsageError("config: bad numeric value for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw UsageError("config: trailing characters in value for " + key + ": '" + value + "'");
  return v;
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &pos);
  } catch (const std::exception&) {
    throw UsageError("config: bad integer value for " + key + ": '" + value + "'");
  }
  if (pos != value.size())
    throw UsageError("config: trailing characters in value for " + key + ": '" + value + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on") return true;
  if (value == "false" || value == "0" || value == "off") return false;
  throw UsageError("config: bad boolean value for " + key + ": '" + value + "'");
}

}  // namespace

std::vector<double> parse_point_list(const std::string& csv) {
  std::vector<double> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (item.empty()) throw UsageError("point list has an empty component: '" + csv + "'");
    out.push_back(parse_double("point", item));
  }
  if (out.empty()) throw UsageError("point list is empty");
  return out;
}

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "manifold") {
    cfg.manifold = value;
  } else if (key == "point") {
    cfg.point = parse_point_list(value);
  } else if (key == "seed") {
    const long long v = parse_int(key, value);
    if (v < 0) throw UsageError("config: seed must be non-negative");
    cfg.seed = static_cast<std::uint64_t>(v);
  } else if (key == "loops") {
    cfg.loops = static_cast<int>(parse_int(key, value));
  } else if (key == "scales") {
    cfg.scales = parse_point_list(value);
  } else if (key == "steps_per_unit") {
    cfg.steps_per_unit = static_cast<int>(parse_int(key, value));
  } else if (key == "curvature_points") {
    cfg.curvature_points = static_cast<int>(parse_int(key, value));
  } else if (key == "sample_points") {
    cfg.sample_points = static_cast<int>(parse_int(key, value));
  } else if (key == "tolerance") {
    cfg.tolerance = parse_double(key, value);
  } else if (key == "delta_min") {
    cfg.delta_min = parse_double(key, value);
  } else if (key == "format") {
    cfg.format = value;
  } else if (key == "out") {
    cfg.out_path = value;
  } else if (key == "use_openmp") {
    cfg.use_openmp = parse_bool(key, value);
  } else {
    throw UsageError("config: unknown key '" + key + "'");
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open '" + path + "'");
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config: line " + std::to_string(lineno) + " of '" + path +
                       "' is not key=value: '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw UsageError("config: empty key on line " + std::to_string(lineno));
    apply_config_entry(cfg, key, value);
  }
}

void apply_env(RunConfig& cfg) {
  const char* env = std::getenv("TRACTOR_HOLO_SEED");
  if (!env) return;
  const std::string value(env);
  const long long v = parse_int("TRACTOR_HOLO_SEED", value);
  if (v < 0) throw UsageError("TRACTOR_HOLO_SEED must be non-negative");
  cfg.seed = static_cast<std::uint64_t>(v);
}

ManifoldId manifold_from_selector(const std::string& selector) {
  if (selector == "bivariate") return ManifoldId::BivariateGaussian;
  if (selector == "independence") return ManifoldId::IndependenceSub;
  throw UsageError("unknown manifold '" + selector + "' (expected bivariate or independence)");
}

Point config_base_point(const RunConfig& cfg) {
  const ManifoldId id = manifold_from_selector(cfg.manifold);
  const int n = manifold_dim(id);
  std::vector<double> x = cfg.point;
  if (x.empty()) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    x[2] = 1.0;
    x[3] = 1.0;
  }
  if (static_cast<int>(x.size()) != n)
    throw UsageError("base point for " + cfg.manifold + " needs " + std::to_string(n) +
                     " coordinates, got " + std::to_string(x.size()));
  const Point p{id, Chart::SourceParams, x};
  if (!domain_check(p)) throw UsageError("base point is outside the admissible domain");
  if (id == ManifoldId::BivariateGaussian && delta(p) < cfg.delta_min)
    throw UsageError("base point violates the determinant floor delta_min");
  return p;
}

void validate_config(const RunConfig& cfg) {
  manifold_from_selector(cfg.manifold);
  if (cfg.format != "json" && cfg.format != "text")
    throw UsageError("format must be json or text, got '" + cfg.format + "'");
  if (cfg.loops < 1) throw UsageError("loops must be positive");
  if (cfg.steps_per_unit < 1) throw UsageError("steps_per_unit must be positive");
  if (cfg.curvature_points < 0) throw UsageError("curvature_points must be non-negative");
  if (cfg.sample_points < 0) throw UsageError("sample_points must be non-negative");
  if (cfg.tolerance < 0.0) throw UsageError("tolerance must be non-negative");
  if (cfg.delta_min < 0.0) throw UsageError("delta_min must be non-negative");
  if (cfg.scales.empty()) throw UsageError("scales must not be empty");
  for (double s : cfg.scales)
    if (s <= 0.0) throw UsageError("scales must be positive");
  config_base_point(cfg);
}

std::string canonical_config_string(const RunConfig& cfg) {
  std::string s;
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  auto list = [&num](const std::vector<double>& xs) {
    std::string t;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) t += ',';
      t += num(xs[i]);
    }
    return t;
  };
  s += "manifold=" + cfg.manifold + "\n";
  s += "point=" + list(cfg.point) + "\n";
  s += "seed=" + std::to_string(cfg.seed) + "\n";
  s += "loops=" + std::to_string(cfg.loops) + "\n";
  s += "scales=" + list(cfg.scales) + "\n";
  s += "steps_per_unit=" + std::to_string(cfg.steps_per_unit) + "\n";
  s += "curvature_points=" + std::to_string(cfg.curvature_points) + "\n";
  s += "sample_points=" + std::to_string(cfg.sample_points) + "\n";
  s += "tolerance=" + num(cfg.tolerance) + "\n";
  s += "delta_min=" + num(cfg.delta_min) + "\n";
  s += "format=" + cfg.format + "\n";
  s += "out=" + cfg.out_path + "\n";
  s += std::string("use_openmp=") + (cfg.use_openmp ? "true" : "false") + "\n";
  return s;
}

std::string config_hash(const RunConfig& cfg) {
  const std::string s = canonical_config_string(cfg);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace holo
