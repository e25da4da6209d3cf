#include "rodsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace rodsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end) {
    throw ConfigError(key + ": expected a number, got '" + v + "'");
  }
  return out;
}

long to_long(const std::string& key, const std::string& v) {
  long out = 0;
  const auto* end = v.data() + v.size();
  const auto r = std::from_chars(v.data(), end, out);
  if (r.ec != std::errc() || r.ptr != end) {
    throw ConfigError(key + ": expected an integer, got '" + v + "'");
  }
  return out;
}

bool to_bool(const std::string& key, const std::string& v) {
  const auto l = lower(v);
  if (l == "true" || l == "1" || l == "yes" || l == "on") return true;
  if (l == "false" || l == "0" || l == "no" || l == "off") return false;
  throw ConfigError(key + ": expected a boolean, got '" + v + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& v) {
  std::vector<double> out;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  if (out.empty()) throw ConfigError(key + ": empty list");
  return out;
}

Wave to_wave(const std::string& key, const std::string& v) {
  const auto l = lower(v);
  if (l == "const" || l == "constant" || l == "none") return Wave::Constant;
  if (l == "sin") return Wave::Sin;
  if (l == "cos") return Wave::Cos;
  throw ConfigError(key + ": unknown wave '" + v + "' (sin|cos|const)");
}

const char* kFieldNames[] = {"alpha", "beta", "gamma"};
const char* kFieldKeys[] = {"poly", "wave", "k_u", "k_t", "phase", "support"};

}  // namespace

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k = {
        "scenario.name",          "scenario.horizon",          "scenario.spin_up",
        "run.dt",                 "run.n_vertices",            "run.horizon",
        "run.length",             "run.level",                 "run.engine",
        "run.freeze_preferred",   "material.epsilon",          "material.k_rot",
        "drag.kind",              "drag.k",                    "frame.renormalize_every",
        "frame.renormalize_threshold", "output.snapshot_stride", "output.diagnostics_stride",
        "solver.residual_tol"};
    for (const char* f : kFieldNames) {
      for (const char* p : kFieldKeys) k.push_back(std::string("scenario.") + f + "." + p);
    }
    return k;
  }();
  return keys;
}

RunConfig parse_config(const std::string& text) {
  RunConfig rc;
  std::stringstream in(text);
  std::string line;
  int lineno = 0;
  const auto& known = known_config_keys();
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      value = value.substr(1, value.size() - 2);
    }
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigError(key + ": unknown key");
    }
    if (rc.entries.count(key)) throw ConfigError(key + ": duplicate key");
    rc.entries[key] = value;
  }

  const auto& E = rc.entries;
  auto get = [&](const std::string& k) -> const std::string* {
    const auto it = E.find(k);
    return it == E.end() ? nullptr : &it->second;
  };

  double eps = 0.05;
  if (auto v = get("material.epsilon")) {
    eps = to_double("material.epsilon", *v);
    if (!(eps > 0.0)) throw ConfigError("material.epsilon: must be > 0");
  }
  const std::string name = get("scenario.name") ? *get("scenario.name") : "relaxation";
  Scenario scn = find_scenario(name, eps);
  if (auto v = get("scenario.horizon")) scn.horizon = to_double("scenario.horizon", *v);
  if (auto v = get("scenario.spin_up")) {
    scn.spin_up = to_double("scenario.spin_up", *v);
    if (scn.spin_up < 0.0) throw ConfigError("scenario.spin_up: must be >= 0");
  }
  if (auto v = get("material.k_rot")) {
    scn.material.K_rot = to_double("material.k_rot", *v);
    if (!(scn.material.K_rot > 0.0)) throw ConfigError("material.k_rot: must be > 0");
  }

  // A custom field replaces the named scenario's field by a single term.
  PreferredField* fields[] = {&scn.alpha0, &scn.beta0, &scn.gamma0};
  for (int f = 0; f < 3; ++f) {
    const std::string prefix = std::string("scenario.") + kFieldNames[f] + ".";
    bool any = false;
    FieldTerm term;
    if (auto v = get(prefix + "poly")) { term.poly = to_list(prefix + "poly", *v); any = true; }
    if (auto v = get(prefix + "wave")) { term.wave = to_wave(prefix + "wave", *v); any = true; }
    if (auto v = get(prefix + "k_u")) { term.k_u = to_double(prefix + "k_u", *v); any = true; }
    if (auto v = get(prefix + "k_t")) { term.k_t = to_double(prefix + "k_t", *v); any = true; }
    if (auto v = get(prefix + "phase")) { term.phase = to_double(prefix + "phase", *v); any = true; }
    if (auto v = get(prefix + "support")) {
      const auto s = to_list(prefix + "support", *v);
      if (s.size() != 2 || !(s[0] <= s[1])) {
        throw ConfigError(prefix + "support: expected 'lo, hi' with lo <= hi");
      }
      term.support_lo = s[0];
      term.support_hi = s[1];
      any = true;
    }
    if (any) {
      const bool zero = term.poly.size() == 1 && term.poly[0] == 0.0;
      fields[f]->terms.clear();
      if (!zero) fields[f]->terms.push_back(term);
    }
  }

  if (auto v = get("drag.kind")) {
    const auto kind = lower(*v);
    if (kind == "isotropic") {
      double k = 1.0;
      if (auto kv = get("drag.k")) k = to_double("drag.k", *kv);
      scn.drag = IsotropicDrag{k * Mat3::Identity()};
    } else if (kind == "rft") {
      double k = 40.0;
      if (auto kv = get("drag.k")) k = to_double("drag.k", *kv);
      scn.drag = ResistiveForceDrag{k};
    } else {
      throw ConfigError("drag.kind: unknown drag '" + *v + "' (isotropic|rft)");
    }
  } else if (auto kv = get("drag.k")) {
    const double k = to_double("drag.k", *kv);
    if (auto* rft = std::get_if<ResistiveForceDrag>(&scn.drag)) {
      rft->K = k;
    } else {
      scn.drag = IsotropicDrag{k * Mat3::Identity()};
    }
  }
  try {
    validate_drag(scn.drag);
  } catch (const RodError& e) {
    throw ConfigError(std::string("drag.k: ") + e.what());
  }

  SimConfig& c = rc.sim;
  if (auto v = get("run.level")) {
    rc.level = static_cast<int>(to_long("run.level", *v));
    if (rc.level < 0 || rc.level > 10) throw ConfigError("run.level: must be in 0..10");
    c = SimConfig::at_level(scn, rc.level);
  } else {
    c.scenario = scn;
    c.horizon = scn.horizon;
  }
  if (auto v = get("run.dt")) c.dt = to_double("run.dt", *v);
  if (auto v = get("run.n_vertices")) c.n_vertices = static_cast<int>(to_long("run.n_vertices", *v));
  if (auto v = get("run.horizon")) c.horizon = to_double("run.horizon", *v);
  if (auto v = get("run.length")) c.length = to_double("run.length", *v);
  if (auto v = get("run.freeze_preferred")) c.freeze_preferred = to_bool("run.freeze_preferred", *v);
  if (auto v = get("run.engine")) {
    const auto e = lower(*v);
    if (e == "3d") {
      rc.engine = Engine::ThreeD;
    } else if (e == "2d") {
      rc.engine = Engine::TwoD;
    } else {
      throw ConfigError("run.engine: expected 3d or 2d, got '" + *v + "'");
    }
  }
  if (auto v = get("frame.renormalize_every")) {
    c.renormalize.every = static_cast<int>(to_long("frame.renormalize_every", *v));
  }
  if (auto v = get("frame.renormalize_threshold")) {
    c.renormalize.threshold = to_double("frame.renormalize_threshold", *v);
    if (c.renormalize.threshold < 0.0) {
      throw ConfigError("frame.renormalize_threshold: must be >= 0");
    }
  }
  if (auto v = get("output.snapshot_stride")) {
    c.output.snapshot_stride = static_cast<int>(to_long("output.snapshot_stride", *v));
  }
  if (auto v = get("output.diagnostics_stride")) {
    c.output.diagnostics_stride = static_cast<int>(to_long("output.diagnostics_stride", *v));
  }
  if (auto v = get("solver.residual_tol")) {
    c.solver.residual_tol = to_double("solver.residual_tol", *v);
    if (!(c.solver.residual_tol > 0.0)) throw ConfigError("solver.residual_tol: must be > 0");
  }
  c.validate();
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("config: cannot read '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

}  // namespace rodsim
