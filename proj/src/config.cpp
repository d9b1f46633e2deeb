#include "postsel/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "postsel/errors.hpp"

namespace postsel {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double parse_double(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigParseError("empty value for " + field);
  double value = 0.0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigParseError("non-numeric value for " + field + ": '" + t + "'");
  }
  return value;
}

std::size_t parse_count(const std::string& field, const std::string& text) {
  const std::string t = trim(text);
  std::size_t value = 0;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ConfigParseError("non-integer value for " + field + ": '" + t + "'");
  }
  return value;
}

std::size_t parse_index(const std::string& field, const std::string& text) {
  return parse_count(field, text);
}

bool known_axis_param(const std::string& name) {
  static const char* const names[] = {"s",     "theta", "phi_sys",
                                      "r",     "vartheta", "eta",
                                      "delta", "omega", "phi_quad"};
  for (const char* n : names) {
    if (name == n) return true;
  }
  return false;
}

}  // namespace

KeyValueMap parse_config_text(const std::string& text) {
  KeyValueMap map;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw ConfigParseError("line " + std::to_string(lineno) +
                             ": expected key = value, got '" + t + "'");
    }
    const std::string key = trim(t.substr(0, eq));
    if (key.empty()) {
      throw ConfigParseError("line " + std::to_string(lineno) +
                             ": empty key");
    }
    map[key] = trim(t.substr(eq + 1));
  }
  return map;
}

KeyValueMap parse_config_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot read config file: " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str());
}

void apply_overrides(KeyValueMap& map, const std::vector<std::string>& sets) {
  for (const std::string& kv : sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigParseError("override must be key=value, got '" + kv + "'");
    }
    const std::string key = trim(kv.substr(0, eq));
    if (key.empty()) throw ConfigParseError("override with empty key");
    map[key] = trim(kv.substr(eq + 1));
  }
}

std::vector<OutputItem> parse_output_token(const std::string& token) {
  const std::string t = trim(token);
  OutputItem item;
  item.label = t;
  if (t == "mean_n") {
    item.kind = OutputKind::MeanN;
    return {item};
  }
  if (t == "g2") {
    item.kind = OutputKind::G2;
    return {item};
  }
  if (t == "mandel_q") {
    item.kind = OutputKind::MandelQ;
    return {item};
  }
  if (t == "success") {
    item.kind = OutputKind::Success;
    return {item};
  }
  if (t == "s_phi") {
    item.kind = OutputKind::SPhi;
    item.at_phi_quad = true;
    return {item};
  }
  if (t.rfind("s_phi@", 0) == 0) {
    item.kind = OutputKind::SPhi;
    item.angle = parse_double("outputs token '" + t + "'", t.substr(6));
    return {item};
  }
  if (t.rfind("pn@", 0) == 0) {
    const std::string arg = t.substr(3);
    const std::size_t dots = arg.find("..");
    if (dots == std::string::npos) {
      item.kind = OutputKind::Pn;
      item.n = parse_index("outputs token '" + t + "'", arg);
      return {item};
    }
    const std::size_t lo =
        parse_index("outputs token '" + t + "'", arg.substr(0, dots));
    const std::size_t hi =
        parse_index("outputs token '" + t + "'", arg.substr(dots + 2));
    if (hi < lo) {
      throw ConfigParseError("outputs token '" + t + "': empty range");
    }
    std::vector<OutputItem> items;
    for (std::size_t n = lo; n <= hi; ++n) {
      OutputItem one;
      one.kind = OutputKind::Pn;
      one.n = n;
      one.label = "pn@" + std::to_string(n);
      items.push_back(one);
    }
    return items;
  }
  throw ConfigParseError("unknown outputs token: '" + t + "'");
}

namespace {

std::optional<AxisSpec> build_axis(const KeyValueMap& map,
                                   const std::string& prefix) {
  const std::string kp = prefix + ".param";
  const std::string ka = prefix + ".start";
  const std::string kb = prefix + ".stop";
  const std::string kc = prefix + ".count";
  const bool any = map.count(kp) || map.count(ka) || map.count(kb) ||
                   map.count(kc);
  if (!any) return std::nullopt;
  for (const std::string& k : {kp, ka, kb, kc}) {
    if (!map.count(k)) {
      throw ConfigParseError("incomplete axis block: missing " + k);
    }
  }
  AxisSpec axis;
  axis.param = map.at(kp);
  if (!known_axis_param(axis.param)) {
    throw ConfigParseError("invalid axis parameter name in " + kp + ": '" +
                           axis.param + "'");
  }
  axis.start = parse_double(ka, map.at(ka));
  axis.stop = parse_double(kb, map.at(kb));
  axis.count = parse_count(kc, map.at(kc));
  if (axis.count < 2) {
    throw ConfigError(prefix + ".count must be at least 2, got " +
                      std::to_string(axis.count));
  }
  return axis;
}

}  // namespace

SweepSpec build_sweep_spec(const KeyValueMap& map) {
  static const char* const known[] = {
      "pointer",      "r",           "vartheta",    "eta",
      "delta",        "omega",       "s",           "theta",
      "phi_sys",      "phi_quad",    "outputs",     "axis1.param",
      "axis1.start",  "axis1.stop",  "axis1.count", "axis2.param",
      "axis2.start",  "axis2.stop",  "axis2.count"};
  for (const auto& [key, value] : map) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigParseError("unknown config key: '" + key + "'");
  }

  SweepSpec spec;
  if (auto it = map.find("pointer"); it != map.end()) {
    if (it->second == "coherent") {
      spec.pointer.kind = PointerKind::Coherent;
    } else if (it->second == "squeezed") {
      spec.pointer.kind = PointerKind::SqueezedVacuum;
    } else if (it->second == "cat") {
      spec.pointer.kind = PointerKind::Cat;
    } else {
      throw ConfigParseError("pointer must be coherent, squeezed, or cat; got '" +
                             it->second + "'");
    }
  }
  const auto num = [&](const char* key, double& slot) {
    if (auto it = map.find(key); it != map.end()) {
      slot = parse_double(key, it->second);
    }
  };
  num("r", spec.pointer.r);
  num("vartheta", spec.pointer.vartheta);
  num("eta", spec.pointer.eta);
  num("delta", spec.pointer.delta);
  num("omega", spec.pointer.omega);
  num("s", spec.cfg.s);
  num("theta", spec.cfg.theta);
  num("phi_sys", spec.cfg.phi_sys);
  num("phi_quad", spec.phi_quad);

  spec.axis1 = build_axis(map, "axis1");
  spec.axis2 = build_axis(map, "axis2");
  if (spec.axis2 && !spec.axis1) {
    throw ConfigError("axis2 given without axis1");
  }
  if (spec.axis1 && spec.axis2 && spec.axis1->param == spec.axis2->param) {
    throw ConfigError("axis1 and axis2 sweep the same parameter: " +
                      spec.axis1->param);
  }

  std::string outputs = "mean_n,g2,mandel_q,success";
  if (auto it = map.find("outputs"); it != map.end()) outputs = it->second;
  std::istringstream toks(outputs);
  std::string tok;
  while (std::getline(toks, tok, ',')) {
    if (trim(tok).empty()) continue;
    for (OutputItem& item : parse_output_token(tok)) {
      spec.outputs.push_back(std::move(item));
    }
  }
  if (spec.outputs.empty()) {
    throw ConfigParseError("outputs list is empty");
  }
  return spec;
}

}  // namespace postsel
