#ifndef HYPERFIX_CONFIG_HPP
#define HYPERFIX_CONFIG_HPP

// Scenario configuration: a sectioned key = value text format.
//
//   [space]      kind = box | circle; dim, lo, hi (box only)
//   [group]      kind = cyclic | table | word_ball | single; n, table,
//                max_len, word_cap
//   [maps]       one `map = ...` line per group element (per generator for
//                word_ball): affine <d*d entries> : <d entries> | pwl <x y>...
//                | rotation <angle> | reflection <axis> | identity,
//                optionally followed by L=<declared Lipschitz bound>
//   [iteration]  mode = center | inflated | involution | analyze | explore;
//                x1, tol, max_iter, lambda, expect
//   [sampling]   seed, samples
//   [output]     dir
//
// Parse errors carry the line number; semantic errors name the field.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperfix/fixpoint.hpp"

namespace hyperfix {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, int line, const std::string& message)
      : std::runtime_error(line > 0 ? path + ":" + std::to_string(line) + ": " + message
                                    : path + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

enum class GroupKind { cyclic, table, word_ball, single };
enum class ScenarioMode { center, inflated, involution, analyze, explore };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::cyclic: return "cyclic";
    case GroupKind::table: return "table";
    case GroupKind::word_ball: return "word_ball";
    case GroupKind::single: return "single";
  }
  return "?";
}

inline const char* to_string(ScenarioMode m) {
  switch (m) {
    case ScenarioMode::center: return "center";
    case ScenarioMode::inflated: return "inflated";
    case ScenarioMode::involution: return "involution";
    case ScenarioMode::analyze: return "analyze";
    case ScenarioMode::explore: return "explore";
  }
  return "?";
}

struct ScenarioConfig {
  std::string name;

  SpaceKind space = SpaceKind::box;
  std::size_t dim = 1;
  std::vector<double> lo, hi;

  GroupKind group_kind = GroupKind::cyclic;
  std::size_t group_n = 1;
  std::vector<int> table;
  std::size_t max_len = 8;
  std::size_t word_cap = 200000;

  std::vector<Mapping> maps;

  ScenarioMode mode = ScenarioMode::center;
  std::vector<double> x1;
  double tol = kDefaultIterTol;
  int max_iter = kDefaultMaxIter;
  double lambda = 1.0;
  std::string expect = "converged";

  std::uint64_t seed = 20250810ull;
  std::size_t samples = 10000;

  std::string out_dir = "out";
};

namespace config_detail {

inline std::vector<std::string> tokens_of(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  return toks;
}

inline double parse_double(const std::string& path, int line, const std::string& t) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError(path, line, "expected a number, got '" + t + "'");
  }
  if (pos != t.size()) throw ConfigError(path, line, "trailing junk in number '" + t + "'");
  return v;
}

inline long long parse_int(const std::string& path, int line, const std::string& t) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError(path, line, "expected an integer, got '" + t + "'");
  }
  if (pos != t.size()) throw ConfigError(path, line, "trailing junk in integer '" + t + "'");
  return v;
}

inline std::vector<double> parse_doubles(const std::string& path, int line,
                                         const std::string& value) {
  std::vector<double> out;
  for (const std::string& t : tokens_of(value)) out.push_back(parse_double(path, line, t));
  return out;
}

inline Mapping parse_map(const std::string& path, int line, const std::string& value,
                         SpaceKind space, std::size_t dim) {
  auto toks = tokens_of(value);
  if (toks.empty()) throw ConfigError(path, line, "map: empty specification");
  std::optional<double> declared;
  if (toks.size() >= 2 && toks.back().rfind("L=", 0) == 0) {
    declared = parse_double(path, line, toks.back().substr(2));
    toks.pop_back();
  }
  const std::string kind = toks.front();
  if (kind == "identity") {
    if (toks.size() != 1) throw ConfigError(path, line, "map: identity takes no parameters");
    Mapping m = space == SpaceKind::box ? make_affine(affine_identity(dim)) : make_rotation(0.0);
    m.declared_lipschitz = declared ? declared : std::optional<double>(1.0);
    return m;
  }
  if (kind == "affine") {
    if (space != SpaceKind::box) throw ConfigError(path, line, "map: affine needs a box space");
    const std::size_t want = dim * dim;
    if (toks.size() != 1 + want + 1 + dim || toks[1 + want] != ":") {
      throw ConfigError(path, line, "map: affine expects " + std::to_string(want) +
                                        " matrix entries, ':', then " + std::to_string(dim) +
                                        " translation entries");
    }
    AffineMap a;
    a.dim = dim;
    for (std::size_t i = 0; i < want; ++i) a.a.push_back(parse_double(path, line, toks[1 + i]));
    for (std::size_t i = 0; i < dim; ++i) {
      a.b.push_back(parse_double(path, line, toks[2 + want + i]));
    }
    return make_affine(std::move(a), declared);
  }
  if (kind == "pwl") {
    if (space != SpaceKind::box) throw ConfigError(path, line, "map: pwl needs a box space");
    if (toks.size() < 5 || (toks.size() - 1) % 2 != 0) {
      throw ConfigError(path, line, "map: pwl expects x y pairs (at least two)");
    }
    PwlFunction f;
    for (std::size_t i = 1; i < toks.size(); i += 2) {
      f.xs.push_back(parse_double(path, line, toks[i]));
      f.ys.push_back(parse_double(path, line, toks[i + 1]));
    }
    try {
      return make_pwl(std::move(f), declared);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path, line, std::string("map: ") + e.what());
    }
  }
  if (kind == "rotation" || kind == "reflection") {
    if (space != SpaceKind::circle) {
      throw ConfigError(path, line, "map: " + kind + " needs a circle space");
    }
    if (toks.size() != 2) throw ConfigError(path, line, "map: " + kind + " expects one angle");
    const double v = parse_double(path, line, toks[1]);
    return kind == "rotation" ? make_rotation(v) : make_reflection(v);
  }
  throw ConfigError(path, line, "map: unknown kind '" + kind + "'");
}

}  // namespace config_detail

inline void validate_config(const ScenarioConfig& cfg, const std::string& path = "<config>") {
  auto fail = [&](const std::string& field, const std::string& msg) {
    throw ConfigError(path, 0, field + ": " + msg);
  };
  if (cfg.space == SpaceKind::box) {
    if (cfg.dim == 0) fail("space.dim", "must be >= 1");
    if (cfg.lo.size() != cfg.dim || cfg.hi.size() != cfg.dim) {
      fail("space.lo/hi", "need exactly dim entries");
    }
    for (std::size_t i = 0; i < cfg.dim; ++i) {
      if (!(cfg.lo[i] <= cfg.hi[i])) fail("space.lo/hi", "lo must not exceed hi");
    }
  }
  switch (cfg.group_kind) {
    case GroupKind::cyclic:
      if (cfg.group_n == 0) fail("group.n", "must be >= 1");
      if (cfg.maps.size() != cfg.group_n) {
        fail("maps", "expected " + std::to_string(cfg.group_n) + " map entries for a group of order " +
                         std::to_string(cfg.group_n) + ", got " + std::to_string(cfg.maps.size()));
      }
      break;
    case GroupKind::table:
      if (cfg.table.size() != cfg.group_n * cfg.group_n) {
        fail("group.table", "expected n*n entries");
      }
      if (cfg.maps.size() != cfg.group_n) {
        fail("maps", "expected " + std::to_string(cfg.group_n) + " map entries for a group of order " +
                         std::to_string(cfg.group_n) + ", got " + std::to_string(cfg.maps.size()));
      }
      break;
    case GroupKind::word_ball:
      if (cfg.maps.empty()) fail("maps", "word_ball needs at least one generator");
      if (cfg.mode != ScenarioMode::explore) fail("iteration.mode", "word_ball runs use mode = explore");
      if (cfg.max_len == 0) fail("group.max_len", "must be >= 1");
      break;
    case GroupKind::single:
      if (cfg.maps.size() != 1) fail("maps", "single-map scenarios take exactly one map");
      if (cfg.mode != ScenarioMode::analyze) fail("iteration.mode", "single-map runs use mode = analyze");
      break;
  }
  if (cfg.mode == ScenarioMode::explore && cfg.group_kind != GroupKind::word_ball) {
    fail("iteration.mode", "explore requires group.kind = word_ball");
  }
  if (cfg.mode == ScenarioMode::analyze && cfg.group_kind != GroupKind::single) {
    fail("iteration.mode", "analyze requires group.kind = single");
  }
  const bool iterates = cfg.mode == ScenarioMode::center || cfg.mode == ScenarioMode::inflated ||
                        cfg.mode == ScenarioMode::involution;
  if (iterates) {
    const std::size_t want = cfg.space == SpaceKind::box ? cfg.dim : 1;
    if (cfg.x1.size() != want) fail("iteration.x1", "expected " + std::to_string(want) + " entries");
    if (cfg.mode == ScenarioMode::involution && cfg.group_n != 2) {
      fail("group.n", "involution mode needs a group of order 2");
    }
  }
  if (!(cfg.tol > 0.0)) fail("iteration.tol", "must be > 0");
  if (cfg.max_iter < 1) fail("iteration.max_iter", "must be >= 1");
  if (cfg.lambda < 1.0) fail("iteration.lambda", "must be >= 1");
  if (cfg.mode == ScenarioMode::center && cfg.lambda != 1.0) {
    fail("iteration.lambda", "must be 1 for mode = center");
  }
  static const std::vector<std::string> outcomes{"converged", "hypothesis_violated",
                                                 "empty_center", "max_iter"};
  if (iterates) {
    bool ok = false;
    for (const auto& s : outcomes) ok = ok || cfg.expect == s;
    if (!ok) fail("iteration.expect", "unknown expected outcome '" + cfg.expect + "'");
  } else if (cfg.mode == ScenarioMode::analyze) {
    if (cfg.expect != "analysis") fail("iteration.expect", "analyze runs expect 'analysis'");
  } else if (cfg.expect != "explored") {
    fail("iteration.expect", "explore runs expect 'explored'");
  }
  if (cfg.out_dir.empty()) fail("output.dir", "must not be empty");
  // map kinds must match the space
  for (std::size_t i = 0; i < cfg.maps.size(); ++i) {
    const bool circleish = std::holds_alternative<CircleRotation>(cfg.maps[i].node) ||
                           std::holds_alternative<CircleReflection>(cfg.maps[i].node);
    if (cfg.space == SpaceKind::circle && !circleish) {
      fail("maps", "entry " + std::to_string(i) + " is not a circle mapping");
    }
    if (cfg.space == SpaceKind::box && circleish) {
      fail("maps", "entry " + std::to_string(i) + " is not a box mapping");
    }
    if (const auto* aff = std::get_if<AffineMap>(&cfg.maps[i].node)) {
      if (aff->dim != cfg.dim) fail("maps", "entry " + std::to_string(i) + " has wrong dimension");
    }
  }
}

inline ScenarioConfig parse_config_text(const std::string& text, const std::string& path,
                                        const std::string& name) {
  ScenarioConfig cfg;
  cfg.name = name;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int lineno = 0;
  bool saw_lambda_explicit = false;
  struct RawMap {
    int line;
    std::string value;
  };
  std::vector<RawMap> raw_maps;
  std::string space_kind = "box", group_kind = "cyclic", mode = "center";

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(path, lineno, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (section != "space" && section != "group" && section != "maps" &&
          section != "iteration" && section != "sampling" && section != "output") {
        throw ConfigError(path, lineno, "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path, lineno, "expected 'key = value'");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if (section.empty()) throw ConfigError(path, lineno, "key outside any section");
    using namespace config_detail;

    if (section == "space") {
      if (key == "kind") {
        space_kind = value;
        if (value == "box") cfg.space = SpaceKind::box;
        else if (value == "circle") cfg.space = SpaceKind::circle;
        else throw ConfigError(path, lineno, "space.kind must be box or circle");
      } else if (key == "dim") {
        cfg.dim = static_cast<std::size_t>(parse_int(path, lineno, value));
      } else if (key == "lo") {
        cfg.lo = parse_doubles(path, lineno, value);
      } else if (key == "hi") {
        cfg.hi = parse_doubles(path, lineno, value);
      } else {
        throw ConfigError(path, lineno, "unknown key space." + key);
      }
    } else if (section == "group") {
      if (key == "kind") {
        group_kind = value;
        if (value == "cyclic") cfg.group_kind = GroupKind::cyclic;
        else if (value == "table") cfg.group_kind = GroupKind::table;
        else if (value == "word_ball") cfg.group_kind = GroupKind::word_ball;
        else if (value == "single") cfg.group_kind = GroupKind::single;
        else throw ConfigError(path, lineno, "unknown group.kind '" + value + "'");
      } else if (key == "n") {
        cfg.group_n = static_cast<std::size_t>(parse_int(path, lineno, value));
      } else if (key == "table") {
        cfg.table.clear();
        std::string row;
        std::istringstream rows(value);
        while (std::getline(rows, row, '/')) {
          for (const std::string& t : tokens_of(row)) {
            cfg.table.push_back(static_cast<int>(parse_int(path, lineno, t)));
          }
        }
      } else if (key == "max_len") {
        cfg.max_len = static_cast<std::size_t>(parse_int(path, lineno, value));
      } else if (key == "word_cap") {
        cfg.word_cap = static_cast<std::size_t>(parse_int(path, lineno, value));
      } else {
        throw ConfigError(path, lineno, "unknown key group." + key);
      }
    } else if (section == "maps") {
      if (key != "map") throw ConfigError(path, lineno, "unknown key maps." + key);
      raw_maps.push_back({lineno, value});
    } else if (section == "iteration") {
      if (key == "mode") {
        mode = value;
        if (value == "center") cfg.mode = ScenarioMode::center;
        else if (value == "inflated") cfg.mode = ScenarioMode::inflated;
        else if (value == "involution") cfg.mode = ScenarioMode::involution;
        else if (value == "analyze") cfg.mode = ScenarioMode::analyze;
        else if (value == "explore") cfg.mode = ScenarioMode::explore;
        else throw ConfigError(path, lineno, "unknown iteration.mode '" + value + "'");
      } else if (key == "x1") {
        cfg.x1 = parse_doubles(path, lineno, value);
      } else if (key == "tol") {
        cfg.tol = parse_double(path, lineno, value);
      } else if (key == "max_iter") {
        cfg.max_iter = static_cast<int>(parse_int(path, lineno, value));
      } else if (key == "lambda") {
        cfg.lambda = parse_double(path, lineno, value);
        saw_lambda_explicit = true;
      } else if (key == "expect") {
        cfg.expect = value;
      } else {
        throw ConfigError(path, lineno, "unknown key iteration." + key);
      }
    } else if (section == "sampling") {
      if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(path, lineno, value));
      } else if (key == "samples") {
        cfg.samples = static_cast<std::size_t>(parse_int(path, lineno, value));
      } else {
        throw ConfigError(path, lineno, "unknown key sampling." + key);
      }
    } else {  // output
      if (key == "dir") {
        cfg.out_dir = value;
      } else {
        throw ConfigError(path, lineno, "unknown key output." + key);
      }
    }
  }
  (void)saw_lambda_explicit;
  if (cfg.space == SpaceKind::circle) cfg.dim = 1;
  for (const auto& rm : raw_maps) {
    cfg.maps.push_back(config_detail::parse_map(path, rm.line, rm.value, cfg.space, cfg.dim));
  }
  validate_config(cfg, path);
  return cfg;
}

inline ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path, std::filesystem::path(path).stem().string());
}

inline std::string render_map(const Mapping& m) {
  std::string out;
  if (const auto* aff = std::get_if<AffineMap>(&m.node)) {
    out = "affine";
    for (double v : aff->a) out += " " + fmt17(v);
    out += " :";
    for (double v : aff->b) out += " " + fmt17(v);
  } else if (const auto* pwl = std::get_if<CoordPwlMap>(&m.node)) {
    out = "pwl";
    const PwlFunction& f = pwl->fs.front();
    for (std::size_t i = 0; i < f.xs.size(); ++i) {
      out += " " + fmt17(f.xs[i]) + " " + fmt17(f.ys[i]);
    }
  } else if (const auto* rot = std::get_if<CircleRotation>(&m.node)) {
    out = "rotation " + fmt17(rot->angle);
  } else if (const auto* ref = std::get_if<CircleReflection>(&m.node)) {
    out = "reflection " + fmt17(ref->axis);
  } else {
    throw std::invalid_argument("render_map: composite maps have no config form");
  }
  if (m.declared_lipschitz) out += " L=" + fmt17(*m.declared_lipschitz);
  return out;
}

// Canonical re-serialization with every default filled in; loading the
// rendered text reproduces the config exactly.
inline std::string render_config(const ScenarioConfig& cfg) {
  std::string s;
  s += "# scenario " + cfg.name + "\n\n[space]\nkind = ";
  s += cfg.space == SpaceKind::box ? "box" : "circle";
  s += "\n";
  if (cfg.space == SpaceKind::box) {
    s += "dim = " + std::to_string(cfg.dim) + "\nlo =";
    for (double v : cfg.lo) s += " " + fmt17(v);
    s += "\nhi =";
    for (double v : cfg.hi) s += " " + fmt17(v);
    s += "\n";
  }
  s += "\n[group]\nkind = ";
  s += to_string(cfg.group_kind);
  s += "\n";
  if (cfg.group_kind == GroupKind::cyclic || cfg.group_kind == GroupKind::table) {
    s += "n = " + std::to_string(cfg.group_n) + "\n";
  }
  if (cfg.group_kind == GroupKind::table) {
    s += "table =";
    for (std::size_t row = 0; row < cfg.group_n; ++row) {
      if (row) s += " /";
      for (std::size_t col = 0; col < cfg.group_n; ++col) {
        s += " " + std::to_string(cfg.table[row * cfg.group_n + col]);
      }
    }
    s += "\n";
  }
  if (cfg.group_kind == GroupKind::word_ball) {
    s += "max_len = " + std::to_string(cfg.max_len) + "\n";
    s += "word_cap = " + std::to_string(cfg.word_cap) + "\n";
  }
  s += "\n[maps]\n";
  for (const Mapping& m : cfg.maps) s += "map = " + render_map(m) + "\n";
  s += "\n[iteration]\nmode = ";
  s += to_string(cfg.mode);
  s += "\n";
  if (!cfg.x1.empty()) {
    s += "x1 =";
    for (double v : cfg.x1) s += " " + fmt17(v);
    s += "\n";
  }
  s += "tol = " + fmt17(cfg.tol) + "\n";
  s += "max_iter = " + std::to_string(cfg.max_iter) + "\n";
  s += "lambda = " + fmt17(cfg.lambda) + "\n";
  s += "expect = " + cfg.expect + "\n";
  s += "\n[sampling]\nseed = " + std::to_string(cfg.seed) + "\n";
  s += "samples = " + std::to_string(cfg.samples) + "\n";
  s += "\n[output]\ndir = " + cfg.out_dir + "\n";
  return s;
}

inline bool same_mapping(const Mapping& a, const Mapping& b) {
  if (a.node.index() != b.node.index()) return false;
  if (a.declared_lipschitz.has_value() != b.declared_lipschitz.has_value()) return false;
  if (a.declared_lipschitz && *a.declared_lipschitz != *b.declared_lipschitz) return false;
  if (const auto* x = std::get_if<AffineMap>(&a.node)) {
    const auto& y = std::get<AffineMap>(b.node);
    return x->dim == y.dim && x->a == y.a && x->b == y.b;
  }
  if (const auto* x = std::get_if<CoordPwlMap>(&a.node)) {
    const auto& y = std::get<CoordPwlMap>(b.node);
    if (x->fs.size() != y.fs.size()) return false;
    for (std::size_t i = 0; i < x->fs.size(); ++i) {
      if (x->fs[i].xs != y.fs[i].xs || x->fs[i].ys != y.fs[i].ys) return false;
    }
    return true;
  }
  if (const auto* x = std::get_if<CircleRotation>(&a.node)) {
    return x->angle == std::get<CircleRotation>(b.node).angle;
  }
  if (const auto* x = std::get_if<CircleReflection>(&a.node)) {
    return x->axis == std::get<CircleReflection>(b.node).axis;
  }
  return false;
}

inline bool same_config(const ScenarioConfig& a, const ScenarioConfig& b) {
  if (a.space != b.space || a.dim != b.dim || a.lo != b.lo || a.hi != b.hi) return false;
  if (a.group_kind != b.group_kind || a.group_n != b.group_n || a.table != b.table) return false;
  if (a.max_len != b.max_len || a.word_cap != b.word_cap) return false;
  if (a.maps.size() != b.maps.size()) return false;
  for (std::size_t i = 0; i < a.maps.size(); ++i) {
    if (!same_mapping(a.maps[i], b.maps[i])) return false;
  }
  if (a.mode != b.mode || a.x1 != b.x1 || a.tol != b.tol || a.max_iter != b.max_iter) return false;
  if (a.lambda != b.lambda || a.expect != b.expect) return false;
  if (a.seed != b.seed || a.samples != b.samples || a.out_dir != b.out_dir) return false;
  return true;
}

}  // namespace hyperfix

#endif
