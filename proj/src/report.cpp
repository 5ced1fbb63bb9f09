#include "cdg/report.hpp"

#include <memory>
#include <utility>

#include "cdg/errors.hpp"

namespace cdg {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DescriptorError(std::string("report: missing field '") + key + "'");
  }
  return j.at(key);
}

// In-memory documents may hold nonnegative values as signed numbers.
bool is_u64(const json& v) {
  return v.is_number_unsigned() ||
         (v.is_number_integer() && v.get<i64>() >= 0);
}

u64 get_u64(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!is_u64(v)) {
    throw DescriptorError(std::string("report: field '") + key +
                          "' must be a nonnegative integer");
  }
  return v.get<u64>();
}

bool get_bool(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_boolean()) {
    throw DescriptorError(std::string("report: field '") + key +
                          "' must be a boolean");
  }
  return v.get<bool>();
}

std::string get_str(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_string()) {
    throw DescriptorError(std::string("report: field '") + key +
                          "' must be a string");
  }
  return v.get<std::string>();
}

std::vector<u64> get_u64_vec(const json& j, const char* key) {
  const json& v = need(j, key);
  if (!v.is_array()) {
    throw DescriptorError(std::string("report: field '") + key +
                          "' must be an array");
  }
  std::vector<u64> out;
  for (const json& x : v) {
    if (!is_u64(x)) {
      throw DescriptorError(std::string("report: field '") + key +
                            "' must hold nonnegative integers");
    }
    out.push_back(x.get<u64>());
  }
  return out;
}

}  // namespace

json exponent_to_json(const Exponent& e) {
  if (e.exact()) return json(e.base);
  json twice = json::array();
  for (const auto& t : e.twice) twice.push_back(factored_to_json(*t));
  return json{{"base", e.base}, {"twice", std::move(twice)}};
}

Exponent exponent_from_json(const json& j) {
  if (j.is_number_integer()) return Exponent(j.get<i64>());
  if (!j.is_object()) {
    throw DescriptorError("report: exponent must be an integer or an object");
  }
  Exponent e;
  const json& b = need(j, "base");
  if (!b.is_number_integer()) {
    throw DescriptorError("report: exponent base must be an integer");
  }
  e.base = b.get<i64>();
  const json& tw = need(j, "twice");
  if (!tw.is_array()) throw DescriptorError("report: exponent twice must be an array");
  for (const json& t : tw) {
    e.twice.push_back(std::make_shared<const FactoredInt>(factored_from_json(t)));
  }
  return e;
}

json factored_to_json(const FactoredInt& f) {
  json factors = json::array();
  for (const auto& [prime, e] : f.factors) {
    factors.push_back(json{{"prime", prime}, {"exponent", exponent_to_json(e)}});
  }
  json out{{"factors", std::move(factors)}};
  if (auto v = f.value()) out["value"] = *v;
  return out;
}

FactoredInt factored_from_json(const json& j) {
  const json& factors = need(j, "factors");
  if (!factors.is_array()) {
    throw DescriptorError("report: factored 'factors' must be an array");
  }
  FactoredInt f;
  for (const json& entry : factors) {
    const u64 prime = get_u64(entry, "prime");
    if (!is_prime(prime)) {
      throw DescriptorError("report: " + std::to_string(prime) + " is not prime");
    }
    if (f.factors.count(prime)) {
      throw DescriptorError("report: duplicate prime " + std::to_string(prime));
    }
    f.factors[prime] = exponent_from_json(need(entry, "exponent"));
  }
  return f;
}

json module_to_json(const MatModule& m) {
  json action = json::object();
  for (const auto& [label, mat] : m.action) {
    json rows = json::array();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < mat.cols(); ++k) row.push_back(mat.at(i, k));
      rows.push_back(std::move(row));
    }
    action[label] = std::move(rows);
  }
  return json{{"p", m.p},
              {"dim", m.dim},
              {"group_ref", m.group_ref},
              {"action", std::move(action)}};
}

MatModule module_from_json(const json& j) {
  MatModule m;
  m.p = u32(get_u64(j, "p"));
  m.dim = u32(get_u64(j, "dim"));
  m.group_ref = get_str(j, "group_ref");
  const json& action = need(j, "action");
  if (!action.is_object()) {
    throw DescriptorError("report: module 'action' must be an object");
  }
  for (const auto& [label, rows] : action.items()) {
    if (!rows.is_array() || rows.size() != m.dim) {
      throw DescriptorError("report: module matrix shape mismatch");
    }
    FpMatrix mat(m.p, m.dim, m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
      const json& row = rows.at(i);
      if (!row.is_array() || row.size() != m.dim) {
        throw DescriptorError("report: module matrix shape mismatch");
      }
      for (std::size_t k = 0; k < m.dim; ++k) {
        const json& x = row.at(k);
        if (!is_u64(x) || x.get<u64>() >= m.p) {
          throw DescriptorError("report: module matrix entry out of range");
        }
        mat.at(i, k) = u32(x.get<u64>());
      }
    }
    m.action.emplace(label, std::move(mat));
  }
  validate_module(m);
  return m;
}

json spun_to_json(const SpunModule& s) {
  return json{{"module", module_to_json(s.module)},
              {"group_labels", s.group_labels},
              {"normal_labels", s.normal_labels},
              {"seed", s.seed},
              {"attempts", s.attempts}};
}

SpunModule spun_from_json(const json& j) {
  SpunModule s;
  s.module = module_from_json(need(j, "module"));
  const json& gl = need(j, "group_labels");
  const json& nl = need(j, "normal_labels");
  if (!gl.is_array() || !nl.is_array()) {
    throw DescriptorError("report: spun module label lists must be arrays");
  }
  for (const json& x : gl) s.group_labels.push_back(x.get<std::string>());
  for (const json& x : nl) s.normal_labels.push_back(x.get<std::string>());
  for (const auto& label : s.group_labels) {
    if (!s.module.action.count(label)) {
      throw DescriptorError("report: spun module lacks matrix for '" + label + "'");
    }
  }
  for (const auto& label : s.normal_labels) {
    if (!s.module.action.count(label)) {
      throw DescriptorError("report: spun module lacks matrix for '" + label + "'");
    }
  }
  s.seed = get_u64(j, "seed");
  s.attempts = u32(get_u64(j, "attempts"));
  return s;
}

json certificate_to_json(const Certificate& c) {
  json rules = json::array();
  for (const DivRule& r : c.div_rules) {
    rules.push_back(json{{"family", r.family}, {"divisors", r.divisors}});
  }
  return json{{"order", factored_to_json(c.order)},
              {"primes", c.primes},
              {"fitting_height", c.fitting_height},
              {"sylow_tower", c.sylow_tower},
              {"min_normal_order", c.min_normal_order},
              {"min_normal_unique", c.min_normal_unique},
              {"cd_support", c.cd_support},
              {"div_rules", std::move(rules)},
              {"cdg", c.cdg}};
}

Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.order = factored_from_json(need(j, "order"));
  c.primes = get_u64_vec(j, "primes");
  c.fitting_height = u32(get_u64(j, "fitting_height"));
  c.sylow_tower = get_bool(j, "sylow_tower");
  c.min_normal_order = get_u64(j, "min_normal_order");
  c.min_normal_unique = get_bool(j, "min_normal_unique");
  c.cd_support = get_u64_vec(j, "cd_support");
  const json& rules = need(j, "div_rules");
  if (!rules.is_array()) {
    throw DescriptorError("report: 'div_rules' must be an array");
  }
  for (const json& r : rules) {
    c.div_rules.push_back(DivRule{get_str(r, "family"), get_u64_vec(r, "divisors")});
  }
  c.cdg = get_bool(j, "cdg");
  return c;
}

json structural_to_json(const StructuralGroup& g) {
  json out{{"kind", kind_name(g.kind)}};
  switch (g.kind) {
    case GroupKind::SevenCube:
      out["p"] = g.p;
      out["r"] = g.r;
      out["x"] = g.x;
      out["dim"] = factored_to_json(g.dim);
      break;
    case GroupKind::ThreePrime:
      out["p1"] = g.p1;
      out["p2"] = g.p2;
      out["p"] = g.p;
      out["r"] = g.r;
      out["x"] = g.x;
      out["dim"] = factored_to_json(g.dim);
      break;
    case GroupKind::Step:
      out["p"] = g.p;
      out["r"] = g.r;
      out["x"] = g.x;
      out["q"] = g.q;
      out["dim"] = factored_to_json(g.dim);
      if (!g.inner) throw DescriptorError("report: step lacks its inner level");
      out["inner"] = structural_to_json(*g.inner);
      if (g.module) out["module"] = spun_to_json(*g.module);
      break;
    case GroupKind::Cyclic:
      out["m"] = g.cyclic_m;
      break;
    case GroupKind::Extraspecial:
      out["p"] = g.es_p;
      out["n"] = g.es_n;
      break;
  }
  return out;
}

StructuralGroup structural_from_json(const json& j) {
  StructuralGroup g;
  g.kind = kind_from_name(get_str(j, "kind"));
  switch (g.kind) {
    case GroupKind::SevenCube:
      g.p = get_u64(j, "p");
      g.r = get_u64(j, "r");
      g.x = u32(get_u64(j, "x"));
      g.dim = factored_from_json(need(j, "dim"));
      break;
    case GroupKind::ThreePrime:
      g.p1 = get_u64(j, "p1");
      g.p2 = get_u64(j, "p2");
      g.p = get_u64(j, "p");
      g.r = get_u64(j, "r");
      g.x = u32(get_u64(j, "x"));
      g.dim = factored_from_json(need(j, "dim"));
      break;
    case GroupKind::Step:
      g.p = get_u64(j, "p");
      g.r = get_u64(j, "r");
      g.x = u32(get_u64(j, "x"));
      g.q = get_u64(j, "q");
      g.dim = factored_from_json(need(j, "dim"));
      g.inner = std::make_shared<const StructuralGroup>(
          structural_from_json(need(j, "inner")));
      if (j.contains("module")) {
        g.module =
            std::make_shared<const SpunModule>(spun_from_json(j.at("module")));
      }
      break;
    case GroupKind::Cyclic:
      g.cyclic_m = get_u64(j, "m");
      g.dim = FactoredInt::one();
      break;
    case GroupKind::Extraspecial:
      g.es_p = get_u64(j, "p");
      g.es_n = get_u64(j, "n");
      g.dim = FactoredInt::from_u64(g.es_n);
      break;
  }
  return g;
}

json level_to_json(const TowerLevel& l) {
  return json{{"group", structural_to_json(l.group)},
              {"certificate", certificate_to_json(l.cert)}};
}

TowerLevel level_from_json(const json& j) {
  TowerLevel l;
  l.group = structural_from_json(need(j, "group"));
  l.cert = certificate_from_json(need(j, "certificate"));
  return l;
}

json tower_report(const Tower& t) {
  json levels = json::array();
  for (const TowerLevel& l : t) levels.push_back(level_to_json(l));
  return json{{"schema", kSchemaVersion},
              {"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
              {"levels", std::move(levels)}};
}

Tower tower_from_report(const json& j) {
  if (get_u64(j, "schema") != u64(kSchemaVersion)) {
    throw DescriptorError("report: unsupported schema version");
  }
  const json& levels = need(j, "levels");
  if (!levels.is_array() || levels.empty()) {
    throw DescriptorError("report: 'levels' must be a nonempty array");
  }
  Tower t;
  for (const json& l : levels) t.push_back(level_from_json(l));
  return t;
}

json degrees_to_json(u64 order, const DegreeMultiset& dm) {
  json degrees = json::array();
  for (const auto& [d, mult] : dm) {
    degrees.push_back(json{{"degree", d}, {"multiplicity", mult}});
  }
  return json{{"schema", kSchemaVersion},
              {"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
              {"order", order},
              {"degrees", std::move(degrees)},
              {"support", degree_support(dm)},
              {"cdg", is_cdg(dm)}};
}

}  // namespace cdg
