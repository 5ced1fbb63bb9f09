#include "cdg/tower.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <utility>

#include "cdg/chardeg.hpp"
#include "cdg/errors.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// Names
// ---------------------------------------------------------------------------

std::string kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::SevenCube: return "seven-cube";
    case GroupKind::ThreePrime: return "three-prime";
    case GroupKind::Step: return "step";
    case GroupKind::Cyclic: return "cyclic";
    case GroupKind::Extraspecial: return "extraspecial";
  }
  throw DomainError("kind_name: bad kind");
}

GroupKind kind_from_name(const std::string& s) {
  if (s == "seven-cube") return GroupKind::SevenCube;
  if (s == "three-prime") return GroupKind::ThreePrime;
  if (s == "step") return GroupKind::Step;
  if (s == "cyclic") return GroupKind::Cyclic;
  if (s == "extraspecial") return GroupKind::Extraspecial;
  throw DescriptorError("unknown group kind '" + s + "'");
}

std::string mode_name(StepMode m) {
  switch (m) {
    case StepMode::Auto: return "auto";
    case StepMode::Explicit: return "explicit";
    case StepMode::Symbolic: return "symbolic";
  }
  throw DomainError("mode_name: bad mode");
}

StepMode mode_from_name(const std::string& s) {
  if (s == "auto") return StepMode::Auto;
  if (s == "explicit") return StepMode::Explicit;
  if (s == "symbolic") return StepMode::Symbolic;
  throw DescriptorError("unknown step mode '" + s + "'");
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::ThreePrimes: return "three-primes";
    case Strategy::FreshPrimes: return "fresh-primes";
  }
  throw DomainError("strategy_name: bad strategy");
}

Strategy strategy_from_name(const std::string& s) {
  if (s == "three-primes") return Strategy::ThreePrimes;
  if (s == "fresh-primes") return Strategy::FreshPrimes;
  throw DescriptorError("unknown strategy '" + s + "'");
}

// ---------------------------------------------------------------------------
// Helpers
// ---------------------------------------------------------------------------

namespace {

bool mul_fits(u64 a, u64 b, u64* out) { return !__builtin_mul_overflow(a, b, out); }

std::optional<u64> checked_pow(u64 b, u64 e) {
  u64 acc = 1;
  for (u64 i = 0; i < e; ++i) {
    if (!mul_fits(acc, b, &acc)) return std::nullopt;
  }
  return acc;
}

std::vector<u64> prime_list(u64 n) {
  std::vector<u64> v;
  for (const auto& [p, e] : factorize(n)) v.push_back(p);
  return v;
}

std::vector<u64> sorted_set(std::vector<u64> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

FpMatrix mat_pow(FpMatrix m, u64 k) {
  FpMatrix acc = FpMatrix::identity(m.p(), m.rows());
  while (k) {
    if (k & 1) acc = mat_mul(acc, m);
    m = mat_mul(m, m);
    k >>= 1;
  }
  return acc;
}

// a \ b for ascending vectors.
std::vector<u64> support_minus(const std::vector<u64>& a, const std::vector<u64>& b) {
  std::vector<u64> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool is_subset(const std::vector<u64>& a, const std::vector<u64>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// E(V) sits in the last 2n+1 word coordinates; the first a_len are the
// acting group's.  E is the a-part-zero slice and E' = Z(E) the slice with
// v = alpha = 0 as well.
struct ELayer {
  Subgroup e, eprime;
};

ELayer e_layer(const ConcreteGroup& g, std::size_t a_len, u32 n) {
  ELayer out;
  for (int id = 0; id < int(g.order()); ++id) {
    const Element& w = g.element(id);
    bool in_e = true;
    for (std::size_t i = 0; i < a_len; ++i) {
      if (w[i]) {
        in_e = false;
        break;
      }
    }
    if (!in_e) continue;
    out.e.ids.push_back(id);
    bool central = true;
    for (std::size_t i = 0; i < 2 * std::size_t(n); ++i) {
      if (w[a_len + i]) {
        central = false;
        break;
      }
    }
    if (central) out.eprime.ids.push_back(id);
  }
  return out;
}

// New-degree families of G = E ⋊ A: degrees of G/E' that G/E lacks come from
// characters seeing only E/E' ("module"), degrees of G that G/E' lacks from
// characters nontrivial on E' ("faithful").
struct Families {
  std::vector<u64> module_family, faithful_family;
};

Families degree_families(const ConcreteGroup& g, const DegreeMultiset& dm,
                         std::size_t a_len, u32 n) {
  ELayer el = e_layer(g, a_len, n);
  DegreeMultiset d1 = char_degrees(quotient(g, el.eprime));
  DegreeMultiset d2 = char_degrees(quotient(g, el.e));
  std::vector<u64> s0 = degree_support(dm);
  std::vector<u64> s1 = degree_support(d1);
  std::vector<u64> s2 = degree_support(d2);
  if (!is_subset(s2, s1) || !is_subset(s1, s0)) {
    throw NumericalMethodError("degree_families: quotient degrees not nested");
  }
  return {support_minus(s1, s2), support_minus(s0, s1)};
}

DivRule derive_rule(std::string family, const std::vector<u64>& degrees) {
  if (degrees.empty()) {
    throw ConstructionError("degree family '" + family + "' is empty");
  }
  u64 g = 0;
  for (u64 d : degrees) g = gcd_u64(g, d);
  DivRule rule;
  rule.family = std::move(family);
  rule.divisors = prime_list(g);
  if (rule.divisors.size() < 2) {
    throw ConstructionError("degree family '" + rule.family +
                            "' has no pair of common prime divisors");
  }
  return rule;
}

bool contains_u64(const std::vector<u64>& v, u64 x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

TowerLevel fixture_cyclic(u64 m) {
  if (m == 0) throw DescriptorError("fixture_cyclic: m must be positive");
  StructuralGroup sg;
  sg.kind = GroupKind::Cyclic;
  sg.cyclic_m = m;
  sg.dim = FactoredInt::one();

  Certificate c;
  c.order = FactoredInt::from_u64(m);
  c.primes = prime_list(m);
  c.fitting_height = m == 1 ? 0 : 1;
  c.sylow_tower = true;
  // The minimal normal subgroups of Z_m are its prime-order subgroups, one
  // per prime divisor.
  c.min_normal_order = m == 1 ? 0 : c.primes.front();
  c.min_normal_unique = c.primes.size() == 1;
  c.cd_support = {1};
  c.cdg = true;
  return {std::move(sg), std::move(c)};
}

TowerLevel fixture_extraspecial(u32 p, u32 n) {
  if (!is_prime(p) || p == 2) {
    throw DescriptorError("fixture_extraspecial: p must be an odd prime");
  }
  if (n == 0) throw DescriptorError("fixture_extraspecial: n must be positive");
  e_order(EGroup{p, n});  // DomainError when p^(2n+1) does not fit

  StructuralGroup sg;
  sg.kind = GroupKind::Extraspecial;
  sg.es_p = p;
  sg.es_n = n;
  sg.dim = FactoredInt::from_u64(n);

  Certificate c;
  c.order = FactoredInt::one().times_prime_pow(p, Exponent(i64(2 * n + 1)));
  c.primes = {p};
  c.fitting_height = 1;
  c.sylow_tower = true;
  c.min_normal_order = p;  // every minimal normal subgroup lies in Z(E) = Z_p
  c.min_normal_unique = true;
  c.cd_support = {1, *checked_pow(p, n)};
  c.cdg = is_cdg_support(c.cd_support);
  return {std::move(sg), std::move(c)};
}

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

TowerLevel build_base_seven_cube(u64 cap) {
  StructuralGroup sg;
  sg.kind = GroupKind::SevenCube;
  sg.p = 7;
  sg.r = 6;
  sg.x = 5;
  sg.dim = FactoredInt::from_u64(1);

  ConcreteGroup g = build_concrete(sg, cap);
  DegreeMultiset dm = char_degrees(g);
  FittingData fd = fitting_data(g);
  std::vector<Subgroup> mins = minimal_normal_subgroups(g);
  if (mins.empty()) {
    throw ConstructionError("seven-cube: no minimal normal subgroup found");
  }
  Families fam = degree_families(g, dm, 1, 1);

  Certificate c;
  c.order = FactoredInt::from_u64(g.order());
  c.primes = prime_list(g.order());
  c.fitting_height = fd.height;
  c.sylow_tower = fd.sylow_tower;
  c.min_normal_order = mins.front().ids.size();
  c.min_normal_unique = mins.size() == 1;
  c.cd_support = degree_support(dm);
  c.div_rules = {derive_rule("module", fam.module_family),
                 derive_rule("faithful", fam.faithful_family)};
  c.cdg = is_cdg(dm);
  return {std::move(sg), std::move(c)};
}

TowerLevel build_base_three_prime(u64 p1, u64 p2, u64 r) {
  if (!is_prime(p1) || !is_prime(p2) || !is_prime(r)) {
    throw DescriptorError("three-prime base: p1, p2, r must be prime");
  }
  if (p1 == p2 || p1 == r || p2 == r) {
    throw DescriptorError("three-prime base: p1, p2, r must be distinct");
  }
  if (p2 == 2) throw DescriptorError("three-prime base: p2 must be odd");
  if (r == 2) throw DescriptorError("three-prime base: r must be odd");
  if ((p2 - 1) % r != 0) {
    throw DescriptorError("three-prime base: r must divide p2 - 1");
  }
  if (p2 >= (u64(1) << 31)) {
    throw DescriptorError("three-prime base: p2 too large");
  }

  MatModule v = irreducible_cyclic_module(p1, u32(p2));
  const u32 n = v.dim;
  const FpMatrix& m = v.action.at("g");
  // The generator acts with exact order p1, so its eigenvalues are primitive
  // p1-th roots of unity; together with the scaling by x of order r this
  // makes the action on nonzero vectors of V + V* free, and the nonlinear
  // degrees are exactly r*p1 (orbits on hyperplane characters) and r*p2^n
  // (characters nontrivial on the center).
  if (m == FpMatrix::identity(m.p(), n)) {
    throw ConstructionError("three-prime base: module action is trivial");
  }
  if (!(mat_pow(m, p1) == FpMatrix::identity(m.p(), n))) {
    throw ConstructionError("three-prime base: module action order is not p1");
  }
  if (!fixed_space(v, {"g"}).empty()) {
    throw ConstructionError("three-prime base: C_V(H) is nonzero");
  }
  if (!dual_fixed_check(v, {"g"})) {
    throw ConstructionError("three-prime base: dual module has fixed points");
  }
  const u32 x = element_of_order(u32(p2), u32(r)).value;

  auto pn = checked_pow(p2, n);
  u64 d_module = 0, d_faithful = 0;
  if (!pn || !mul_fits(r, p1, &d_module) || !mul_fits(r, *pn, &d_faithful)) {
    throw DomainError("three-prime base: degree support overflows");
  }

  StructuralGroup sg;
  sg.kind = GroupKind::ThreePrime;
  sg.p1 = p1;
  sg.p2 = p2;
  sg.p = p2;
  sg.r = r;
  sg.x = x;
  sg.dim = FactoredInt::from_u64(n);

  Certificate c;
  c.order = FactoredInt::one()
                .times_prime_pow(p2, Exponent(i64(2 * n + 1)))
                .times(p1)
                .times(r);
  c.primes = sorted_set({p1, p2, r});
  c.fitting_height = 2;  // F(G) = E, G/E = Z_p1 x Z_r
  c.sylow_tower = true;  // E is a normal Sylow p2-subgroup, G/E abelian
  c.min_normal_order = p2;
  c.min_normal_unique = true;  // every minimal normal lies in Z(E) = Z_p2
  c.cd_support = sorted_set({1, d_module, d_faithful});
  c.div_rules = {DivRule{"module", sorted_set({p1, r})},
                 DivRule{"faithful", sorted_set({p2, r})}};
  c.cdg = is_cdg_support(c.cd_support);
  return {std::move(sg), std::move(c)};
}

// ---------------------------------------------------------------------------
// Steps
// ---------------------------------------------------------------------------

TowerLevel build_step(const TowerLevel& prev, u64 p, u64 r, StepMode mode,
                      u64 cap) {
  if (!is_prime(p) || p == 2) {
    throw DescriptorError("step: p must be an odd prime");
  }
  if (p >= (u64(1) << 31)) throw DescriptorError("step: p too large");
  if (!is_prime(r) || r == 2) {
    throw DescriptorError("step: r must be an odd prime");
  }
  if ((p - 1) % r != 0) throw DescriptorError("step: r must divide p - 1");
  const u64 q = prev.cert.min_normal_order;
  if (q == 0) {
    throw DescriptorError("step: previous level has no minimal normal subgroup");
  }
  if (!is_prime(q)) {
    throw DescriptorError("step: previous minimal normal subgroup order must be prime");
  }
  if (p == q) {
    throw CoprimalityError("step: p divides the minimal normal subgroup order");
  }
  if (r == q || r == p) {
    throw DescriptorError("step: p, q, r must be distinct");
  }

  // dim V' = |G| (q - 1) / q, the commutator component of the regular module.
  FactoredInt n = prev.cert.order.div_prime(q).times(q - 1);
  const std::optional<u64> nv = n.value();

  StepMode chosen = mode;
  if (mode == StepMode::Auto) {
    const u64 ecap = cap ? cap : default_enumeration_cap();
    const std::optional<u64> ov = prev.cert.order.value();
    chosen = (ov && *ov <= ecap && nv && *nv <= 4096) ? StepMode::Explicit
                                                      : StepMode::Symbolic;
  }

  StructuralGroup sg;
  sg.kind = GroupKind::Step;
  sg.p = p;
  sg.r = r;
  sg.x = element_of_order(u32(p), u32(r)).value;
  sg.q = q;
  sg.dim = n;
  sg.inner = std::make_shared<const StructuralGroup>(prev.group);

  if (chosen == StepMode::Explicit) {
    ConcreteGroup h = build_concrete(prev.group, cap);
    const std::optional<u64> ov = prev.cert.order.value();
    if (!ov || h.order() != *ov) {
      throw CertificationError("order: previous level enumerates to " +
                               std::to_string(h.order()) + ", certificate says " +
                               prev.cert.order.str());
    }
    std::vector<Subgroup> mins = minimal_normal_subgroups(h);
    if (prev.cert.min_normal_unique && mins.size() != 1) {
      throw CertificationError("min_normal: claimed unique, enumeration finds " +
                               std::to_string(mins.size()));
    }
    const Subgroup* nsub = nullptr;
    for (const Subgroup& s : mins) {
      if (s.ids.size() == q) {
        nsub = &s;
        break;
      }
    }
    if (!nsub) {
      throw CertificationError("min_normal: no minimal normal subgroup of order " +
                               std::to_string(q));
    }
    SpunModule spun = module_with_trivial_fixed_points(h, *nsub, u32(p));
    if (!nv || spun.module.dim != *nv) {
      throw CertificationError("module_dim: spun dimension " +
                               std::to_string(spun.module.dim) +
                               " does not match " + n.str());
    }
    if (!fixed_space(spun.module, spun.normal_labels).empty()) {
      throw ConstructionError("step: C_V(N) is nonzero");
    }
    if (!dual_fixed_check(spun.module, spun.group_labels)) {
      throw ConstructionError("step: dual module has fixed points");
    }
    sg.module = std::make_shared<const SpunModule>(std::move(spun));
  }

  Exponent pe;
  if (nv && *nv <= (u64(1) << 62)) {
    pe = Exponent(i64(2 * *nv + 1));
  } else {
    pe = Exponent(1);
    pe.twice.push_back(std::make_shared<const FactoredInt>(n));
  }

  const bool fresh =
      !contains_u64(prev.cert.primes, p) && !contains_u64(prev.cert.primes, r);

  Certificate c;
  c.order = prev.cert.order.times(r).times_prime_pow(p, pe);
  {
    std::vector<u64> pr = prev.cert.primes;
    pr.push_back(p);
    pr.push_back(r);
    c.primes = sorted_set(std::move(pr));
  }
  // F(G') = E(V'), so the height grows by exactly one.
  c.fitting_height = prev.cert.fitting_height + 1;
  // With fresh primes E(V') is the full Sylow p-subgroup and Z_r a normal
  // Sylow r-subgroup of the quotient, so a tower lifts; with reused primes
  // the tower property is left uncertified.
  c.sylow_tower = fresh && prev.cert.sylow_tower;
  c.min_normal_order = p;
  c.min_normal_unique = true;
  // New degrees: characters seeing E/E' induce from stabilizers of nonzero
  // module characters, whose orbits have size divisible by q (N acts without
  // fixed points) and by r (the scaling acts freely); characters nontrivial
  // on E' have degree divisible by p^dim(V) and by r (x^2 has order r on the
  // central characters).  Old degrees lift through G'/E = G x Z_r.
  c.div_rules = {DivRule{"module", sorted_set({q, r})},
                 DivRule{"faithful", sorted_set({p, r})}};
  c.cdg = prev.cert.cdg;
  return {std::move(sg), std::move(c)};
}

Tower build_tower(const TowerLevel& base, u32 steps, Strategy strategy,
                  StepMode mode, u64 cap) {
  Tower t{base};
  for (u32 i = 0; i < steps; ++i) {
    const TowerLevel& prev = t.back();
    u64 p = 0, r = 0;
    if (strategy == Strategy::ThreePrimes) {
      if (base.group.kind != GroupKind::ThreePrime) {
        throw DescriptorError("three-primes strategy needs a three-prime base");
      }
      p = prev.group.p == base.group.p2 ? base.group.p1 : base.group.p2;
      r = base.group.r;
    } else {
      std::tie(p, r) = next_fresh_primes(prev.cert.primes);
    }
    t.push_back(build_step(prev, p, r, mode, cap));
  }
  return t;
}

std::pair<u64, u64> next_fresh_primes(const std::vector<u64>& used) {
  u64 r = 0;
  for (u64 c = 3;; c += 2) {
    if (is_prime(c) && !contains_u64(used, c)) {
      r = c;
      break;
    }
  }
  for (u64 k = 1; k <= 1000000; ++k) {
    const u64 p = k * r + 1;
    if (is_prime(p) && !contains_u64(used, p)) return {p, r};
  }
  throw Error("next_fresh_primes: no prime p = 1 mod r found");
}

double predict_step_log10(const TowerLevel& prev, u64 p, u64 r) {
  const u64 q = prev.cert.min_normal_order;
  if (q == 0 || !is_prime(q)) {
    throw DescriptorError(
        "predict_step_log10: previous level needs a prime-order minimal normal subgroup");
  }
  FactoredInt n = prev.cert.order.div_prime(q).times(q - 1);
  const std::optional<u64> nv = n.value();
  if (!nv) return std::numeric_limits<double>::infinity();
  return prev.cert.order.log10() + std::log10(double(r)) +
         (2.0 * double(*nv) + 1.0) * std::log10(double(p));
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

ConcreteGroup build_concrete(const StructuralGroup& sg, u64 cap) {
  const u64 ecap = cap ? cap : default_enumeration_cap();
  switch (sg.kind) {
    case GroupKind::Cyclic:
      return make_cyclic_group(sg.cyclic_m);
    case GroupKind::Extraspecial:
      return make_extraspecial_group(EGroup{u32(sg.es_p), u32(sg.es_n)}, cap);
    case GroupKind::SevenCube: {
      EGroup e{7, 1};
      ConcreteGroup a = make_cyclic_group(6);
      return semidirect_product(e, a, {eaut_sigma(e, 5)}, cap);
    }
    case GroupKind::ThreePrime: {
      MatModule v = irreducible_cyclic_module(sg.p1, u32(sg.p2));
      const u32 n = v.dim;
      u64 pred = 1;
      bool fits = true;
      for (u32 i = 0; i < 2 * n + 1 && fits; ++i) fits = mul_fits(pred, sg.p2, &pred);
      if (fits) fits = mul_fits(pred, sg.p1, &pred) && mul_fits(pred, sg.r, &pred);
      if (!fits || pred > ecap) {
        throw CapError("build_concrete: three-prime base order exceeds the cap of " +
                       std::to_string(ecap));
      }
      EGroup e{u32(sg.p2), n};
      ConcreteGroup a =
          direct_product(make_cyclic_group(sg.p1), make_cyclic_group(sg.r));
      return semidirect_product(
          e, a, {eaut_from_matrix(v.action.at("g")), eaut_sigma(e, sg.x)}, cap);
    }
    case GroupKind::Step: {
      if (!sg.module) {
        throw DescriptorError(
            "build_concrete: symbolic step has no materialized module; "
            "rebuild the step in explicit mode");
      }
      if (!sg.inner) throw DescriptorError("build_concrete: step has no inner level");
      ConcreteGroup h = build_concrete(*sg.inner, cap);
      const SpunModule& sm = *sg.module;
      const u32 n = sm.module.dim;
      // Guard before any dense per-element action cache can be built.
      const double lg = (2.0 * n + 1.0) * std::log10(double(sg.p)) +
                        std::log10(double(h.order())) + std::log10(double(sg.r));
      if (lg > std::log10(double(ecap)) + 1e-9) {
        throw CapError("build_concrete: step order has log10 = " +
                       std::to_string(lg) + ", beyond the cap of " +
                       std::to_string(ecap));
      }
      if (sm.group_labels.size() != h.generator_ids().size()) {
        throw ConstructionError(
            "build_concrete: module labels do not match the inner generators");
      }
      EGroup e{u32(sg.p), n};
      ConcreteGroup a = direct_product(h, make_cyclic_group(sg.r));
      std::vector<EAut> acts;
      for (const std::string& label : sm.group_labels) {
        acts.push_back(eaut_from_matrix(sm.module.action.at(label)));
      }
      acts.push_back(eaut_sigma(e, sg.x));
      return semidirect_product(e, a, acts, cap);
    }
  }
  throw DomainError("build_concrete: bad kind");
}

// ---------------------------------------------------------------------------
// Cross-validation
// ---------------------------------------------------------------------------

void cross_validate(const TowerLevel& level, u64 cap) {
  const Certificate& c = level.cert;
  ConcreteGroup g = build_concrete(level.group, cap);

  if (!(FactoredInt::from_u64(g.order()) == c.order)) {
    throw CertificationError("order: certificate says " + c.order.str() +
                             ", enumeration finds " + std::to_string(g.order()));
  }
  if (prime_list(g.order()) != c.primes) {
    throw CertificationError("primes: certificate prime set does not match");
  }

  try {
    DegreeMultiset dm = char_degrees(g);
    if (!c.cd_support.empty() && degree_support(dm) != c.cd_support) {
      throw CertificationError("cd_support: enumerated degree support differs");
    }
    if (is_cdg(dm) != c.cdg) {
      throw CertificationError("cdg: certificate says " +
                               std::string(c.cdg ? "true" : "false") +
                               ", degrees say otherwise");
    }
    if (!c.div_rules.empty()) {
      const std::optional<u64> nv = level.group.dim.value();
      if (!nv) throw CertificationError("div_rules: module dimension not exact");
      const std::size_t a_len = g.element(0).size() - (2 * *nv + 1);
      Families fam = degree_families(g, dm, a_len, u32(*nv));
      for (const DivRule& rule : c.div_rules) {
        const std::vector<u64>* famv = nullptr;
        if (rule.family == "module") famv = &fam.module_family;
        else if (rule.family == "faithful") famv = &fam.faithful_family;
        else throw CertificationError("div_rules: unknown family '" + rule.family + "'");
        if (famv->empty()) {
          throw CertificationError("div_rules: family '" + rule.family +
                                   "' has no degrees");
        }
        for (u64 d : *famv) {
          for (u64 dv : rule.divisors) {
            if (d % dv) {
              throw CertificationError("div_rules: degree " + std::to_string(d) +
                                       " in family '" + rule.family +
                                       "' is not divisible by " + std::to_string(dv));
            }
          }
        }
      }
    }
  } catch (const CapError&) {
    // Degree work overflowed the class cap; only certificates that pin an
    // exact support insist on it.
    if (!c.cd_support.empty()) throw;
  }

  FittingData fd = fitting_data(g);
  if (fd.height != c.fitting_height) {
    throw CertificationError("fitting_height: certificate says " +
                             std::to_string(c.fitting_height) +
                             ", enumeration finds " + std::to_string(fd.height));
  }
  if (c.sylow_tower && !fd.sylow_tower) {
    throw CertificationError("sylow_tower: claimed but enumeration finds none");
  }

  std::vector<Subgroup> mins = minimal_normal_subgroups(g, fd);
  if (c.min_normal_order == 0) {
    if (!mins.empty()) {
      throw CertificationError("min_normal: certificate claims none exists");
    }
  } else {
    if (c.min_normal_unique && mins.size() != 1) {
      throw CertificationError("min_normal: claimed unique, enumeration finds " +
                               std::to_string(mins.size()));
    }
    bool found = false;
    for (const Subgroup& s : mins) found = found || s.ids.size() == c.min_normal_order;
    if (!found) {
      throw CertificationError("min_normal: no minimal normal subgroup of order " +
                               std::to_string(c.min_normal_order));
    }
  }

  if (level.group.module) {
    const SpunModule& sm = *level.group.module;
    const std::optional<u64> dv = level.group.dim.value();
    if (!dv || sm.module.dim != *dv) {
      throw CertificationError("module_dim: embedded module dimension differs");
    }
    if (!fixed_space(sm.module, sm.normal_labels).empty()) {
      throw CertificationError("module: C_V(N) is nonzero");
    }
    if (!dual_fixed_check(sm.module, sm.group_labels)) {
      throw CertificationError("module: dual module has fixed points");
    }
  }
}

}  // namespace cdg
