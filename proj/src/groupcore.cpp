#include "cdg/groupcore.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace cdg {

u64 default_enumeration_cap() {
  if (const char* env = std::getenv("CDG_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 5'000'000;
}

// ---------------------------------------------------------------------------
// ConcreteGroup
// ---------------------------------------------------------------------------

struct ConcreteGroup::Impl {
  std::shared_ptr<const GroupOracle> oracle;
  std::vector<Element> elements;
  std::unordered_map<Element, int, ElementHash> index;
  std::vector<int> gen_ids;
  std::vector<std::pair<int, int>> parents;
  std::vector<int> inv_cache;
};

ConcreteGroup::ConcreteGroup(std::shared_ptr<const GroupOracle> oracle,
                             std::vector<Element> generators, u64 cap) {
  if (!oracle) throw DescriptorError("ConcreteGroup: null oracle");
  if (cap == 0) cap = default_enumeration_cap();
  impl_ = std::make_shared<Impl>();
  impl_->oracle = std::move(oracle);
  const GroupOracle& orc = *impl_->oracle;

  Element idw = orc.identity();
  // Canonicalize generator words through the oracle.
  for (auto& gw : generators) gw = orc.mul(idw, gw);

  impl_->index.try_emplace(idw, 0);
  impl_->elements.push_back(std::move(idw));
  impl_->parents.push_back({-1, -1});
  for (std::size_t cur = 0; cur < impl_->elements.size(); ++cur) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      Element w = orc.mul(impl_->elements[cur], generators[gi]);
      auto [it, fresh] = impl_->index.try_emplace(std::move(w),
                                                  int(impl_->elements.size()));
      if (fresh) {
        if (impl_->elements.size() >= cap) {
          throw CapError("enumeration of " + orc.describe() + " exceeds cap " +
                         std::to_string(cap));
        }
        impl_->elements.push_back(it->first);
        impl_->parents.push_back({int(cur), int(gi)});
      }
    }
  }
  // gen_ids is parallel to the generator list given (so BFS parent edges and
  // per-generator data supplied by callers stay aligned).
  for (const auto& gw : generators) impl_->gen_ids.push_back(impl_->index.at(gw));
  impl_->inv_cache.assign(impl_->elements.size(), -1);
}

u64 ConcreteGroup::order() const { return impl_->elements.size(); }

const Element& ConcreteGroup::element(int id) const {
  if (id < 0 || std::size_t(id) >= impl_->elements.size()) {
    throw NoSuchElementError("element id out of range: " + std::to_string(id));
  }
  return impl_->elements[id];
}

int ConcreteGroup::id_of(const Element& e) const {
  auto it = impl_->index.find(e);
  if (it == impl_->index.end()) {
    throw NoSuchElementError("word is not an element of " +
                             impl_->oracle->describe());
  }
  return it->second;
}

bool ConcreteGroup::contains(const Element& e) const {
  return impl_->index.find(e) != impl_->index.end();
}

int ConcreteGroup::mul(int a, int b) const {
  return id_of(impl_->oracle->mul(element(a), element(b)));
}

int ConcreteGroup::inv(int a) const {
  element(a);  // bounds check
  int& cached = impl_->inv_cache[std::size_t(a)];
  if (cached != -1) return cached;
  int r = id_of(impl_->oracle->inv(impl_->elements[a]));
  cached = r;
  impl_->inv_cache[r] = a;
  return r;
}

const std::vector<int>& ConcreteGroup::generator_ids() const {
  return impl_->gen_ids;
}

std::pair<int, int> ConcreteGroup::parent_edge(int id) const {
  element(id);
  return impl_->parents[id];
}

const GroupOracle& ConcreteGroup::oracle() const { return *impl_->oracle; }

std::shared_ptr<const GroupOracle> ConcreteGroup::oracle_ptr() const {
  return impl_->oracle;
}

// ---------------------------------------------------------------------------
// Oracles
// ---------------------------------------------------------------------------

namespace {

class CyclicOracle final : public GroupOracle {
 public:
  explicit CyclicOracle(u64 m) : m_(m) {}
  Element identity() const override { return {0}; }
  Element mul(const Element& a, const Element& b) const override {
    return {u32((a.at(0) + u64(b.at(0))) % m_)};
  }
  Element inv(const Element& a) const override {
    return {u32((m_ - a.at(0) % m_) % m_)};
  }
  std::string describe() const override { return "Z_" + std::to_string(m_); }

 private:
  u64 m_;
};

class ProductOracle final : public GroupOracle {
 public:
  ProductOracle(std::shared_ptr<const GroupOracle> x,
                std::shared_ptr<const GroupOracle> y)
      : x_(std::move(x)), y_(std::move(y)), lx_(x_->identity().size()) {}
  Element identity() const override {
    return concat(x_->identity(), y_->identity());
  }
  Element mul(const Element& a, const Element& b) const override {
    return concat(x_->mul(left(a), left(b)), y_->mul(right(a), right(b)));
  }
  Element inv(const Element& a) const override {
    return concat(x_->inv(left(a)), y_->inv(right(a)));
  }
  std::string describe() const override {
    return x_->describe() + " x " + y_->describe();
  }

 private:
  Element left(const Element& a) const {
    return Element(a.begin(), a.begin() + lx_);
  }
  Element right(const Element& a) const {
    return Element(a.begin() + lx_, a.end());
  }
  static Element concat(Element a, const Element& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  std::shared_ptr<const GroupOracle> x_, y_;
  std::size_t lx_;
};

class EOracle final : public GroupOracle {
 public:
  explicit EOracle(const EGroup& e) : e_(e) {}
  Element identity() const override { return e_encode(e_, e_identity(e_)); }
  Element mul(const Element& a, const Element& b) const override {
    return e_encode(e_, e_mul(e_, e_decode(e_, a), e_decode(e_, b)));
  }
  Element inv(const Element& a) const override {
    return e_encode(e_, e_inv(e_, e_decode(e_, a)));
  }
  std::string describe() const override {
    return "E(F_" + std::to_string(e_.p) + "^" + std::to_string(e_.n) + ")";
  }

 private:
  EGroup e_;
};

class SemidirectOracle final : public GroupOracle {
 public:
  SemidirectOracle(const EGroup& e, ConcreteGroup a, std::vector<EAut> acts)
      : e_(e),
        a_(std::move(a)),
        acts_(std::move(acts)),
        alen_(a_.element(0).size()) {}
  Element identity() const override {
    return concat(a_.element(0), e_encode(e_, e_identity(e_)));
  }
  Element mul(const Element& x, const Element& y) const override {
    int a1 = a_.id_of(apart(x)), a2 = a_.id_of(apart(y));
    EElement e1 = e_decode(e_, epart(x)), e2 = e_decode(e_, epart(y));
    EElement em = e_mul(e_, eaut_apply(acts_[a2], e1), e2);
    return concat(a_.element(a_.mul(a1, a2)), e_encode(e_, em));
  }
  Element inv(const Element& x) const override {
    int ai = a_.inv(a_.id_of(apart(x)));
    EElement ei = eaut_apply(acts_[ai], e_inv(e_, e_decode(e_, epart(x))));
    return concat(a_.element(ai), e_encode(e_, ei));
  }
  std::string describe() const override {
    return "E(F_" + std::to_string(e_.p) + "^" + std::to_string(e_.n) +
           ") : (" + a_.oracle().describe() + ")";
  }

 private:
  Element apart(const Element& x) const {
    return Element(x.begin(), x.begin() + alen_);
  }
  Element epart(const Element& x) const {
    return Element(x.begin() + alen_, x.end());
  }
  static Element concat(Element a, const Element& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  EGroup e_;
  ConcreteGroup a_;
  std::vector<EAut> acts_;  // indexed by id in A
  std::size_t alen_;
};

class QuotientOracle final : public GroupOracle {
 public:
  QuotientOracle(ConcreteGroup parent, std::vector<int> coset_of,
                 std::vector<int> reps)
      : parent_(std::move(parent)),
        coset_of_(std::move(coset_of)),
        reps_(std::move(reps)) {}
  Element identity() const override { return parent_.element(0); }
  Element mul(const Element& a, const Element& b) const override {
    int m = parent_.mul(parent_.id_of(a), parent_.id_of(b));
    return parent_.element(reps_[coset_of_[m]]);
  }
  Element inv(const Element& a) const override {
    int i = parent_.inv(parent_.id_of(a));
    return parent_.element(reps_[coset_of_[i]]);
  }
  std::string describe() const override {
    return "(" + parent_.oracle().describe() + ") mod N[" +
           std::to_string(parent_.order() / reps_.size()) + "]";
  }

 private:
  ConcreteGroup parent_;
  std::vector<int> coset_of_;
  std::vector<int> reps_;
};

std::vector<char> id_mask(u64 n, const std::vector<int>& ids) {
  std::vector<char> m(n, 0);
  for (int i : ids) m[std::size_t(i)] = 1;
  return m;
}

int conj_id(const ConcreteGroup& g, int x, int by, int by_inv) {
  return g.mul(g.mul(by_inv, x), by);
}

int pow_id(const ConcreteGroup& g, int base, u64 e) {
  int acc = 0, cur = base;
  while (e) {
    if (e & 1) acc = g.mul(acc, cur);
    e >>= 1;
    if (e) cur = g.mul(cur, cur);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

ConcreteGroup make_cyclic_group(u64 m) {
  if (m == 0) throw DomainError("make_cyclic_group: order must be positive");
  auto oracle = std::make_shared<CyclicOracle>(m);
  std::vector<Element> gens;
  if (m > 1) gens.push_back({1});
  return ConcreteGroup(std::move(oracle), std::move(gens));
}

ConcreteGroup direct_product(const ConcreteGroup& x, const ConcreteGroup& y) {
  auto oracle = std::make_shared<ProductOracle>(x.oracle_ptr(), y.oracle_ptr());
  const Element idx = x.element(0), idy = y.element(0);
  std::vector<Element> gens;
  for (int gid : x.generator_ids()) {
    Element w = x.element(gid);
    w.insert(w.end(), idy.begin(), idy.end());
    gens.push_back(std::move(w));
  }
  for (int gid : y.generator_ids()) {
    Element w = idx;
    const Element& gy = y.element(gid);
    w.insert(w.end(), gy.begin(), gy.end());
    gens.push_back(std::move(w));
  }
  return ConcreteGroup(std::move(oracle), std::move(gens));
}

std::shared_ptr<const GroupOracle> e_oracle(const EGroup& e) {
  return std::make_shared<EOracle>(e);
}

ConcreteGroup make_extraspecial_group(const EGroup& e, u64 cap) {
  std::vector<Element> gens;
  for (const auto& x : e_generators(e)) gens.push_back(e_encode(e, x));
  return ConcreteGroup(e_oracle(e), std::move(gens), cap);
}

ConcreteGroup semidirect_product(const EGroup& e, const ConcreteGroup& a,
                                 const std::vector<EAut>& gen_actions,
                                 u64 cap) {
  const std::vector<int>& gids = a.generator_ids();
  if (gen_actions.size() != gids.size()) {
    throw DescriptorError("semidirect_product: one action per generator of A");
  }
  for (const auto& t : gen_actions) {
    if (t.a.p() != e.p || t.a.rows() != e.n) {
      throw DescriptorError("semidirect_product: action has wrong field or dim");
    }
    make_eaut(t.a, t.b, t.s);
  }

  // Extend generator actions to all of A along its BFS tree, then check the
  // extension against every Cayley edge; a mismatch means the generator
  // actions do not satisfy A's relations.
  std::vector<EAut> acts;
  acts.reserve(a.order());
  acts.push_back(eaut_identity(e));
  for (int id = 1; id < int(a.order()); ++id) {
    auto [par, gi] = a.parent_edge(id);
    acts.push_back(eaut_compose(acts[par], gen_actions[gi]));
  }
  for (int id = 0; id < int(a.order()); ++id) {
    for (std::size_t gi = 0; gi < gids.size(); ++gi) {
      int target = a.mul(id, gids[gi]);
      if (!eaut_equal(acts[target],
                      eaut_compose(acts[id], gen_actions[gi]))) {
        throw ConstructionError(
            "semidirect_product: generator actions are not a homomorphism");
      }
    }
  }

  Element e_id = e_encode(e, e_identity(e));
  std::vector<Element> gens;
  for (int gid : gids) {
    Element w = a.element(gid);
    w.insert(w.end(), e_id.begin(), e_id.end());
    gens.push_back(std::move(w));
  }
  for (const auto& x : e_generators(e)) {
    Element w = a.element(0);
    Element ew = e_encode(e, x);
    w.insert(w.end(), ew.begin(), ew.end());
    gens.push_back(std::move(w));
  }
  auto oracle = std::make_shared<SemidirectOracle>(e, a, std::move(acts));
  return ConcreteGroup(std::move(oracle), std::move(gens), cap);
}

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

Subgroup subgroup_closure(const ConcreteGroup& g, std::vector<int> seed_ids) {
  std::sort(seed_ids.begin(), seed_ids.end());
  seed_ids.erase(std::unique(seed_ids.begin(), seed_ids.end()), seed_ids.end());
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (int s : seed_ids) {
      int t = g.mul(members[i], s);
      if (!in[t]) {
        in[t] = 1;
        members.push_back(t);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Subgroup{std::move(members)};
}

Subgroup normal_closure(const ConcreteGroup& g, std::vector<int> seed_ids) {
  std::sort(seed_ids.begin(), seed_ids.end());
  seed_ids.erase(std::unique(seed_ids.begin(), seed_ids.end()), seed_ids.end());
  std::vector<int> work = std::move(seed_ids);
  std::vector<int> gen_inv;
  for (int gid : g.generator_ids()) gen_inv.push_back(g.inv(gid));
  while (true) {
    Subgroup s = subgroup_closure(g, work);
    std::vector<char> in = id_mask(g.order(), s.ids);
    bool grew = false;
    const std::size_t n_work = work.size();
    for (std::size_t i = 0; i < n_work; ++i) {
      const auto& gids = g.generator_ids();
      for (std::size_t j = 0; j < gids.size(); ++j) {
        int c = conj_id(g, work[i], gids[j], gen_inv[j]);
        if (!in[c]) {
          in[c] = 1;
          work.push_back(c);
          grew = true;
        }
      }
    }
    if (!grew) return s;
  }
}

bool is_normal(const ConcreteGroup& g, const Subgroup& s) {
  std::vector<char> in = id_mask(g.order(), s.ids);
  for (int gid : g.generator_ids()) {
    int gi = g.inv(gid);
    for (int x : s.ids) {
      if (!in[conj_id(g, x, gid, gi)]) return false;
    }
  }
  return true;
}

std::vector<int> subgroup_generators(const ConcreteGroup& g, const Subgroup& s) {
  std::vector<int> gens;
  Subgroup cl = subgroup_closure(g, {});
  std::vector<char> in = id_mask(g.order(), cl.ids);
  for (int id : s.ids) {
    if (in[id]) continue;
    gens.push_back(id);
    cl = subgroup_closure(g, gens);
    in = id_mask(g.order(), cl.ids);
    if (cl.ids.size() == s.ids.size()) break;
  }
  return gens;
}

u64 element_order(const ConcreteGroup& g, int id) {
  u64 n = 1;
  int t = id;
  while (t != 0) {
    t = g.mul(t, id);
    ++n;
  }
  return n;
}

u64 group_exponent(const ConcreteGroup& g) {
  ClassData cd = conjugacy_classes(g);
  u64 e = 1;
  for (int rep : cd.reps) {
    u64 o = element_order(g, rep);
    e = e / gcd_u64(e, o) * o;
  }
  return e;
}

Subgroup center(const ConcreteGroup& g) {
  std::vector<int> ids;
  for (int id = 0; id < int(g.order()); ++id) {
    bool central = true;
    for (int gid : g.generator_ids()) {
      if (g.mul(id, gid) != g.mul(gid, id)) {
        central = false;
        break;
      }
    }
    if (central) ids.push_back(id);
  }
  return Subgroup{std::move(ids)};
}

Subgroup derived_subgroup(const ConcreteGroup& g) {
  const auto& gids = g.generator_ids();
  std::vector<int> seeds;
  for (int a : gids) {
    for (int b : gids) {
      int c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      seeds.push_back(c);
    }
  }
  return normal_closure(g, std::move(seeds));
}

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

ClassData conjugacy_classes(const ConcreteGroup& g) {
  const u64 n = g.order();
  ClassData cd;
  cd.class_of.assign(n, -1);
  const auto& gids = g.generator_ids();
  std::vector<int> gen_inv;
  for (int gid : gids) gen_inv.push_back(g.inv(gid));

  std::vector<int> orbit;
  for (int id = 0; id < int(n); ++id) {
    if (cd.class_of[id] != -1) continue;
    const int k = int(cd.reps.size());
    cd.reps.push_back(id);
    orbit.assign(1, id);
    cd.class_of[id] = k;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (std::size_t j = 0; j < gids.size(); ++j) {
        int y = conj_id(g, orbit[i], gids[j], gen_inv[j]);
        if (cd.class_of[y] == -1) {
          cd.class_of[y] = k;
          orbit.push_back(y);
        }
      }
    }
    cd.sizes.push_back(orbit.size());
  }
  for (int rep : cd.reps) cd.inverse_of.push_back(cd.class_of[g.inv(rep)]);
  return cd;
}

// ---------------------------------------------------------------------------
// Sylow subgroups and Fitting structure
// ---------------------------------------------------------------------------

Subgroup sylow_subgroup(const ConcreteGroup& g, u64 p) {
  const u64 n = g.order();
  if (!is_prime(p)) throw DomainError("sylow_subgroup: p must be prime");
  u64 pa = 1, rest = n;
  while (rest % p == 0) {
    rest /= p;
    pa *= p;
  }
  if (pa == 1) return Subgroup{{0}};

  // Seed with the p-part of the first element of order divisible by p.
  int start = -1;
  for (int id = 1; id < int(n); ++id) {
    u64 o = element_order(g, id);
    if (o % p) continue;
    u64 m = o;
    while (m % p == 0) m /= p;
    start = pow_id(g, id, m);
    break;
  }
  if (start == -1) throw Error("sylow_subgroup: no p-element found");

  Subgroup sp = subgroup_closure(g, {start});
  while (u64(sp.ids.size()) < pa) {
    std::vector<int> pg = subgroup_generators(g, sp);
    std::vector<char> in = id_mask(n, sp.ids);
    int adjoin = -1;
    for (int y = 0; y < int(n) && adjoin == -1; ++y) {
      if (in[y]) continue;
      int yi = g.inv(y);
      bool normalizes = true;
      for (int w : pg) {
        if (!in[conj_id(g, w, y, yi)]) {
          normalizes = false;
          break;
        }
      }
      if (!normalizes) continue;
      u64 o = element_order(g, y);
      u64 m = o;
      while (m % p == 0) m /= p;
      if (m == o) continue;  // no p-part
      int yp = pow_id(g, y, m);
      if (!in[yp]) adjoin = yp;
    }
    if (adjoin == -1) throw Error("sylow_subgroup: normalizer ascent stalled");
    pg.push_back(adjoin);
    sp = subgroup_closure(g, pg);
    if (pa % u64(sp.ids.size())) {
      throw Error("sylow_subgroup: closure left the p-group range");
    }
  }
  return sp;
}

namespace {

Subgroup p_core(const ConcreteGroup& g, u64 p) {
  Subgroup k = sylow_subgroup(g, p);
  std::vector<int> gen_inv;
  for (int gid : g.generator_ids()) gen_inv.push_back(g.inv(gid));
  bool changed = true;
  while (changed) {
    changed = false;
    const auto& gids = g.generator_ids();
    for (std::size_t j = 0; j < gids.size(); ++j) {
      std::vector<int> conj;
      conj.reserve(k.ids.size());
      for (int x : k.ids) conj.push_back(conj_id(g, x, gids[j], gen_inv[j]));
      std::sort(conj.begin(), conj.end());
      std::vector<int> inter;
      std::set_intersection(k.ids.begin(), k.ids.end(), conj.begin(),
                            conj.end(), std::back_inserter(inter));
      if (inter.size() != k.ids.size()) {
        k.ids = std::move(inter);
        changed = true;
      }
    }
  }
  return k;
}

bool has_sylow_tower(const ConcreteGroup& g) {
  if (g.order() == 1) return true;
  for (const auto& [p, e] : factorize(g.order())) {
    Subgroup sp = sylow_subgroup(g, p);
    if (is_normal(g, sp)) {
      // Any normal Sylow works: a tower of G maps onto a tower of G/P.
      return has_sylow_tower(quotient(g, sp));
    }
  }
  return false;
}

// Cores and their joint closure.  Seeding the closure with core generators
// rather than every core element keeps it linear in |F(G)|.
std::pair<std::vector<std::pair<u64, Subgroup>>, Subgroup> fitting_cores(
    const ConcreteGroup& g) {
  std::vector<std::pair<u64, Subgroup>> cores;
  std::vector<int> seeds;
  for (const auto& [p, e] : factorize(g.order())) {
    Subgroup core = p_core(g, p);
    std::vector<int> cg = subgroup_generators(g, core);
    seeds.insert(seeds.end(), cg.begin(), cg.end());
    cores.push_back({p, std::move(core)});
  }
  Subgroup fitting = subgroup_closure(g, std::move(seeds));
  if (fitting.ids.size() == 1) {
    throw NonSolvableError("fitting_data: trivial Fitting subgroup");
  }
  return {std::move(cores), std::move(fitting)};
}

}  // namespace

FittingData fitting_data(const ConcreteGroup& g) {
  FittingData fd;
  const u64 n = g.order();
  if (n == 1) {
    fd.fitting = Subgroup{{0}};
    fd.height = 0;
    fd.sylow_tower = true;
    return fd;
  }
  auto [cores, fitting] = fitting_cores(g);
  fd.cores = std::move(cores);
  fd.fitting = std::move(fitting);
  if (fd.fitting.ids.size() == n) {
    fd.height = 1;
  } else {
    fd.height = 1 + fitting_data(quotient(g, fd.fitting)).height;
  }
  fd.sylow_tower = has_sylow_tower(g);
  return fd;
}

// ---------------------------------------------------------------------------
// Normal structure
// ---------------------------------------------------------------------------

namespace {

// In a solvable group every minimal normal subgroup lies in Z(F(G)).
std::vector<Subgroup> normal_closures_in_zf(const ConcreteGroup& g,
                                            const Subgroup& fitting) {
  std::vector<int> fgens = subgroup_generators(g, fitting);
  std::vector<Subgroup> cands;
  for (int x : fitting.ids) {
    bool central = true;
    for (int w : fgens) {
      if (g.mul(x, w) != g.mul(w, x)) {
        central = false;
        break;
      }
    }
    if (central && x != 0 && is_prime(element_order(g, x))) {
      cands.push_back(normal_closure(g, {x}));
    }
  }
  return cands;
}

std::vector<Subgroup> keep_minimal(std::vector<Subgroup> cands) {
  std::sort(cands.begin(), cands.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return a.ids.size() != b.ids.size() ? a.ids.size() < b.ids.size()
                                                  : a.ids < b.ids;
            });
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  std::vector<Subgroup> out;
  for (auto& c : cands) {
    bool minimal = true;
    for (const auto& smaller : out) {
      if (std::includes(c.ids.begin(), c.ids.end(), smaller.ids.begin(),
                        smaller.ids.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Subgroup> minimal_normal_subgroups(const ConcreteGroup& g) {
  const u64 n = g.order();
  if (n == 1) return {};

  if (n <= 100000) {
    // Every minimal normal subgroup is the normal closure of any of its
    // prime-order elements, hence of a class representative.
    std::vector<Subgroup> cands;
    ClassData cd = conjugacy_classes(g);
    for (std::size_t k = 1; k < cd.reps.size(); ++k) {
      if (is_prime(element_order(g, cd.reps[k]))) {
        cands.push_back(normal_closure(g, {cd.reps[k]}));
      }
    }
    return keep_minimal(std::move(cands));
  }
  return keep_minimal(normal_closures_in_zf(g, fitting_cores(g).second));
}

std::vector<Subgroup> minimal_normal_subgroups(const ConcreteGroup& g,
                                               const FittingData& fd) {
  if (g.order() == 1) return {};
  return keep_minimal(normal_closures_in_zf(g, fd.fitting));
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

ConcreteGroup quotient(const ConcreteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw NormalityError("quotient: subgroup is not normal");
  const u64 order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int id = 0; id < int(order); ++id) {
    if (coset_of[id] != -1) continue;
    int c = int(reps.size());
    reps.push_back(id);
    for (int s : n.ids) coset_of[g.mul(s, id)] = c;
  }
  std::vector<Element> gens;
  for (int gid : g.generator_ids()) {
    gens.push_back(g.element(reps[coset_of[gid]]));
  }
  auto oracle =
      std::make_shared<QuotientOracle>(g, std::move(coset_of), std::move(reps));
  return ConcreteGroup(std::move(oracle), std::move(gens));
}

}  // namespace cdg
