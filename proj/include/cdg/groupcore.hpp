#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cdg/extraspecial.hpp"
#include "cdg/fflinalg.hpp"

namespace cdg {

// ---------------------------------------------------------------------------
// Enumerated finite groups.  An element is a word of residues whose meaning
// belongs to the oracle; a group is the BFS closure of its generators, with
// ids in discovery order and the identity at id 0.
// ---------------------------------------------------------------------------

using Element = std::vector<u32>;

struct ElementHash {
  std::size_t operator()(const Element& e) const {
    std::size_t h = 1469598103934665603ull;
    for (u32 x : e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class GroupOracle {
 public:
  virtual ~GroupOracle() = default;
  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  virtual std::string describe() const = 0;
};

// Enumeration size limit: the CDG_CAP environment variable, or 5e6.
u64 default_enumeration_cap();

// Value type with shared immutable state; copies are cheap and alias.
class ConcreteGroup {
 public:
  // Enumerates the closure of the generators; CapError beyond the cap
  // (cap of 0 means default_enumeration_cap()).
  ConcreteGroup(std::shared_ptr<const GroupOracle> oracle,
                std::vector<Element> generators, u64 cap = 0);

  u64 order() const;
  const Element& element(int id) const;
  // NoSuchElementError when the word is not in the group.
  int id_of(const Element& e) const;
  bool contains(const Element& e) const;

  int identity_id() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const;

  // Ids of the generators, in construction order (duplicates and identity
  // generators removed).
  const std::vector<int>& generator_ids() const;

  // BFS tree edge that discovered the element: (parent id, generator index).
  // The identity has parent (-1, -1).
  std::pair<int, int> parent_edge(int id) const;

  const GroupOracle& oracle() const;
  std::shared_ptr<const GroupOracle> oracle_ptr() const;

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

ConcreteGroup make_cyclic_group(u64 m);

ConcreteGroup direct_product(const ConcreteGroup& x, const ConcreteGroup& y);

// Oracle over the flat words of e_encode.
std::shared_ptr<const GroupOracle> e_oracle(const EGroup& e);

ConcreteGroup make_extraspecial_group(const EGroup& e, u64 cap = 0);

// E(V) extended by A.  gen_actions[i] tells how the i-th generator of A acts
// on E; the per-element action is the unique extension along A's BFS tree,
// and every Cayley edge of A is checked against it (ConstructionError when
// the assignment does not define a homomorphism A -> Aut(E)).  Words are
// [a-word | e-word]; conjugating (1, e) by (a, 1) applies a's action to e.
ConcreteGroup semidirect_product(const EGroup& e, const ConcreteGroup& a,
                                 const std::vector<EAut>& gen_actions,
                                 u64 cap = 0);

// ---------------------------------------------------------------------------
// Subgroups
// ---------------------------------------------------------------------------

// A subgroup as a sorted list of element ids.
struct Subgroup {
  std::vector<int> ids;
  bool operator==(const Subgroup&) const = default;
};

Subgroup subgroup_closure(const ConcreteGroup& g, std::vector<int> seed_ids);

// Smallest normal subgroup containing the seeds.
Subgroup normal_closure(const ConcreteGroup& g, std::vector<int> seed_ids);

bool is_normal(const ConcreteGroup& g, const Subgroup& s);

// A small generating set, chosen greedily by ascending id.
std::vector<int> subgroup_generators(const ConcreteGroup& g, const Subgroup& s);

u64 element_order(const ConcreteGroup& g, int id);

// Least common multiple of element orders.
u64 group_exponent(const ConcreteGroup& g);

Subgroup center(const ConcreteGroup& g);
Subgroup derived_subgroup(const ConcreteGroup& g);

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

struct ClassData {
  std::vector<int> reps;        // minimal id in each class; class 0 = identity
  std::vector<u64> sizes;       // orbit sizes
  std::vector<int> class_of;    // element id -> class index
  std::vector<int> inverse_of;  // class index -> class of the inverses
};

ClassData conjugacy_classes(const ConcreteGroup& g);

// ---------------------------------------------------------------------------
// Normal structure
// ---------------------------------------------------------------------------

// The minimal nontrivial normal subgroups.  For large solvable groups the
// search is restricted to Z(F(G)), which contains every minimal normal
// subgroup of a solvable group.
std::vector<Subgroup> minimal_normal_subgroups(const ConcreteGroup& g);

struct FittingData {
  std::vector<std::pair<u64, Subgroup>> cores;  // (p, O_p(G)) per prime
  Subgroup fitting;                             // F(G), product of the cores
  u32 height = 0;                               // Fitting height
  bool sylow_tower = false;                     // has a normal Sylow tower
};

// NonSolvableError when the Fitting quotient chain stalls.
FittingData fitting_data(const ConcreteGroup& g);

// Minimal normal subgroups from Fitting data the caller already holds,
// skipping its recomputation.
std::vector<Subgroup> minimal_normal_subgroups(const ConcreteGroup& g,
                                               const FittingData& fd);

// Sylow p-subgroup, found by normalizer ascent.
Subgroup sylow_subgroup(const ConcreteGroup& g, u64 p);

// G/N as its own enumerated group; words are the words of minimal-id coset
// representatives.  NormalityError when N is not normal.
ConcreteGroup quotient(const ConcreteGroup& g, const Subgroup& n);

}  // namespace cdg
