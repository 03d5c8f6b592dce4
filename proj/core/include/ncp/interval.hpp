#pragma once

#include <iosfwd>

#include "ncp/coxeter.hpp"

namespace ncp {

struct Factorization {
  std::vector<Reflection> factors;
};

enum class ElemClass { Identity, HorizontalElliptic, VerticalElliptic, Hyperbolic };
const char* elem_class_str(ElemClass c);
ElemClass classify_element(const CoxeterSystem& sys, const Isometry& u);

enum class HurwitzDir { Left, Right };

// Left at i:  (.., r_i, r_{i+1}, ..) -> (.., r_{i+1}, r_{i+1} r_i r_{i+1}, ..)
// Right at i: (.., r_i, r_{i+1}, ..) -> (.., r_i r_{i+1} r_i, r_i, ..)
// i is 1-based; the product is unchanged.
Factorization hurwitz_move(const CoxeterSystem& sys, const Factorization& f, int i,
                           HurwitzDir dir);

struct PosetElement {
  Isometry iso;
  int length = 0;
  ElemClass cls = ElemClass::Identity;
  bool complete = false;  // [1,u] is fully inside the window
};

struct Cover {
  int lower = 0, upper = 0, label = 0;  // label indexes refl_table
};

struct IntervalPoset {
  const CoxeterSystem* sys = nullptr;
  WindowSpec window;
  std::vector<PosetElement> elems;  // ids in discovery (BFS) order; 0 = identity
  std::map<Isometry, int> index;
  std::vector<Reflection> refl_table;
  std::map<Reflection, int> refl_index;
  std::vector<Cover> covers;
  std::vector<std::vector<std::pair<int, int>>> up;    // id -> (upper id, label)
  std::vector<std::vector<std::pair<int, int>>> down;  // id -> (lower id, label)
  int one_id = 0, w_id = 0;

  int id_of(const Isometry& u) const;
  const std::vector<PosetElement>& elements() const { return elems; }
};

IntervalPoset build_poset(const CoxeterSystem& sys, IntervalOracle& oracle,
                          WindowSpec window);

// Order test in [1,w]^W. Elliptic pairs use the fixed-space rule; pairs with a
// hyperbolic top use a windowed Hurwitz prefix search in [1,v].
bool leq_W(const CoxeterSystem& sys, IntervalOracle& oracle, const IntervalPoset& poset,
           const Isometry& u, const Isometry& v);

// Hurwitz prefix search only (the slow path), exposed for cross-checks.
bool leq_W_prefix_search(const CoxeterSystem& sys, IntervalOracle& oracle,
                         const IntervalPoset& poset, const Isometry& u, const Isometry& v);

struct Complements {
  Isometry right;    // u^-1 w
  Isometry left;     // w u^-1
  Isometry phi;      // w^-1 u w
  Isometry phi_inv;  // w u w^-1
};
Complements complements_phi(const CoxeterSystem& sys, const Isometry& u);

struct LatticeDefect {
  int x = 0, y = 0;           // incomparable pair
  std::vector<int> minimal;   // >= 2 minimal common upper bounds
};
std::optional<LatticeDefect> lattice_defect_search(const IntervalPoset& poset,
                                                   IntervalOracle& oracle);

struct HorizontalPart {
  // Per component: elements of [1,w] intersected with the component subgroup.
  std::vector<std::vector<Isometry>> component_elements;
  std::vector<std::vector<Isometry>> component_maximal;
  std::vector<Isometry> elements;  // the full horizontal part (all products)
};
HorizontalPart horizontal_part(const CoxeterSystem& sys, IntervalOracle& oracle,
                               const HorizontalData& hd);

// Structured text dump: elements (id, matrix, translation, length, class) and
// covers (uid, vid, label root, label offset). Stable ids.
void poset_to_text(const IntervalPoset& poset, std::ostream& os);

// All maximal chains of [1, u] as label sequences, restricted to the window
// (vertical labels outside it are pruned). Set `cap` to guard explosion.
std::vector<std::vector<Reflection>> maximal_chains(const CoxeterSystem& sys,
                                                    IntervalOracle& oracle,
                                                    const Isometry& u, WindowSpec window,
                                                    size_t cap = 2000000);

}  // namespace ncp
