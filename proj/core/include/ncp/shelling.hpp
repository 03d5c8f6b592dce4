#pragma once

#include "ncp/interval.hpp"

namespace ncp {

enum class TiePolicy { Lex, Reverse };

// The axial ordering of R_0: positive verticals by increasing axis height,
// then horizontal reflections ordered per component, then negative verticals
// by increasing height. Ties at one axis point are resolved at the
// fundamental points and propagated by phi, making the order phi-compatible.
class AxialOrdering {
 public:
  AxialOrdering(const CoxeterSystem& sys, const HorizontalData& hd, TiePolicy policy);

  // Total order on the interval reflections; throws for reflections not in R_0.
  bool less(const Reflection& a, const Reflection& b) const;
  int compare(const Reflection& a, const Reflection& b) const;  // -1, 0, 1
  TiePolicy policy() const { return policy_; }

  // (block, major, minor) with block 0 = positive vertical, 1 = horizontal,
  // 2 = negative vertical; lexicographic comparison.
  std::array<long, 3> key(const Reflection& r) const;

 private:
  const CoxeterSystem* sys_;
  TiePolicy policy_;
  std::map<Reflection, long> horizontal_rank_;
  mutable std::map<Reflection, std::array<long, 3>> cache_;
};

// Reflection ordering of a finite reflection group from a generic oriented
// line: reflections crossing above the basepoint first (nearest first), then
// those crossing below (nearest first). The direction is perturbed
// symbolically (epsilon powers) when not generic.
std::vector<Reflection> line_reflection_ordering(const CoxeterSystem& sys,
                                                 const std::vector<Reflection>& refls,
                                                 const Vec& basepoint, const Vec& direction);

// The unique strictly increasing minimal factorization of u.
Factorization increasing_factorization(const CoxeterSystem& sys, IntervalOracle& oracle,
                                       const AxialOrdering& ord, const Isometry& u,
                                       std::optional<WindowSpec> window = std::nullopt);

struct ELReport {
  long chain_count = 0;
  long increasing_count = 0;
  bool lex_first = false;   // the lex-smallest chain is the increasing one
  bool colex_last = false;  // the colex-largest chain is the increasing one
  bool windowed = false;    // chains were enumerated inside a window only
};

// Checks the EL property on the interval [u, v] via the label-preserving shift
// to [1, u^-1 v].
ELReport verify_el_interval(const CoxeterSystem& sys, IntervalOracle& oracle,
                            const AxialOrdering& ord, const Isometry& u, const Isometry& v,
                            std::optional<WindowSpec> window = std::nullopt);

// Rank-2 betweenness test of a reflection-ordering candidate on a finite
// subsystem; returns a violating triple if any.
bool is_reflection_ordering(const CoxeterSystem& sys, const std::vector<Reflection>& ordered);

}  // namespace ncp
