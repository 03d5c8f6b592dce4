#pragma once

#include "ncp/linalg.hpp"

namespace ncp {

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPResult {
  LPStatus status;
  Rat value;  // meaningful when Optimal
  Vec x;
};

// maximize c.x subject to A x <= b, x free. Exact rational simplex with
// Bland's rule.
LPResult lp_maximize(const Mat& a, const Vec& b, const Vec& c);

// A closed halfspace { x : <x, normal> <= rhs }.
struct HalfSpace {
  Vec normal;
  Rat rhs;
};

// Indices of the halfspaces whose hyperplanes are facets of the polyhedron
// cut out by all of them. `interior` must satisfy every constraint strictly.
std::vector<int> facet_indices(const std::vector<HalfSpace>& hs, const Vec& interior);

}  // namespace ncp
