#pragma once

#include "ncp/shelling.hpp"

namespace ncp {

// A cell [x_1 | x_2 | ... | x_d] of the interval complex: nonidentity parts
// with product in [1,w] and additive lengths. The empty simplex is the unique
// vertex.
struct Simplex {
  std::vector<Isometry> parts;

  int dim() const { return (int)parts.size(); }
};

bool operator==(const Simplex& a, const Simplex& b);
bool operator<(const Simplex& a, const Simplex& b);

Isometry simplex_product(const CoxeterSystem& sys, const Simplex& s);
bool simplex_valid(const CoxeterSystem& sys, IntervalOracle& oracle, const Simplex& s);

enum class SimplexClass { TypeI, TypeII };  // (i): all elliptic, one vertical

struct FiberNavigation {
  Isometry pi;
  Simplex lambda, rho, kappa;
  SimplexClass cls;
};
FiberNavigation fiber_navigation(const CoxeterSystem& sys, IntervalOracle& oracle,
                                 const Simplex& s);
Simplex lambda_step(const CoxeterSystem& sys, const Simplex& s);
Simplex rho_step(const CoxeterSystem& sys, const Simplex& s);

using FVector = std::vector<long>;

struct ComplexSlice {
  std::vector<Simplex> cells;  // sorted
  FVector f_vector() const;
  bool contains(const Simplex& s) const;
};

// X'_W: simplices whose product is elliptic and fixes a vertex of C0.
ComplexSlice build_XWprime(const CoxeterSystem& sys, IntervalOracle& oracle);
FVector salvetti_fvector(const CoxeterSystem& sys);

struct FiberComponent {
  int d = 0;  // the fiber level eta = d
  bool finite = false;
  // finite: the full cyclic list; infinite: the K' segment, left to right,
  // with one guard simplex on each side.
  std::vector<Simplex> cells;
  int kprime_lo = 0, kprime_hi = 0;  // segment [lo, hi] within `cells`
};

std::vector<FiberComponent> fiber_components(const CoxeterSystem& sys, IntervalOracle& oracle,
                                             const ComplexSlice& xprime);

struct NiceSubcomplex {
  ComplexSlice kprime;                  // all cells of K'_W
  std::vector<FiberComponent> components;
  ComplexSlice kd;                      // union of the finite components (K_D)
};

NiceSubcomplex canonical_nice_subcomplex(const CoxeterSystem& sys, IntervalOracle& oracle,
                                         const ComplexSlice& xprime);

// Depth of a product-w simplex (Definition of the matching); nullopt encodes
// an infinite depth.
std::optional<int> depth(const CoxeterSystem& sys, IntervalOracle& oracle,
                         const AxialOrdering& ord, const Simplex& s);

// The matching partner of a cell of K' \ X'.
Simplex matching_mu(const CoxeterSystem& sys, IntervalOracle& oracle,
                    const AxialOrdering& ord, const ComplexSlice& xprime, const Simplex& s);

// Label word of w attached to a cell, and the total order on such words:
// larger max reflection first, then later position, then lex.
std::vector<Reflection> xi(const CoxeterSystem& sys, IntervalOracle& oracle,
                           const AxialOrdering& ord, const Simplex& s);
int compare_xi(const AxialOrdering& ord, const std::vector<Reflection>& a,
               const std::vector<Reflection>& b);  // -1 / 0 / 1

struct MorseReport {
  std::vector<std::pair<Simplex, Simplex>> pairs;  // (mu(s), s) with mu(s) < s
  FVector critical_fvector;
  bool involution_ok = false;
  bool depth_preserved_ok = false;
  bool critical_is_xprime = false;
  bool acyclic_graph_ok = false;
  bool xi_certificate_ok = false;
  bool ok() const {
    return involution_ok && depth_preserved_ok && critical_is_xprime &&
           acyclic_graph_ok && xi_certificate_ok;
  }
};

MorseReport build_and_verify_matching(const CoxeterSystem& sys, IntervalOracle& oracle,
                                      const AxialOrdering& ord, const ComplexSlice& xprime,
                                      const NiceSubcomplex& nice);

// Fig.-style rendering: parts printed as increasing factorization words.
std::string simplex_str(const CoxeterSystem& sys, IntervalOracle& oracle,
                        const AxialOrdering& ord, const Simplex& s,
                        const std::map<Reflection, std::string>* names = nullptr);

// Paper names for the rank-2 cases: a_i / c_i verticals by axis parity, b, b'
// horizontals (the wall of C0 first). Empty for other groups.
std::map<Reflection, std::string> reflection_names_rank2(const CoxeterSystem& sys);

std::vector<Simplex> simplex_faces(const CoxeterSystem& sys, const Simplex& s);

}  // namespace ncp
