#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "ncp/linalg.hpp"

namespace ncp {

// Ambient Euclidean space E = R^dim, optionally modulo a subspace that every
// group element fixes pointwise (the all-ones line for type A~ and G~2; a
// rational 2-plane for the E~6 realization in R^8). Points and translation
// parts are kept canonical: orthogonal to every quotient direction.
struct Ambient {
  int dim = 0;
  std::vector<Vec> quotient;  // pairwise orthogonal, possibly empty

  int effective_dim() const { return dim - (int)quotient.size(); }
  Vec canonicalize(const Vec& v) const;
  bool is_canonical(const Vec& v) const;
  bool same(const Ambient& o) const;
};

struct Isometry {
  Mat linear;  // orthogonal, exactly
  Vec trans;   // canonical representative
};

bool operator==(const Isometry& a, const Isometry& b);
bool operator<(const Isometry& a, const Isometry& b);

Isometry isometry_identity(const Ambient& amb);
bool is_identity(const Isometry& u);

// compose(u, v) = u after v, so products u1 u2 ... uk act by uk first.
Isometry compose(const Ambient& amb, const Isometry& u, const Isometry& v);
Isometry invert(const Ambient& amb, const Isometry& u);
Vec apply(const Ambient& amb, const Isometry& u, const Vec& p);
Isometry conjugate(const Ambient& amb, const Isometry& g, const Isometry& u);  // g u g^-1

// Throws std::invalid_argument on a non-orthogonal linear part, a linear part
// moving a quotient direction, or a non-canonical translation.
void validate_isometry(const Ambient& amb, const Isometry& u);

struct AffineSubspace {
  bool empty = false;
  Vec base;                // canonical point
  std::vector<Vec> dirs;   // independent directions, orthogonal to quotient

  int dim() const { return empty ? -1 : (int)dirs.size(); }
};

AffineSubspace subspace_whole(const Ambient& amb);
AffineSubspace subspace_empty();
AffineSubspace subspace_point(const Ambient& amb, const Vec& p);
bool subspace_contains_point(const AffineSubspace& s, const Vec& p);
bool subspace_leq(const AffineSubspace& a, const AffineSubspace& b);  // a included in b
bool subspace_eq(const AffineSubspace& a, const AffineSubspace& b);

struct MovMinFix {
  AffineSubspace mov;  // affine subspace of V
  Vec mu;              // unique shortest vector of mov
  AffineSubspace min;  // subset of E
  AffineSubspace fix;  // = min when elliptic, empty otherwise
};

MovMinFix mov_min_fix(const Ambient& amb, const Isometry& u);
bool is_elliptic(const Ambient& amb, const Isometry& u);
int reflection_length(const Ambient& amb, const Isometry& u);

// A reflection hyperplane { x : <x, root> = offset }, root a primitive integer
// vector with its first nonzero entry positive.
struct Reflection {
  std::vector<long> root;
  Rat offset;
};

bool operator==(const Reflection& a, const Reflection& b);
bool operator<(const Reflection& a, const Reflection& b);

Reflection make_reflection(std::vector<long> root, Rat offset);
Reflection make_reflection_from_normal(const Vec& normal, Rat offset);
Vec reflection_root_vec(const Reflection& r);
Isometry reflection_isometry(const Ambient& amb, const Reflection& r);
std::optional<Reflection> reflection_from_isometry(const Ambient& amb, const Isometry& u);
std::string reflection_str(const Reflection& r);

// Order in L = Isom(E): length additivity l(u) + l(u^-1 v) = l(v).
bool leq_L(const Ambient& amb, const Isometry& u, const Isometry& v);
// Same order through the invariant map into the global poset of fixed/move
// spaces; the two implementations agree everywhere.
bool leq_L_invariant(const Ambient& amb, const Isometry& u, const Isometry& v);

std::string isometry_str(const Ambient& amb, const Isometry& u);

}  // namespace ncp
