#pragma once

#include <map>
#include <optional>
#include <string>

#include "ncp/euclid.hpp"

namespace ncp {

enum class Family { Atilde, Btilde, Ctilde, Dtilde, E6t, E7t, E8t, F4t, G2t };

// Grammar: A~<n>[p,q] | B~<n> | C~<n> | D~<n> | E~6 | E~7 | E~8 | F~4 | G~2
struct GroupSpec {
  Family family;
  int n = 0;
  int p = 0, q = 0;  // Atilde only, p >= q >= 1, p + q = n + 1
};

std::optional<GroupSpec> parse_group_spec(std::string_view s);
std::string group_spec_str(const GroupSpec& g);

// One hyperplane direction of the reflection arrangement: the hyperplanes in
// direction `root` are { <x, root> = k * spacing } for k in Z.
struct RootDirection {
  std::vector<long> root;  // primitive, canonical sign
  Rat spacing;
};

struct RootDatum {
  std::vector<RootDirection> dirs;
  std::map<std::vector<long>, int> index;

  int dir_of(const std::vector<long>& root) const;
  bool hyperplane_in_arrangement(const Reflection& r) const;
};

struct Chamber {
  std::vector<Reflection> walls;
  Vec sample;  // interior point with rational coordinates
};

// The points p_i = base_point + (i * spacing) * mu, anchored so that p_0 is
// below the base chamber C0 and p_1 above it. Theta coordinates are in units
// of mu: theta(x) = <x - base_point, mu> / <mu, mu>.
struct AxialFrame {
  Vec base_point;
  Vec mu;
  Rat spacing;

  Rat theta(const Vec& x) const;
  Vec point_at(const Rat& theta_in_mu_units) const;
  Vec axis_point(int i) const { return point_at(Rat(i) * spacing); }
};

enum class ReflClass { Horizontal, Vertical };

struct HorizontalComponent {
  std::vector<int> dir_ids;             // directions in this component
  int rank = 0;                         // m: component has type A_m
  std::vector<Reflection> reflections;  // the two interval reflections per direction
  Isometry h;                           // chosen horizontal factor, a Coxeter element
  std::vector<Isometry> maximal;        // phi^p(h) for p = 0..m
  Chamber prism;                        // chamber of the subarrangement containing the axis
};

struct CoxeterSystem {
  GroupSpec spec;
  Ambient amb;
  RootDatum roots;
  Isometry w, w_inv;
  AxialFrame axis;
  Chamber c0;
  std::vector<Reflection> simples;  // three-block wall order of c0; product = w
  std::vector<Vec> c0_vertices;     // vertex i is opposite wall i of c0
  std::vector<Isometry> wb;         // parabolic Coxeter element fixing c0_vertices[i]

  int rank() const { return spec.n; }
  int coxlen() const { return spec.n + 1; }  // reflection length of w
  // axis points per application of w: theta shift of w is 1 in mu units
  int points_per_period() const;
};

CoxeterSystem build(const GroupSpec& spec);

ReflClass classify_reflection(const CoxeterSystem& sys, const Reflection& r);

// Axis-point index of a vertical reflection's crossing; throws for horizontal.
int axis_index(const CoxeterSystem& sys, const Reflection& r);

struct IntervalReflections {
  std::map<int, std::vector<Reflection>> verticals_by_axis_point;
  std::vector<Reflection> horizontals;
};

struct WindowSpec {
  int lo = 0, hi = 0;  // inclusive axis-point indices
  bool contains(int i) const { return lo <= i && i <= hi; }
  int span() const { return hi - lo; }
};

IntervalReflections interval_reflections(const CoxeterSystem& sys, WindowSpec window);

// All reflections of W fixing the point; they pairwise commute on the axis.
std::vector<Reflection> reflections_fixing_point(const CoxeterSystem& sys, const Vec& a);

struct AxialCells {
  std::vector<Vec> points;       // p_lo .. p_hi
  std::vector<Chamber> chambers;  // cell (i, i+1) for i = lo..hi-1, along the axis
  std::vector<Vec> vertices;      // distinct axial vertices of those chambers
  std::map<Vec, int> orbit_id;    // vertex -> w-orbit index
};

AxialCells axial_cells(const CoxeterSystem& sys, WindowSpec window);

// Chamber of the full arrangement containing the given generic point.
Chamber chamber_at(const CoxeterSystem& sys, const Vec& a);
std::vector<Vec> chamber_vertices(const CoxeterSystem& sys, const Chamber& c);

// Walls of `c` in the three-block order (verticals crossing the oriented line
// through `a` above it, ascending; horizontals in the appendix order; then
// verticals crossing below, ascending). The product of the returned
// reflections equals w for every axial chamber, and more generally whenever
// the hypotheses of the appendix product lemmas hold at `a`.
std::vector<Reflection> three_block_walls(const CoxeterSystem& sys, const Chamber& c,
                                          const Vec& a);

// Memoizing scratch structure; CoxeterSystem itself stays immutable.
class IntervalOracle {
 public:
  explicit IntervalOracle(const CoxeterSystem& sys, int scan_radius = 64);

  const CoxeterSystem& system() const { return *sys_; }
  bool in_interval(const Isometry& u);           // u in [1,w]^W
  const Isometry& w_power(int j);
  Isometry phi(const Isometry& u);               // w^-1 u w
  Isometry phi_inv(const Isometry& u);
  // Axial vertex b with u <= w_b, for elliptic u in [1,w].
  std::optional<Vec> witness_vertex(const Isometry& u);
  Isometry w_b(const Vec& axial_vertex);
  bool is_axial_vertex(const Vec& p);
  int scan_radius() const { return scan_; }

 private:
  const CoxeterSystem* sys_;
  int scan_;
  std::map<Isometry, char> memo_;
  std::vector<Isometry> pow_pos_, pow_neg_;
};

// Reflections r with r <= u in [1,w]; exact for elliptic u. For hyperbolic u
// the set is infinite and the vertical part is restricted to the window.
std::vector<Reflection> reflections_below(const CoxeterSystem& sys, IntervalOracle& oracle,
                                          const Isometry& u,
                                          std::optional<WindowSpec> window = std::nullopt);

// Some minimal-length reflection factorization of u in [1,w].
std::vector<Reflection> any_reflection_factorization(const CoxeterSystem& sys,
                                                     IntervalOracle& oracle,
                                                     const Isometry& u);

std::optional<Isometry> parabolic_coxeter_element(const CoxeterSystem& sys,
                                                  IntervalOracle& oracle,
                                                  const Vec& axial_vertex);

struct HorizontalData {
  std::vector<HorizontalComponent> components;
  Isometry t;                  // translation with w = t h_1 ... h_k
  std::vector<Isometry> h;     // per component
};

HorizontalData horizontal_components(const CoxeterSystem& sys, IntervalOracle& oracle);

struct HyperbolicDecomposition {
  Isometry uprime;  // Coxeter element of an irreducible affine subgroup
  Isometry h;       // horizontal elliptic factor
};

HyperbolicDecomposition hyperbolic_horizontal_decomposition(const CoxeterSystem& sys,
                                                            IntervalOracle& oracle,
                                                            const Isometry& u);

// Root directions of the subgroup generated by the reflections below u,
// split into connected (non-orthogonal) components.
std::vector<std::vector<int>> subgroup_direction_components(const CoxeterSystem& sys,
                                                            const std::vector<Reflection>& gens);

}  // namespace ncp
