#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "internal.hpp"
#include "ncp/lp.hpp"

namespace ncp {

namespace {

Rat mu_pairing(const CoxeterSystem& sys, const Reflection& r) {
  return dot(reflection_root_vec(r), sys.axis.mu);
}

struct DirCrossing {
  // Crossings of hyperplanes in one vertical direction with an oriented line:
  // theta in phase + step * Z.
  Rat step, phase;
};

// Chamber of the arrangement (amb, roots) containing the generic point a.
Chamber chamber_at_impl(const Ambient& amb, const RootDatum& roots, const Vec& a) {
  std::vector<HalfSpace> hs;
  std::vector<Reflection> hyper;
  for (const RootDirection& d : roots.dirs) {
    Vec root = reflection_root_vec(Reflection{d.root, Rat(0)});
    Rat c = dot(a, root);
    Rat k0 = Rat(rat_floor_div(c, d.spacing)) * d.spacing;
    if (c == k0) throw std::invalid_argument("point lies on a hyperplane");
    hs.push_back({root, k0 + d.spacing});
    hyper.push_back(make_reflection(d.root, k0 + d.spacing));
    Vec neg = vec_scale(Rat(-1), root);
    hs.push_back({neg, -k0});
    hyper.push_back(make_reflection(d.root, k0));
  }
  Chamber c;
  c.sample = a;
  for (int i : facet_indices(hs, a)) c.walls.push_back(hyper[i]);
  std::sort(c.walls.begin(), c.walls.end());
  return c;
}

int reflection_product_order(const Ambient& amb, const Isometry& a, const Isometry& b) {
  Isometry p = compose(amb, a, b);
  Isometry acc = p;
  for (int k = 1; k <= 60; ++k) {
    if (is_identity(acc)) return k;
    acc = compose(amb, acc, p);
  }
  throw std::logic_error("reflection product order not found");
}

// Verify the Coxeter graph of an alcove against the expected affine diagram,
// by degree sequence and edge-label multiset.
void check_alcove_graph(const GroupSpec& g, const std::vector<std::vector<int>>& m) {
  int k = (int)m.size();
  std::vector<int> deg(k, 0);
  std::multiset<int> labels;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (m[i][j] >= 3) {
        ++deg[i];
        ++deg[j];
        labels.insert(m[i][j]);
      }
  std::multiset<int> degs(deg.begin(), deg.end());
  std::multiset<int> want_deg, want_lab;
  switch (g.family) {
    case Family::G2t: want_deg = {1, 1, 2}; want_lab = {6, 3}; break;
    case Family::F4t: want_deg = {1, 2, 2, 2, 1}; want_lab = {3, 4, 3, 3}; break;
    case Family::E6t: want_deg = {1, 1, 1, 2, 2, 2, 3}; want_lab = {3, 3, 3, 3, 3, 3}; break;
    case Family::E7t:
      want_deg = {1, 1, 1, 2, 2, 2, 2, 3};
      want_lab = {3, 3, 3, 3, 3, 3, 3};
      break;
    case Family::E8t:
      want_deg = {1, 1, 1, 2, 2, 2, 2, 2, 3};
      want_lab = {3, 3, 3, 3, 3, 3, 3, 3};
      break;
    default: return;
  }
  if (degs != want_deg || labels != want_lab)
    throw std::logic_error("alcove Coxeter graph mismatch for " + group_spec_str(g));
}

// Bipartite Coxeter element from a 2-coloring of the alcove graph.
Isometry bipartite_coxeter_element(const GroupSpec& g, const Ambient& amb,
                                   const Chamber& alcove) {
  int k = (int)alcove.walls.size();
  std::vector<Isometry> refl;
  for (const Reflection& r : alcove.walls) refl.push_back(reflection_isometry(amb, r));
  std::vector<std::vector<int>> m(k, std::vector<int>(k, 2));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      m[i][j] = m[j][i] = reflection_product_order(amb, refl[i], refl[j]);
  check_alcove_graph(g, m);
  // BFS 2-coloring over edges with m >= 3 (the graph is a tree).
  std::vector<int> color(k, -1);
  std::vector<int> queue = {0};
  color[0] = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int j = 0; j < k; ++j) {
      if (j == v || m[v][j] < 3) continue;
      if (color[j] < 0) {
        color[j] = 1 - color[v];
        queue.push_back(j);
      } else if (color[j] == color[v]) {
        throw std::logic_error("alcove graph is not bipartite");
      }
    }
  }
  Isometry w = isometry_identity(amb);
  for (int c : {0, 1})
    for (int i = 0; i < k; ++i)
      if (color[i] == c) w = compose(amb, w, refl[i]);
  return w;
}

struct AxisGrid {
  Vec p0;
  Rat spacing;
};

AxisGrid anchor_axis(const GroupSpec& g, const Ambient& amb, const RootDatum& roots,
                     const Vec& base, const Vec& mu) {
  // Crossing parameters of vertical hyperplanes with base + theta*mu
  // (theta in units of mu).
  Rat mumu = dot(mu, mu);
  std::vector<DirCrossing> crossings;
  for (const RootDirection& d : roots.dirs) {
    Vec root = reflection_root_vec(Reflection{d.root, Rat(0)});
    Rat slope = dot(mu, root);
    if (slope == 0) continue;
    Rat step = d.spacing / slope;
    if (step < 0) step = -step;
    Rat phase = -dot(base, root) / slope;
    phase -= Rat(rat_floor_div(phase, step)) * step;
    crossings.push_back({step, phase});
  }
  if (crossings.empty()) throw std::logic_error("no vertical directions");
  // Collect all crossings in theta [0, 3) and check they form one grid.
  std::set<Rat> pts;
  for (const DirCrossing& c : crossings) {
    for (Rat t = c.phase; t < 3; t += c.step) pts.insert(t);
  }
  auto it = pts.begin();
  Rat first = *it;
  Rat expected = (g.family == Family::Atilde) ? Rat(std::gcd(g.p, g.q)) / Rat(g.p + g.q)
                                              : rat(1, 2);
  Rat prev = first;
  for (++it; it != pts.end(); ++it) {
    if (*it - prev != expected)
      throw std::logic_error("axis crossings are not equally spaced as expected");
    prev = *it;
  }
  if (first >= expected) throw std::logic_error("axis grid anchor out of range");
  AxisGrid grid;
  grid.spacing = expected;
  grid.p0 = vec_add(base, vec_scale(first, mu));
  return grid;
}

}  // namespace

Rat AxialFrame::theta(const Vec& x) const {
  return dot(vec_sub(x, base_point), mu) / dot(mu, mu);
}

Vec AxialFrame::point_at(const Rat& t) const {
  return vec_add(base_point, vec_scale(t, mu));
}

int CoxeterSystem::points_per_period() const {
  Rat k = 1 / axis.spacing;
  return (int)k.get_num().get_si();
}

ReflClass classify_reflection(const CoxeterSystem& sys, const Reflection& r) {
  if (!sys.roots.hyperplane_in_arrangement(r))
    throw std::invalid_argument("reflection not in the arrangement: " + reflection_str(r));
  return mu_pairing(sys, r) == 0 ? ReflClass::Horizontal : ReflClass::Vertical;
}

int axis_index(const CoxeterSystem& sys, const Reflection& r) {
  Rat slope = mu_pairing(sys, r);
  if (slope == 0) throw std::invalid_argument("horizontal reflection has no axis index");
  Vec root = reflection_root_vec(r);
  Rat theta = (r.offset - dot(sys.axis.base_point, root)) / slope;
  Rat idx = theta / sys.axis.spacing;
  if (!rat_is_int(idx)) throw std::logic_error("vertical reflection misses the axis grid");
  return (int)idx.get_num().get_si();
}

std::vector<Reflection> reflections_fixing_point(const CoxeterSystem& sys, const Vec& a) {
  std::vector<Reflection> out;
  for (const RootDirection& d : sys.roots.dirs) {
    Vec root = reflection_root_vec(Reflection{d.root, Rat(0)});
    Rat c = dot(a, root);
    if (rat_is_int(c / d.spacing)) out.push_back(Reflection{d.root, c});
  }
  return out;
}

IntervalReflections interval_reflections(const CoxeterSystem& sys, WindowSpec window) {
  if (window.lo > window.hi) throw std::invalid_argument("empty window");
  IntervalReflections out;
  for (int i = window.lo; i <= window.hi; ++i) {
    Vec p = sys.axis.axis_point(i);
    std::vector<Reflection> rs = reflections_fixing_point(sys, p);
    for (const Reflection& r : rs)
      if (mu_pairing(sys, r) == 0)
        throw std::logic_error("horizontal hyperplane through an axis point");
    out.verticals_by_axis_point[i] = std::move(rs);
  }
  for (const RootDirection& d : sys.roots.dirs) {
    Reflection probe{d.root, Rat(0)};
    if (mu_pairing(sys, probe) != 0) continue;
    Vec root = reflection_root_vec(probe);
    Rat c = dot(sys.axis.base_point, root);
    Rat k0 = Rat(rat_floor_div(c, d.spacing)) * d.spacing;
    if (c == k0) throw std::logic_error("axis lies on a horizontal hyperplane");
    out.horizontals.push_back(Reflection{d.root, k0});
    out.horizontals.push_back(Reflection{d.root, k0 + d.spacing});
  }
  std::sort(out.horizontals.begin(), out.horizontals.end());
  return out;
}

Chamber chamber_at(const CoxeterSystem& sys, const Vec& a) {
  return chamber_at_impl(sys.amb, sys.roots, a);
}

std::vector<Vec> chamber_vertices(const CoxeterSystem& sys, const Chamber& c) {
  std::vector<Vec> verts;
  for (size_t skip = 0; skip < c.walls.size(); ++skip) {
    Mat rows;
    Vec rhs;
    for (size_t j = 0; j < c.walls.size(); ++j) {
      if (j == skip) continue;
      rows.push_back(reflection_root_vec(c.walls[j]));
      rhs.push_back(c.walls[j].offset);
    }
    for (const Vec& q : sys.amb.quotient) {
      rows.push_back(q);
      rhs.push_back(Rat(0));
    }
    auto x = solve(rows, rhs);
    if (!x) throw std::logic_error("chamber walls are inconsistent");
    if (!nullspace(rows).empty())
      throw std::logic_error("chamber vertex is not unique; chamber is not a simplex");
    verts.push_back(sys.amb.canonicalize(*x));
  }
  return verts;
}

namespace {

// Horizontal wall candidate order for type A~, from the explicit bigon
// coordinates (x_1..x_p | y_1..y_q) at a point satisfying the product lemma
// hypotheses: x_p < ... < x_1 < x_p + 1 and y_1 < ... < y_q < y_1 + 1.
std::vector<Reflection> horizontal_candidates_A(const CoxeterSystem& sys, const Vec& a0) {
  int p = sys.spec.p, q = sys.spec.q, d = sys.amb.dim;
  // shift so that x_p = 0
  Vec a(d);
  for (int i = 0; i < d; ++i) a[i] = a0[i] - a0[p - 1];
  auto x = [&](int i) { return a[i - 1]; };        // 1-based
  auto y = [&](int j) { return a[p + j - 1]; };    // 1-based
  for (int i = p; i >= 2; --i)
    if (!(x(i) < x(i - 1))) throw std::logic_error("A~ lemma hypothesis fails (x)");
  if (!(x(1) < x(p) + 1)) throw std::logic_error("A~ lemma hypothesis fails (x span)");
  for (int j = 1; j < q; ++j)
    if (!(y(j) < y(j + 1))) throw std::logic_error("A~ lemma hypothesis fails (y)");
  if (!(y(q) < y(1) + 1)) throw std::logic_error("A~ lemma hypothesis fails (y span)");
  int s = 1;
  Rat bestfrac;
  for (int j = 1; j <= q; ++j) {
    Rat f = y(j) - Rat(rat_floor_div(y(j), Rat(1)));
    if (j == 1 || f < bestfrac) {
      bestfrac = f;
      s = j;
    }
  }
  Rat h = Rat(rat_floor_div(y(s), Rat(1)));
  int t = p;
  for (int i = 1; i <= p; ++i)
    if (x(i) < y(s) - h) {
      t = i;
      break;
    }
  auto xr = [&](int i, int j, long off) {  // hyperplane x_i = x_j + off
    std::vector<long> root(d, 0);
    root[i - 1] = 1;
    root[j - 1] = -1;
    return make_reflection(std::move(root), Rat(off));
  };
  auto yr = [&](int i, int j, long off) {  // hyperplane y_i = y_j + off
    std::vector<long> root(d, 0);
    root[p + i - 1] = 1;
    root[p + j - 1] = -1;
    return make_reflection(std::move(root), Rat(off));
  };
  std::vector<Reflection> cand;
  for (int i = t + 1; i <= p - 1; ++i) cand.push_back(xr(i, i + 1, 0));
  if (p >= 2) cand.push_back(xr(1, p, 1));
  for (int i = 1; i <= t - 1; ++i) cand.push_back(xr(i, i + 1, 0));
  for (int j = s; j <= q - 1; ++j) cand.push_back(yr(j, j + 1, 0));
  if (q >= 2) cand.push_back(yr(1, q, -1));
  for (int j = 1; j <= s - 2; ++j) cand.push_back(yr(j, j + 1, 0));
  return cand;
}

// Chain-pattern horizontal order for B~/C~/D~ via the appendix reduction.
// `lo..hi` (0-based, half-open) is the cyclically permuted coordinate block.
std::vector<Reflection> horizontal_candidates_chain(const CoxeterSystem& sys, const Vec& a,
                                                    int lo, int hi) {
  const Ambient& amb = sys.amb;
  // Normalize with a power of w so the block is ascending inside (0, 1).
  auto normalized = [&](const Vec& b) {
    for (int i = lo; i < hi; ++i) {
      if (!(b[i] > 0 && b[i] < 1)) return false;
      if (i > lo && !(b[i - 1] < b[i])) return false;
    }
    return true;
  };
  Vec b = a;
  Isometry g = isometry_identity(amb);
  Isometry pos = g, neg = g;
  bool found = normalized(b);
  for (int k = 1; k <= 4 * (hi - lo) + 8 && !found; ++k) {
    pos = compose(amb, sys.w, pos);
    b = apply(amb, pos, a);
    if (normalized(b)) { found = true; g = pos; break; }
    neg = compose(amb, sys.w_inv, neg);
    b = apply(amb, neg, a);
    if (normalized(b)) { found = true; g = neg; break; }
  }
  if (!found) throw std::logic_error("failed to normalize point for chain order");
  b = apply(amb, g, a);
  int psplit = lo - 1;
  for (int i = lo; i < hi; ++i)
    if (b[i] < rat(1, 2)) psplit = i;
  // Chains {z_i = z_{i+1}} on either side of the split, in the normalized
  // coordinates; pull each hyperplane back through g.
  std::vector<Reflection> cand;
  Isometry gi = invert(amb, g);
  auto add_pair = [&](int i) {
    std::vector<long> root(amb.dim, 0);
    root[i] = 1;
    root[i + 1] = -1;
    Reflection rr = make_reflection(std::move(root), Rat(0));
    Isometry pulled = conjugate(amb, gi, reflection_isometry(amb, rr));
    auto back = reflection_from_isometry(amb, pulled);
    if (!back) throw std::logic_error("pulled-back wall is not a reflection");
    cand.push_back(*back);
  };
  for (int i = lo; i < psplit; ++i) add_pair(i);
  for (int i = psplit + 1; i < hi - 1; ++i) add_pair(i);
  return cand;
}

}  // namespace

std::vector<Reflection> three_block_walls(const CoxeterSystem& sys, const Chamber& c,
                                          const Vec& a) {
  const Vec& mu = sys.axis.mu;
  struct Crossed {
    Rat theta;
    Reflection r;
  };
  std::vector<Crossed> above, below;
  std::vector<Reflection> hor;
  for (const Reflection& r : c.walls) {
    Rat slope = mu_pairing(sys, r);
    if (slope == 0) {
      hor.push_back(r);
      continue;
    }
    Rat theta = (r.offset - dot(a, reflection_root_vec(r))) / slope;
    if (theta == 0) throw std::invalid_argument("base point lies on a wall");
    (theta > 0 ? above : below).push_back({theta, r});
  }
  auto by_theta = [](const Crossed& x, const Crossed& y) {
    if (x.theta != y.theta) return x.theta < y.theta;
    return x.r < y.r;
  };
  std::sort(above.begin(), above.end(), by_theta);
  std::sort(below.begin(), below.end(), by_theta);

  std::vector<Reflection> ordered_hor;
  if (!hor.empty()) {
    std::vector<Reflection> cand;
    switch (sys.spec.family) {
      case Family::Atilde: cand = horizontal_candidates_A(sys, a); break;
      case Family::Ctilde: cand = horizontal_candidates_chain(sys, a, 0, sys.spec.n); break;
      case Family::Btilde:
        cand = horizontal_candidates_chain(sys, a, 0, sys.spec.n - 1);
        break;
      case Family::Dtilde:
        cand = horizontal_candidates_chain(sys, a, 1, sys.spec.n - 1);
        break;
      default:
        throw std::logic_error("unexpected horizontal wall in a bipartite chamber");
    }
    std::set<Reflection> horset(hor.begin(), hor.end());
    for (const Reflection& r : cand)
      if (horset.erase(r)) ordered_hor.push_back(r);
    if (!horset.empty())
      throw std::logic_error("horizontal wall missing from the candidate order");
  }

  std::vector<Reflection> out;
  for (const Crossed& x : above) out.push_back(x.r);
  for (const Reflection& r : ordered_hor) out.push_back(r);
  for (const Crossed& x : below) out.push_back(x.r);
  return out;
}

CoxeterSystem build(const GroupSpec& spec) {
  CoxeterSystem sys;
  sys.spec = spec;
  sys.amb = detail::make_ambient(spec);
  sys.roots = detail::make_root_datum(spec);

  if (detail::has_explicit_coxeter_element(spec)) {
    sys.w = detail::make_coxeter_element(spec, sys.amb);
  } else {
    Vec x0 = detail::generic_point(spec, sys.amb);
    Chamber alcove = chamber_at_impl(sys.amb, sys.roots, x0);
    if ((int)alcove.walls.size() != spec.n + 1)
      throw std::logic_error("alcove of " + group_spec_str(spec) + " has wrong wall count");
    sys.w = bipartite_coxeter_element(spec, sys.amb, alcove);
  }
  validate_isometry(sys.amb, sys.w);
  sys.w_inv = invert(sys.amb, sys.w);

  MovMinFix m = mov_min_fix(sys.amb, sys.w);
  if (!m.fix.empty || m.min.dim() != 1)
    throw std::logic_error("Coxeter element axis is not a line");
  if (reflection_length(sys.amb, sys.w) != spec.n + 1)
    throw std::logic_error("Coxeter element has wrong reflection length");

  AxisGrid grid = anchor_axis(spec, sys.amb, sys.roots, m.min.base, m.mu);
  sys.axis.base_point = grid.p0;
  sys.axis.mu = m.mu;
  sys.axis.spacing = grid.spacing;

  Vec sample = sys.axis.point_at(grid.spacing / 2);
  sys.c0 = chamber_at(sys, sample);
  if ((int)sys.c0.walls.size() != spec.n + 1)
    throw std::logic_error("base chamber has wrong wall count");
  sys.simples = three_block_walls(sys, sys.c0, sample);

  Isometry prod = isometry_identity(sys.amb);
  for (const Reflection& r : sys.simples)
    prod = compose(sys.amb, prod, reflection_isometry(sys.amb, r));
  if (!(prod == sys.w))
    throw std::logic_error("three-block wall product does not equal w");

  sys.c0_vertices = chamber_vertices(sys, sys.c0);
  for (size_t i = 0; i < sys.c0.walls.size(); ++i) {
    // Delete the one wall reflection not fixing this vertex from the simples.
    Isometry wb = isometry_identity(sys.amb);
    for (const Reflection& r : sys.simples) {
      Vec root = reflection_root_vec(r);
      if (dot(sys.c0_vertices[i], root) == r.offset)
        wb = compose(sys.amb, wb, reflection_isometry(sys.amb, r));
    }
    MovMinFix mb = mov_min_fix(sys.amb, wb);
    if (mb.fix.empty || mb.fix.dim() != 0 ||
        !(mb.fix.base == sys.amb.canonicalize(sys.c0_vertices[i])))
      throw std::logic_error("parabolic Coxeter element does not fix its vertex only");
    sys.wb.push_back(wb);
  }
  return sys;
}

AxialCells axial_cells(const CoxeterSystem& sys, WindowSpec window) {
  if (window.lo > window.hi) throw std::invalid_argument("empty window");
  AxialCells out;
  for (int i = window.lo; i <= window.hi; ++i) out.points.push_back(sys.axis.axis_point(i));
  for (int i = window.lo; i < window.hi; ++i) {
    Vec mid = sys.axis.point_at((Rat(i) + rat(1, 2)) * sys.axis.spacing);
    out.chambers.push_back(chamber_at(sys, mid));
  }
  std::set<Vec> seen;
  for (const Chamber& c : out.chambers)
    for (Vec& v : chamber_vertices(sys, c))
      if (seen.insert(v).second) out.vertices.push_back(v);
  // orbit ids: normalize theta into [0, 1) with a power of w
  std::map<Vec, int> rep_ids;
  for (const Vec& v : out.vertices) {
    Rat theta = sys.axis.theta(v);
    mpz_class j = rat_floor_div(theta, Rat(1));
    long jj = j.get_si();
    Isometry g = isometry_identity(sys.amb);
    const Isometry& step = jj > 0 ? sys.w_inv : sys.w;
    for (long k = 0; k < (jj > 0 ? jj : -jj); ++k) g = compose(sys.amb, step, g);
    Vec rep = apply(sys.amb, g, v);
    auto it = rep_ids.find(rep);
    int id;
    if (it == rep_ids.end()) {
      id = (int)rep_ids.size();
      rep_ids[rep] = id;
    } else {
      id = it->second;
    }
    out.orbit_id[v] = id;
  }
  // every axial chamber has exactly one vertex per w-orbit
  for (const Chamber& c : out.chambers) {
    std::set<int> ids;
    for (const Vec& v : chamber_vertices(sys, c)) ids.insert(out.orbit_id.at(v));
    if ((int)ids.size() != sys.coxlen())
      throw std::logic_error("axial chamber misses a vertex orbit");
  }
  return out;
}

IntervalOracle::IntervalOracle(const CoxeterSystem& sys, int scan_radius)
    : sys_(&sys), scan_(scan_radius) {
  pow_pos_ = {isometry_identity(sys.amb)};
  pow_neg_ = {isometry_identity(sys.amb)};
}

const Isometry& IntervalOracle::w_power(int j) {
  auto& v = j >= 0 ? pow_pos_ : pow_neg_;
  const Isometry& step = j >= 0 ? sys_->w : sys_->w_inv;
  size_t need = (size_t)(j >= 0 ? j : -j);
  while (v.size() <= need) v.push_back(compose(sys_->amb, step, v.back()));
  return v[need];
}

Isometry IntervalOracle::phi(const Isometry& u) {
  return compose(sys_->amb, compose(sys_->amb, sys_->w_inv, u), sys_->w);
}

Isometry IntervalOracle::phi_inv(const Isometry& u) {
  return compose(sys_->amb, compose(sys_->amb, sys_->w, u), sys_->w_inv);
}

bool IntervalOracle::is_axial_vertex(const Vec& p) {
  const CoxeterSystem& sys = *sys_;
  for (const Vec& rep : sys.c0_vertices) {
    Rat dtheta = sys.axis.theta(p) - sys.axis.theta(rep);
    if (!rat_is_int(dtheta)) continue;
    long j = (long)dtheta.get_num().get_si();
    if (std::abs(j) > 8 * scan_) continue;
    if (apply(sys.amb, w_power((int)j), rep) == p) return true;
  }
  return false;
}

Isometry IntervalOracle::w_b(const Vec& b) {
  const CoxeterSystem& sys = *sys_;
  for (size_t i = 0; i < sys.c0_vertices.size(); ++i) {
    Rat dtheta = sys.axis.theta(b) - sys.axis.theta(sys.c0_vertices[i]);
    if (!rat_is_int(dtheta)) continue;
    long j = (long)dtheta.get_num().get_si();
    if (std::abs(j) > 8 * scan_) continue;
    const Isometry& g = w_power((int)j);
    if (apply(sys.amb, g, sys.c0_vertices[i]) == b)
      return conjugate(sys.amb, g, sys.wb[i]);
  }
  throw std::invalid_argument("not an axial vertex");
}

std::optional<Vec> IntervalOracle::witness_vertex(const Isometry& u) {
  const CoxeterSystem& sys = *sys_;
  MovMinFix m = mov_min_fix(sys.amb, u);
  if (m.fix.empty) return std::nullopt;
  int lu = sys.amb.effective_dim() - m.fix.dim();
  for (size_t i = 0; i < sys.c0_vertices.size(); ++i) {
    for (int k = 0; k <= 2 * scan_; ++k) {
      int j = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
      Vec b = apply(sys.amb, w_power(j), sys.c0_vertices[i]);
      if (!subspace_contains_point(m.fix, b)) continue;
      Isometry wb = conjugate(sys.amb, w_power(j), sys.wb[i]);
      Isometry rest = compose(sys.amb, invert(sys.amb, u), wb);
      if (lu + reflection_length(sys.amb, rest) == sys.rank()) return b;
    }
  }
  return std::nullopt;
}

bool IntervalOracle::in_interval(const Isometry& u) {
  auto it = memo_.find(u);
  if (it != memo_.end()) return it->second;
  const CoxeterSystem& sys = *sys_;
  bool ok = false;
  if (is_identity(u) || u == sys.w) {
    ok = true;
  } else {
    int lu = reflection_length(sys.amb, u);
    Isometry rest = compose(sys.amb, invert(sys.amb, u), sys.w);
    if (lu + reflection_length(sys.amb, rest) == sys.coxlen()) {
      if (is_elliptic(sys.amb, u)) {
        ok = witness_vertex(u).has_value();
      } else {
        // Right complement must be a horizontal elliptic element of [1,w];
        // the interval is balanced, so this settles membership of u.
        MovMinFix mv = mov_min_fix(sys.amb, rest);
        bool horizontal = !mv.fix.empty;
        if (horizontal)
          for (const Vec& d : mv.mov.dirs)
            if (dot(d, sys.axis.mu) != 0) {
              horizontal = false;
              break;
            }
        ok = horizontal && in_interval(rest);
      }
    }
  }
  memo_[u] = ok;
  return ok;
}

std::vector<Reflection> reflections_below(const CoxeterSystem& sys, IntervalOracle& oracle,
                                          const Isometry& u,
                                          std::optional<WindowSpec> window) {
  std::vector<Reflection> out;
  if (is_identity(u)) return out;
  if (is_elliptic(sys.amb, u)) {
    MovMinFix m = mov_min_fix(sys.amb, u);
    for (const RootDirection& d : sys.roots.dirs) {
      Vec root = reflection_root_vec(Reflection{d.root, Rat(0)});
      bool perp = true;
      for (const Vec& dir : m.fix.dirs)
        if (dot(dir, root) != 0) {
          perp = false;
          break;
        }
      if (!perp) continue;
      Rat off = dot(m.fix.base, root);
      if (!rat_is_int(off / d.spacing)) continue;
      Reflection r{d.root, off};
      if (mu_pairing(sys, r) == 0) {
        // horizontal: only the two hyperplanes adjacent to the axis lie in [1,w]
        Rat c = dot(sys.axis.base_point, root);
        Rat k0 = Rat(rat_floor_div(c, d.spacing)) * d.spacing;
        if (off != k0 && off != k0 + d.spacing) continue;
      }
      out.push_back(std::move(r));
    }
  } else {
    if (!window) throw std::invalid_argument("hyperbolic element needs a window");
    IntervalReflections cand = interval_reflections(sys, *window);
    int lu = reflection_length(sys.amb, u);
    auto test = [&](const Reflection& r) {
      Isometry ru = compose(sys.amb, reflection_isometry(sys.amb, r), u);
      if (reflection_length(sys.amb, ru) != lu - 1) return;
      if (oracle.in_interval(ru)) out.push_back(r);
    };
    for (auto& [i, rs] : cand.verticals_by_axis_point)
      for (const Reflection& r : rs) test(r);
    for (const Reflection& r : cand.horizontals) test(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Reflection> any_reflection_factorization(const CoxeterSystem& sys,
                                                     IntervalOracle& oracle,
                                                     const Isometry& u) {
  std::vector<Reflection> out;
  Isometry cur = u;
  WindowSpec wide{-oracle.scan_radius(), oracle.scan_radius()};
  while (!is_identity(cur)) {
    std::vector<Reflection> below =
        reflections_below(sys, oracle, cur,
                          is_elliptic(sys.amb, cur) ? std::nullopt
                                                    : std::make_optional(wide));
    if (below.empty()) throw std::logic_error("no reflection below a nontrivial element");
    const Reflection& r = below.front();
    out.push_back(r);
    cur = compose(sys.amb, reflection_isometry(sys.amb, r), cur);
  }
  return out;
}

std::optional<Isometry> parabolic_coxeter_element(const CoxeterSystem& sys,
                                                  IntervalOracle& oracle,
                                                  const Vec& b) {
  if (!oracle.is_axial_vertex(b)) return std::nullopt;
  return oracle.w_b(b);
}

std::vector<std::vector<int>> subgroup_direction_components(
    const CoxeterSystem& sys, const std::vector<Reflection>& gens) {
  std::vector<int> ids;
  for (const Reflection& r : gens) {
    int d = sys.roots.dir_of(r.root);
    if (d < 0) throw std::invalid_argument("generator not in the arrangement");
    if (std::find(ids.begin(), ids.end(), d) == ids.end()) ids.push_back(d);
  }
  int k = (int)ids.size();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Vec a = reflection_root_vec(Reflection{sys.roots.dirs[ids[i]].root, Rat(0)});
      Vec b = reflection_root_vec(Reflection{sys.roots.dirs[ids[j]].root, Rat(0)});
      if (dot(a, b) != 0) parent[find(i)] = find(j);
    }
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < k; ++i) groups[find(i)].push_back(ids[i]);
  std::vector<std::vector<int>> out;
  for (auto& [root, g] : groups) out.push_back(g);
  std::sort(out.begin(), out.end());
  return out;
}

HorizontalData horizontal_components(const CoxeterSystem& sys, IntervalOracle& oracle) {
  HorizontalData out;
  // Directions and components of the horizontal root system.
  std::vector<Reflection> horgens;
  for (const RootDirection& d : sys.roots.dirs) {
    Reflection probe{d.root, Rat(0)};
    if (mu_pairing(sys, probe) == 0) horgens.push_back(probe);
  }
  std::vector<std::vector<int>> comps = subgroup_direction_components(sys, horgens);
  int total_rank = 0;
  for (const auto& comp : comps) {
    HorizontalComponent hc;
    hc.dir_ids = comp;
    std::vector<Vec> roots;
    for (int d : comp) roots.push_back(reflection_root_vec(Reflection{sys.roots.dirs[d].root, Rat(0)}));
    hc.rank = (int)independent_subset(roots).size();
    if ((int)comp.size() != hc.rank * (hc.rank + 1) / 2)
      throw std::logic_error("horizontal component is not of type A");
    for (int d : comp) {
      Vec root = reflection_root_vec(Reflection{sys.roots.dirs[d].root, Rat(0)});
      Rat c = dot(sys.axis.base_point, root);
      Rat sp = sys.roots.dirs[d].spacing;
      Rat k0 = Rat(rat_floor_div(c, sp)) * sp;
      hc.reflections.push_back(Reflection{sys.roots.dirs[d].root, k0});
      hc.reflections.push_back(Reflection{sys.roots.dirs[d].root, k0 + sp});
    }
    std::sort(hc.reflections.begin(), hc.reflections.end());
    total_rank += hc.rank;
    out.components.push_back(std::move(hc));
  }
  if (total_rank != sys.rank() - 1)
    throw std::logic_error("horizontal root system has wrong total rank");

  // Search for a horizontal factorization w = t h over parallel vertical
  // pairs, in a deterministic scan order.
  bool found = false;
  int R = 2 * sys.coxlen() + 2;
  IntervalReflections ir = interval_reflections(sys, WindowSpec{-R, R});
  for (int span = 1; span <= 2 * R && !found; ++span) {
    for (int i1 = -R; i1 + span <= R && !found; ++i1) {
      int i2 = i1 + span;
      for (const Reflection& r1 : ir.verticals_by_axis_point[i1]) {
        for (const Reflection& r2 : ir.verticals_by_axis_point[i2]) {
          if (r1.root != r2.root) continue;
          Isometry t = compose(sys.amb, reflection_isometry(sys.amb, r1),
                               reflection_isometry(sys.amb, r2));
          if (reflection_length(sys.amb, t) != 2) continue;
          if (!oracle.in_interval(t)) continue;
          Isometry h = compose(sys.amb, invert(sys.amb, t), sys.w);
          if (reflection_length(sys.amb, h) != sys.rank() - 1) continue;
          out.t = t;
          // split h over the components
          std::vector<Reflection> hf = any_reflection_factorization(sys, oracle, h);
          out.h.assign(out.components.size(), isometry_identity(sys.amb));
          for (const Reflection& r : hf) {
            int d = sys.roots.dir_of(r.root);
            bool placed = false;
            for (size_t ci = 0; ci < out.components.size(); ++ci)
              if (std::count(out.components[ci].dir_ids.begin(),
                             out.components[ci].dir_ids.end(), d)) {
                out.h[ci] = compose(sys.amb, out.h[ci], reflection_isometry(sys.amb, r));
                placed = true;
                break;
              }
            if (!placed) throw std::logic_error("horizontal factor outside the components");
          }
          found = true;
          break;
        }
        if (found) break;
      }
    }
  }
  if (!found) throw std::logic_error("horizontal factorization not found");

  // Verify the root system of W_h equals the horizontal root system.
  Isometry h = compose(sys.amb, invert(sys.amb, out.t), sys.w);
  std::vector<Reflection> below_h = reflections_below(sys, oracle, h);
  std::set<std::vector<long>> below_dirs;
  for (const Reflection& r : below_h) below_dirs.insert(r.root);
  std::set<std::vector<long>> hor_dirs;
  for (const Reflection& r : horgens) hor_dirs.insert(r.root);
  if (below_dirs != hor_dirs)
    throw std::logic_error("horizontal factor has the wrong root system");

  for (size_t ci = 0; ci < out.components.size(); ++ci) {
    HorizontalComponent& hc = out.components[ci];
    hc.h = out.h[ci];
    if (reflection_length(sys.amb, hc.h) != hc.rank)
      throw std::logic_error("horizontal factor has wrong length");
    Isometry u = hc.h;
    for (int pss = 0; pss <= hc.rank; ++pss) {
      hc.maximal.push_back(u);
      if (!(u.linear == hc.h.linear))
        throw std::logic_error("maximal horizontal elements have different linear parts");
      if (!oracle.in_interval(u)) throw std::logic_error("phi-orbit leaves the interval");
      u = oracle.phi(u);
    }
    if (!(hc.maximal.front() == u))
      throw std::logic_error("phi-orbit of a horizontal factor has wrong period");
    // prism: chamber of the subarrangement containing the axis
    std::vector<HalfSpace> hs;
    std::vector<Reflection> hyper;
    for (int d : hc.dir_ids) {
      Vec root = reflection_root_vec(Reflection{sys.roots.dirs[d].root, Rat(0)});
      Rat sp = sys.roots.dirs[d].spacing;
      Rat c = dot(sys.c0.sample, root);
      Rat k0 = Rat(rat_floor_div(c, sp)) * sp;
      hs.push_back({root, k0 + sp});
      hyper.push_back(make_reflection(sys.roots.dirs[d].root, k0 + sp));
      hs.push_back({vec_scale(Rat(-1), root), -k0});
      hyper.push_back(make_reflection(sys.roots.dirs[d].root, k0));
    }
    hc.prism.sample = sys.c0.sample;
    for (int i : facet_indices(hs, sys.c0.sample)) hc.prism.walls.push_back(hyper[i]);
    std::sort(hc.prism.walls.begin(), hc.prism.walls.end());
    if ((int)hc.prism.walls.size() != hc.rank + 1)
      throw std::logic_error("horizontal prism has wrong wall count");
  }
  return out;
}

HyperbolicDecomposition hyperbolic_horizontal_decomposition(const CoxeterSystem& sys,
                                                            IntervalOracle& oracle,
                                                            const Isometry& u) {
  if (is_elliptic(sys.amb, u)) throw std::invalid_argument("element is elliptic");
  if (!oracle.in_interval(u)) throw std::invalid_argument("element is not in [1,w]");
  std::vector<Reflection> f = any_reflection_factorization(sys, oracle, u);
  std::vector<std::vector<int>> comps = subgroup_direction_components(sys, f);
  // Exactly one component carries the vertical reflections.
  int vertical_comp = -1;
  for (size_t ci = 0; ci < comps.size(); ++ci)
    for (int d : comps[ci])
      if (mu_pairing(sys, Reflection{sys.roots.dirs[d].root, Rat(0)}) != 0) {
        if (vertical_comp >= 0 && vertical_comp != (int)ci)
          throw std::logic_error("two vertical components in a hyperbolic element");
        vertical_comp = (int)ci;
      }
  if (vertical_comp < 0) throw std::logic_error("hyperbolic element with no vertical part");
  HyperbolicDecomposition out;
  out.uprime = isometry_identity(sys.amb);
  out.h = isometry_identity(sys.amb);
  for (const Reflection& r : f) {
    int d = sys.roots.dir_of(r.root);
    bool vertical = std::count(comps[vertical_comp].begin(), comps[vertical_comp].end(), d) > 0;
    Isometry& dst = vertical ? out.uprime : out.h;
    dst = compose(sys.amb, dst, reflection_isometry(sys.amb, r));
  }
  if (!(compose(sys.amb, out.uprime, out.h) == u))
    throw std::logic_error("hyperbolic-horizontal factors do not multiply back");
  if (is_elliptic(sys.amb, out.uprime) || !is_elliptic(sys.amb, out.h))
    throw std::logic_error("hyperbolic-horizontal classification failed");
  if (reflection_length(sys.amb, out.uprime) + reflection_length(sys.amb, out.h) !=
      reflection_length(sys.amb, u))
    throw std::logic_error("hyperbolic-horizontal lengths are not additive");
  return out;
}

}  // namespace ncp
