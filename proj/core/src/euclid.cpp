#include "ncp/euclid.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ncp {

Vec Ambient::canonicalize(const Vec& v) const {
  Vec r = v;
  for (const Vec& q : quotient) {
    Rat c = dot(r, q) / dot(q, q);
    if (c != 0) r = vec_sub(r, vec_scale(c, q));
  }
  return r;
}

bool Ambient::is_canonical(const Vec& v) const {
  for (const Vec& q : quotient)
    if (dot(v, q) != 0) return false;
  return true;
}

bool Ambient::same(const Ambient& o) const {
  return dim == o.dim && quotient == o.quotient;
}

bool operator==(const Isometry& a, const Isometry& b) {
  return a.linear == b.linear && a.trans == b.trans;
}
bool operator<(const Isometry& a, const Isometry& b) {
  if (a.linear != b.linear) return a.linear < b.linear;
  return a.trans < b.trans;
}

bool operator==(const Reflection& a, const Reflection& b) {
  return a.root == b.root && a.offset == b.offset;
}
bool operator<(const Reflection& a, const Reflection& b) {
  if (a.root != b.root) return a.root < b.root;
  return a.offset < b.offset;
}

Isometry isometry_identity(const Ambient& amb) {
  return {mat_identity(amb.dim), vec_zero(amb.dim)};
}

bool is_identity(const Isometry& u) {
  return mat_is_identity(u.linear) && vec_is_zero(u.trans);
}

Isometry compose(const Ambient& amb, const Isometry& u, const Isometry& v) {
  Isometry r;
  r.linear = mat_mul(u.linear, v.linear);
  r.trans = amb.canonicalize(vec_add(mat_vec(u.linear, v.trans), u.trans));
  return r;
}

Isometry invert(const Ambient& amb, const Isometry& u) {
  Isometry r;
  r.linear = mat_transpose(u.linear);  // orthogonal
  r.trans = amb.canonicalize(vec_scale(Rat(-1), mat_vec(r.linear, u.trans)));
  return r;
}

Vec apply(const Ambient& amb, const Isometry& u, const Vec& p) {
  return amb.canonicalize(vec_add(mat_vec(u.linear, p), u.trans));
}

Isometry conjugate(const Ambient& amb, const Isometry& g, const Isometry& u) {
  return compose(amb, g, compose(amb, u, invert(amb, g)));
}

void validate_isometry(const Ambient& amb, const Isometry& u) {
  if ((int)u.linear.size() != amb.dim || (int)u.trans.size() != amb.dim)
    throw std::invalid_argument("isometry has wrong dimension");
  Mat prod = mat_mul(mat_transpose(u.linear), u.linear);
  if (!mat_is_identity(prod))
    throw std::invalid_argument("linear part is not orthogonal");
  for (const Vec& q : amb.quotient)
    if (mat_vec(u.linear, q) != q)
      throw std::invalid_argument("linear part moves a quotient direction");
  if (!amb.is_canonical(u.trans))
    throw std::invalid_argument("translation part is not canonical");
}

AffineSubspace subspace_whole(const Ambient& amb) {
  AffineSubspace s;
  s.base = vec_zero(amb.dim);
  s.dirs = orthogonal_complement(amb.quotient, amb.dim);
  if (!amb.quotient.empty()) {
    for (Vec& d : s.dirs) d = amb.canonicalize(d);
    s.dirs = independent_subset(s.dirs);
  }
  return s;
}

AffineSubspace subspace_empty() {
  AffineSubspace s;
  s.empty = true;
  return s;
}

AffineSubspace subspace_point(const Ambient& amb, const Vec& p) {
  AffineSubspace s;
  s.base = amb.canonicalize(p);
  return s;
}

bool subspace_contains_point(const AffineSubspace& s, const Vec& p) {
  if (s.empty) return false;
  return in_span(s.dirs, vec_sub(p, s.base));
}

bool subspace_leq(const AffineSubspace& a, const AffineSubspace& b) {
  if (a.empty) return true;
  if (b.empty) return false;
  if (!subspace_contains_point(b, a.base)) return false;
  for (const Vec& d : a.dirs)
    if (!in_span(b.dirs, d)) return false;
  return true;
}

bool subspace_eq(const AffineSubspace& a, const AffineSubspace& b) {
  return subspace_leq(a, b) && subspace_leq(b, a);
}

MovMinFix mov_min_fix(const Ambient& amb, const Isometry& u) {
  MovMinFix r;
  int n = amb.dim;
  // Mov(u) = { u(a) - a } = trans + col space of (linear - id).
  Mat am = u.linear;
  for (int i = 0; i < n; ++i) am[i][i] -= 1;
  std::vector<Vec> movdirs = column_space(am);
  r.mov.base = u.trans;
  r.mov.dirs = movdirs;
  r.mu = vec_sub(u.trans, project_to_span(movdirs, u.trans));
  // Min(u) = { a : (linear - id) a = mu - trans }.
  auto part = solve(am, vec_sub(r.mu, u.trans));
  assert(part.has_value());
  r.min.base = amb.canonicalize(*part);
  std::vector<Vec> ker = nullspace(am);
  for (Vec& d : ker) d = amb.canonicalize(d);
  r.min.dirs = independent_subset(ker);
  if (vec_is_zero(r.mu))
    r.fix = r.min;
  else
    r.fix = subspace_empty();
  return r;
}

bool is_elliptic(const Ambient& amb, const Isometry& u) {
  // Elliptic iff mu = 0, i.e. trans lies in the column space of linear - id.
  Mat am = u.linear;
  for (int i = 0; i < amb.dim; ++i) am[i][i] -= 1;
  return solve(am, u.trans).has_value();
}

int reflection_length(const Ambient& amb, const Isometry& u) {
  MovMinFix m = mov_min_fix(amb, u);
  if (!m.fix.empty) return amb.effective_dim() - m.fix.dim();
  return m.mov.dim() + 2;
}

namespace {
long lgcd(long a, long b) { return std::gcd(a, b); }
}  // namespace

Reflection make_reflection(std::vector<long> root, Rat offset) {
  long g = 0;
  for (long x : root) g = lgcd(g, x < 0 ? -x : x);
  if (g == 0) throw std::invalid_argument("zero root");
  if (g != 1)
    for (long& x : root) x /= g;
  offset /= g;
  for (long x : root) {
    if (x == 0) continue;
    if (x < 0) {
      for (long& y : root) y = -y;
      offset = -offset;
    }
    break;
  }
  return Reflection{std::move(root), std::move(offset)};
}

Reflection make_reflection_from_normal(const Vec& normal, Rat offset) {
  // Scale a rational normal direction to a primitive integer vector.
  mpz_class den(1);
  for (const Rat& x : normal) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<long> root(normal.size());
  Rat scale(den);
  for (size_t i = 0; i < normal.size(); ++i) {
    Rat v = normal[i] * scale;
    assert(rat_is_int(v));
    root[i] = (long)v.get_num().get_si();
  }
  return make_reflection(std::move(root), offset * scale);
}

Vec reflection_root_vec(const Reflection& r) {
  Vec v(r.root.size());
  for (size_t i = 0; i < r.root.size(); ++i) v[i] = Rat(r.root[i]);
  return v;
}

Isometry reflection_isometry(const Ambient& amb, const Reflection& r) {
  Vec a = reflection_root_vec(r);
  Rat nn = dot(a, a);
  Isometry u;
  u.linear = mat_identity(amb.dim);
  for (int i = 0; i < amb.dim; ++i)
    for (int j = 0; j < amb.dim; ++j) u.linear[i][j] -= 2 * a[i] * a[j] / nn;
  u.trans = amb.canonicalize(vec_scale(2 * r.offset / nn, a));
  return u;
}

std::optional<Reflection> reflection_from_isometry(const Ambient& amb, const Isometry& u) {
  MovMinFix m = mov_min_fix(amb, u);
  if (m.fix.empty || m.mov.dim() != 1) return std::nullopt;
  Vec normal = m.mov.dirs[0];
  Reflection r = make_reflection_from_normal(normal, Rat(0));
  Vec root = reflection_root_vec(r);
  r.offset = dot(m.fix.base, root);
  if (!(reflection_isometry(amb, r) == u)) return std::nullopt;
  return r;
}

std::string reflection_str(const Reflection& r) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < r.root.size(); ++i) {
    if (i) os << ",";
    os << r.root[i];
  }
  os << ";" << rat_str(r.offset) << "]";
  return os.str();
}

bool leq_L(const Ambient& amb, const Isometry& u, const Isometry& v) {
  Isometry rest = compose(amb, invert(amb, u), v);
  return reflection_length(amb, u) + reflection_length(amb, rest) ==
         reflection_length(amb, v);
}

bool leq_L_invariant(const Ambient& amb, const Isometry& u, const Isometry& v) {
  MovMinFix mu = mov_min_fix(amb, u);
  MovMinFix mv = mov_min_fix(amb, v);
  bool ue = !mu.fix.empty, ve = !mv.fix.empty;
  if (ue && ve) return subspace_leq(mv.fix, mu.fix);
  if (!ue && !ve) return subspace_leq(mu.mov, mv.mov);
  if (!ue && ve) return false;
  // u elliptic, v hyperbolic: e^Fix(u) < h^Mov(v) iff Span(Mov v)^perp, taken
  // inside the effective space, is contained in Dir(Fix u).
  std::vector<Vec> span = mv.mov.dirs;
  if (!vec_is_zero(mv.mov.base)) span.push_back(mv.mov.base);
  std::vector<Vec> rows = span;
  for (const Vec& q : amb.quotient) rows.push_back(q);
  std::vector<Vec> perp = nullspace(Mat(rows.begin(), rows.end()));
  for (const Vec& p : perp)
    if (!in_span(mu.fix.dirs, p)) return false;
  return true;
}

std::string isometry_str(const Ambient& amb, const Isometry& u) {
  std::ostringstream os;
  os << "lin[";
  for (int i = 0; i < amb.dim; ++i)
    for (int j = 0; j < amb.dim; ++j) {
      if (i || j) os << ",";
      os << rat_str(u.linear[i][j]);
    }
  os << "] t[";
  for (int i = 0; i < amb.dim; ++i) {
    if (i) os << ",";
    os << rat_str(u.trans[i]);
  }
  os << "]";
  return os.str();
}

}  // namespace ncp
