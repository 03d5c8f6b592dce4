#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "internal.hpp"

namespace ncp {

std::optional<GroupSpec> parse_group_spec(std::string_view s) {
  if (s.size() < 3 || s[1] != '~') return std::nullopt;
  char fam = s[0];
  std::string rest(s.substr(2));
  GroupSpec g;
  auto parse_int = [](const std::string& t, int& out) {
    if (t.empty()) return false;
    for (char c : t)
      if (!isdigit((unsigned char)c)) return false;
    out = std::stoi(t);
    return true;
  };
  switch (fam) {
    case 'A': {
      auto lb = rest.find('[');
      if (lb == std::string::npos || rest.back() != ']') return std::nullopt;
      std::string ns = rest.substr(0, lb);
      std::string pq = rest.substr(lb + 1, rest.size() - lb - 2);
      auto comma = pq.find(',');
      if (comma == std::string::npos) return std::nullopt;
      g.family = Family::Atilde;
      if (!parse_int(ns, g.n) || !parse_int(pq.substr(0, comma), g.p) ||
          !parse_int(pq.substr(comma + 1), g.q))
        return std::nullopt;
      if (g.n < 1 || g.p < g.q || g.q < 1 || g.p + g.q != g.n + 1) return std::nullopt;
      return g;
    }
    case 'B':
      g.family = Family::Btilde;
      if (!parse_int(rest, g.n) || g.n < 3) return std::nullopt;
      return g;
    case 'C':
      g.family = Family::Ctilde;
      if (!parse_int(rest, g.n) || g.n < 2) return std::nullopt;
      return g;
    case 'D':
      g.family = Family::Dtilde;
      if (!parse_int(rest, g.n) || g.n < 4) return std::nullopt;
      return g;
    case 'E':
      if (rest == "6") return GroupSpec{Family::E6t, 6};
      if (rest == "7") return GroupSpec{Family::E7t, 7};
      if (rest == "8") return GroupSpec{Family::E8t, 8};
      return std::nullopt;
    case 'F':
      if (rest == "4") return GroupSpec{Family::F4t, 4};
      return std::nullopt;
    case 'G':
      if (rest == "2") return GroupSpec{Family::G2t, 2};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::string group_spec_str(const GroupSpec& g) {
  std::ostringstream os;
  switch (g.family) {
    case Family::Atilde:
      os << "A~" << g.n << "[" << g.p << "," << g.q << "]";
      break;
    case Family::Btilde: os << "B~" << g.n; break;
    case Family::Ctilde: os << "C~" << g.n; break;
    case Family::Dtilde: os << "D~" << g.n; break;
    case Family::E6t: os << "E~6"; break;
    case Family::E7t: os << "E~7"; break;
    case Family::E8t: os << "E~8"; break;
    case Family::F4t: os << "F~4"; break;
    case Family::G2t: os << "G~2"; break;
  }
  return os.str();
}

int RootDatum::dir_of(const std::vector<long>& root) const {
  auto it = index.find(root);
  return it == index.end() ? -1 : it->second;
}

bool RootDatum::hyperplane_in_arrangement(const Reflection& r) const {
  int d = dir_of(r.root);
  if (d < 0) return false;
  Rat q = r.offset / dirs[d].spacing;
  return rat_is_int(q);
}

namespace detail {

namespace {

std::vector<long> unit(int n, int i, long v = 1) {
  std::vector<long> e(n, 0);
  e[i] = v;
  return e;
}

void add_dir(RootDatum& rd, std::vector<long> root, Rat spacing) {
  Reflection r = make_reflection(std::move(root), Rat(0));
  if (rd.index.count(r.root)) return;
  rd.index[r.root] = (int)rd.dirs.size();
  rd.dirs.push_back(RootDirection{r.root, std::move(spacing)});
}

size_t expected_positive_roots(const GroupSpec& g) {
  switch (g.family) {
    case Family::Atilde: return (size_t)(g.n + 1) * g.n / 2;
    case Family::Btilde:
    case Family::Ctilde: return (size_t)g.n * g.n;
    case Family::Dtilde: return (size_t)g.n * (g.n - 1);
    case Family::G2t: return 6;
    case Family::F4t: return 24;
    case Family::E6t: return 36;
    case Family::E7t: return 63;
    case Family::E8t: return 120;
  }
  return 0;
}

}  // namespace

Ambient make_ambient(const GroupSpec& g) {
  Ambient amb;
  switch (g.family) {
    case Family::Atilde:
      amb.dim = g.n + 1;
      amb.quotient = {Vec(amb.dim, Rat(1))};
      break;
    case Family::G2t:
      amb.dim = 3;
      amb.quotient = {Vec(3, Rat(1))};
      break;
    case Family::E7t:
      amb.dim = 8;
      amb.quotient = {Vec(8, Rat(1))};
      break;
    case Family::E6t: {
      amb.dim = 8;
      Vec q1 = vec_zero(8), q2 = vec_zero(8);
      q1[5] = 1; q1[6] = -1;
      q2[5] = 1; q2[6] = 1; q2[7] = 2;
      amb.quotient = {q1, q2};
      break;
    }
    default:
      amb.dim = g.n;
      break;
  }
  return amb;
}

RootDatum make_root_datum(const GroupSpec& g) {
  RootDatum rd;
  int n = g.n;
  switch (g.family) {
    case Family::Atilde: {
      int d = n + 1;
      for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
          std::vector<long> r(d, 0);
          r[i] = 1;
          r[j] = -1;
          add_dir(rd, std::move(r), Rat(1));
        }
      break;
    }
    case Family::Btilde:
    case Family::Ctilde: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<long> r(n, 0);
          r[i] = 1; r[j] = -1;
          add_dir(rd, r, Rat(1));
          r[j] = 1;
          add_dir(rd, std::move(r), Rat(1));
        }
      for (int i = 0; i < n; ++i)
        add_dir(rd, unit(n, i), g.family == Family::Ctilde ? rat(1, 2) : Rat(1));
      break;
    }
    case Family::Dtilde: {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          std::vector<long> r(n, 0);
          r[i] = 1; r[j] = -1;
          add_dir(rd, r, Rat(1));
          r[j] = 1;
          add_dir(rd, std::move(r), Rat(1));
        }
      break;
    }
    case Family::G2t: {
      long shorts[3][3] = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
      long longs[3][3] = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
      for (auto& s : shorts) add_dir(rd, {s[0], s[1], s[2]}, Rat(1));
      for (auto& s : longs) add_dir(rd, {s[0], s[1], s[2]}, Rat(1));
      break;
    }
    case Family::F4t: {
      for (int i = 0; i < 4; ++i) add_dir(rd, unit(4, i), Rat(1));
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          std::vector<long> r(4, 0);
          r[i] = 1; r[j] = -1;
          add_dir(rd, r, Rat(1));
          r[j] = 1;
          add_dir(rd, std::move(r), Rat(1));
        }
      // roots (+-1,+-1,+-1,+-1)/2, doubled to primitive integer vectors
      for (int mask = 0; mask < 8; ++mask) {
        std::vector<long> r = {1, mask & 1 ? -1 : 1, mask & 2 ? -1 : 1, mask & 4 ? -1 : 1};
        add_dir(rd, std::move(r), Rat(2));
      }
      break;
    }
    case Family::E8t: {
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
          std::vector<long> r(8, 0);
          r[i] = 1; r[j] = -1;
          add_dir(rd, r, Rat(1));
          r[j] = 1;
          add_dir(rd, std::move(r), Rat(1));
        }
      // (+-1)^8 / 2 with an even number of minus signs, doubled
      for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        std::vector<long> r(8);
        for (int i = 0; i < 8; ++i) r[i] = (mask >> i) & 1 ? -1 : 1;
        add_dir(rd, std::move(r), Rat(2));
      }
      break;
    }
    case Family::E7t: {
      // Sum-zero model in R^8 / <1,...,1>: roots e_i - e_j together with the
      // classes of e_S - (1/2)(1,..,1) for 4-subsets S, doubled.
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) {
          std::vector<long> r(8, 0);
          r[i] = 1; r[j] = -1;
          add_dir(rd, std::move(r), Rat(1));
        }
      for (int mask = 0; mask < 256; ++mask) {
        if (__builtin_popcount(mask) != 4) continue;
        std::vector<long> r(8);
        for (int i = 0; i < 8; ++i) r[i] = (mask >> i) & 1 ? 1 : -1;
        add_dir(rd, std::move(r), Rat(2));
      }
      break;
    }
    case Family::E6t: {
      // Bourbaki model in R^8 modulo a 2-plane no reflection moves.
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          std::vector<long> r(8, 0);
          r[i] = 1; r[j] = -1;
          add_dir(rd, r, Rat(1));
          r[j] = 1;
          add_dir(rd, std::move(r), Rat(1));
        }
      // (1/2)(e8 - e7 - e6 + sum (-1)^nu_i e_i), even number of minus signs
      for (int mask = 0; mask < 32; ++mask) {
        if (__builtin_popcount(mask) % 2) continue;
        std::vector<long> r(8);
        for (int i = 0; i < 5; ++i) r[i] = (mask >> i) & 1 ? -1 : 1;
        r[5] = -1; r[6] = -1; r[7] = 1;
        add_dir(rd, std::move(r), Rat(2));
      }
      break;
    }
  }
  if (rd.dirs.size() != expected_positive_roots(g))
    throw std::logic_error("root datum has wrong size for " + group_spec_str(g));
  return rd;
}

// The explicit appendix Coxeter elements for the four infinite families.
Isometry make_coxeter_element(const GroupSpec& g, const Ambient& amb) {
  int n = g.n;
  Isometry w;
  w.linear = Mat(amb.dim, vec_zero(amb.dim));
  w.trans = vec_zero(amb.dim);
  switch (g.family) {
    case Family::Atilde: {
      int p = g.p, q = g.q;
      w.linear[0][p - 1] = 1;
      for (int i = 1; i < p; ++i) w.linear[i][i - 1] = 1;
      w.linear[p][p + q - 1] = 1;
      for (int j = 1; j < q; ++j) w.linear[p + j][p + j - 1] = 1;
      w.trans[0] = 1;
      w.trans[p] = -1;
      break;
    }
    case Family::Ctilde: {
      w.linear[0][n - 1] = 1;
      for (int i = 1; i < n; ++i) w.linear[i][i - 1] = 1;
      w.trans[0] = -1;
      break;
    }
    case Family::Btilde: {
      w.linear[0][n - 2] = 1;
      for (int i = 1; i < n - 1; ++i) w.linear[i][i - 1] = 1;
      w.linear[n - 1][n - 1] = -1;
      w.trans[0] = -1;
      w.trans[n - 1] = 1;
      break;
    }
    case Family::Dtilde: {
      w.linear[0][0] = -1;
      w.linear[1][n - 2] = 1;
      for (int i = 2; i < n - 1; ++i) w.linear[i][i - 1] = 1;
      w.linear[n - 1][n - 1] = -1;
      w.trans[1] = -1;
      w.trans[n - 1] = 1;
      break;
    }
    default:
      throw std::logic_error("no explicit Coxeter element for this family");
  }
  w.trans = amb.canonicalize(w.trans);
  return w;
}

bool has_explicit_coxeter_element(const GroupSpec& g) {
  switch (g.family) {
    case Family::Atilde:
    case Family::Btilde:
    case Family::Ctilde:
    case Family::Dtilde: return true;
    default: return false;
  }
}

// A point on no hyperplane: distinct small primes over a large prime
// denominator; every root pairing has a numerator below the denominator.
Vec generic_point(const GroupSpec& g, const Ambient& amb) {
  static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};
  Vec x(amb.dim);
  for (int i = 0; i < amb.dim; ++i) x[i] = rat(primes[i], 997);
  return amb.canonicalize(x);
}

}  // namespace detail

}  // namespace ncp
