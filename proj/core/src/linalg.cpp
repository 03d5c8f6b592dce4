#include "ncp/linalg.hpp"

namespace ncp {

Vec vec_zero(int n) { return Vec(n, Rat(0)); }

Vec vec_add(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Rat dot(const Vec& a, const Vec& b) {
  assert(a.size() == b.size());
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool vec_is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

Mat mat_identity(int n) {
  Mat m(n, vec_zero(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
  Mat r(n, Vec(p, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < k; ++j) {
      if (a[i][j] == 0) continue;
      for (size_t c = 0; c < p; ++c) r[i][c] += a[i][j] * b[j][c];
    }
  return r;
}

Vec mat_vec(const Mat& a, const Vec& x) {
  Vec r(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat r(a[0].size(), Vec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

bool mat_is_identity(const Mat& a) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != ((i == j) ? 1 : 0)) return false;
  return true;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back((int)c);
    ++r;
  }
  return pivots;
}

int rank(Mat m) { return (int)rref(m).size(); }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (a.empty()) return Vec{};
  size_t rows = a.size(), cols = a[0].size();
  Mat aug(rows, Vec(cols + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> piv = rref(aug);
  for (int p : piv)
    if (p == (int)cols) return std::nullopt;  // inconsistent
  Vec x(cols, Rat(0));
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = aug[k][cols];
  return x;
}

std::vector<Vec> nullspace(const Mat& a) {
  if (a.empty()) return {};
  size_t cols = a[0].size();
  Mat m = a;
  std::vector<int> piv = rref(m);
  std::vector<bool> is_piv(cols, false);
  for (int p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (size_t c = 0; c < cols; ++c) {
    if (is_piv[c]) continue;
    Vec v(cols, Rat(0));
    v[c] = 1;
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -m[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> column_space(const Mat& a) {
  if (a.empty()) return {};
  Mat m = a;
  std::vector<int> piv = rref(m);
  std::vector<Vec> basis;
  for (int p : piv) {
    Vec col(a.size());
    for (size_t i = 0; i < a.size(); ++i) col[i] = a[i][p];
    basis.push_back(std::move(col));
  }
  return basis;
}

std::vector<Vec> independent_subset(const std::vector<Vec>& vs) {
  std::vector<Vec> out;
  Mat echelon;
  for (const Vec& v : vs) {
    Mat test = echelon;
    test.push_back(v);
    int r = (int)rref(test).size();
    if (r > (int)echelon.size()) {
      out.push_back(v);
      test.resize(r);  // rref leaves zero rows at the bottom
      echelon = std::move(test);
    }
  }
  return out;
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
  if (vec_is_zero(v)) return true;
  if (basis.empty()) return false;
  Mat a = mat_transpose(Mat(basis.begin(), basis.end()));
  return solve(a, v).has_value();
}

Vec project_to_span(const std::vector<Vec>& basis, const Vec& p) {
  if (basis.empty()) return vec_zero((int)p.size());
  // Solve the normal equations G c = B p with G the Gram matrix.
  size_t k = basis.size();
  Mat g(k, Vec(k));
  Vec rhs(k);
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
    rhs[i] = dot(basis[i], p);
  }
  auto c = solve(g, rhs);
  assert(c.has_value());
  Vec r = vec_zero((int)p.size());
  for (size_t i = 0; i < k; ++i) r = vec_add(r, vec_scale((*c)[i], basis[i]));
  return r;
}

std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vs, int n) {
  if (vs.empty()) {
    std::vector<Vec> full;
    for (int i = 0; i < n; ++i) {
      Vec e = vec_zero(n);
      e[i] = 1;
      full.push_back(std::move(e));
    }
    return full;
  }
  Mat rows(vs.begin(), vs.end());
  return nullspace(rows);
}

}  // namespace ncp
