#include "ncp/lp.hpp"

#include <stdexcept>

namespace ncp {

namespace {

// Dictionary simplex for max c.x, A x <= b, x >= 0 (Chvatal). Row 0 of the
// dictionary holds the objective. Bland's rule throughout.
struct Dictionary {
  int m, n;                 // constraints, original variables
  std::vector<int> basic;   // size m, variable index of each row
  std::vector<int> nonbasic;  // size n
  Mat d;  // (m+1) x (n+1): d[0] = [z | obj coeffs], d[i] = [b_i | -coeffs]

  void pivot(int row, int col) {
    int leave = basic[row - 1], enter = nonbasic[col - 1];
    Rat piv = d[row][col];
    Vec& r = d[row];
    for (Rat& x : r) x /= -piv;
    r[col] = 1 / piv;
    for (int i = 0; i <= m; ++i) {
      if (i == row) continue;
      Rat f = d[i][col];
      if (f == 0) continue;
      d[i][col] = 0;
      for (int j = 0; j <= n; ++j) d[i][j] += f * r[j];
    }
    basic[row - 1] = enter;
    nonbasic[col - 1] = leave;
  }

  // Returns false when unbounded.
  bool optimize() {
    for (;;) {
      int col = -1, enter = INT32_MAX;
      for (int j = 1; j <= n; ++j)
        if (d[0][j] > 0 && nonbasic[j - 1] < enter) {
          enter = nonbasic[j - 1];
          col = j;
        }
      if (col < 0) return true;
      int row = -1, leave = INT32_MAX;
      Rat best;
      for (int i = 1; i <= m; ++i) {
        if (d[i][col] >= 0) continue;
        Rat ratio = -d[i][0] / d[i][col];
        if (row < 0 || ratio < best || (ratio == best && basic[i - 1] < leave)) {
          best = ratio;
          row = i;
          leave = basic[i - 1];
        }
      }
      if (row < 0) return false;
      pivot(row, col);
    }
  }
};

Dictionary make_dictionary(const Mat& a, const Vec& b, const Vec& c) {
  Dictionary dict;
  dict.m = (int)a.size();
  dict.n = (int)c.size();
  dict.basic.resize(dict.m);
  dict.nonbasic.resize(dict.n);
  for (int j = 0; j < dict.n; ++j) dict.nonbasic[j] = j;
  for (int i = 0; i < dict.m; ++i) dict.basic[i] = dict.n + i;
  dict.d.assign(dict.m + 1, Vec(dict.n + 1, Rat(0)));
  for (int j = 0; j < dict.n; ++j) dict.d[0][j + 1] = c[j];
  for (int i = 0; i < dict.m; ++i) {
    dict.d[i + 1][0] = b[i];
    for (int j = 0; j < dict.n; ++j) dict.d[i + 1][j + 1] = -a[i][j];
  }
  return dict;
}

// Non-negative-variable LP.
LPResult lp_maximize_nn(const Mat& a, const Vec& b, const Vec& c) {
  Dictionary dict = make_dictionary(a, b, c);
  int worst = -1;
  for (int i = 0; i < dict.m; ++i)
    if (b[i] < 0 && (worst < 0 || b[i] < b[worst])) worst = i;
  if (worst >= 0) {
    // Phase one: auxiliary variable x0 with column +1 in every row.
    Dictionary aux = make_dictionary(a, b, c);
    aux.n += 1;
    aux.nonbasic.push_back(-1);  // x0 gets the smallest Bland index
    for (int i = 0; i <= aux.m; ++i) aux.d[i].push_back(Rat(0));
    for (int j = aux.n; j > 1; --j)
      for (int i = 0; i <= aux.m; ++i) std::swap(aux.d[i][j], aux.d[i][j - 1]);
    std::rotate(aux.nonbasic.begin(), aux.nonbasic.end() - 1, aux.nonbasic.end());
    for (int j = 1; j <= aux.n; ++j) aux.d[0][j] = (j == 1) ? Rat(-1) : Rat(0);
    for (int i = 1; i <= aux.m; ++i) aux.d[i][1] = 1;
    aux.pivot(worst + 1, 1);
    if (!aux.optimize()) throw std::logic_error("phase one unbounded");
    if (aux.d[0][0] != 0) return {LPStatus::Infeasible, Rat(0), {}};
    // Drive x0 out of the basis if degenerate.
    for (int i = 0; i < aux.m; ++i)
      if (aux.basic[i] == -1) {
        for (int j = 1; j <= aux.n; ++j)
          if (aux.nonbasic[j - 1] != -1 && aux.d[i + 1][j] != 0) {
            aux.pivot(i + 1, j);
            break;
          }
        break;
      }
    // Rebuild the phase-two dictionary: drop x0, restore objective c.
    int col0 = -1;
    for (int j = 0; j < aux.n; ++j)
      if (aux.nonbasic[j] == -1) col0 = j + 1;
    if (col0 < 0) throw std::logic_error("x0 still basic");
    Dictionary p2;
    p2.m = aux.m;
    p2.n = aux.n - 1;
    p2.basic = aux.basic;
    p2.nonbasic.clear();
    for (int j = 0; j < aux.n; ++j)
      if (j + 1 != col0) p2.nonbasic.push_back(aux.nonbasic[j]);
    p2.d.assign(p2.m + 1, Vec(p2.n + 1, Rat(0)));
    for (int i = 1; i <= p2.m; ++i) {
      int jj = 0;
      for (int j = 0; j <= aux.n; ++j) {
        if (j == col0) continue;
        p2.d[i][jj++] = aux.d[i][j];
      }
    }
    // Objective: z = sum over original variables of c[v] * (expression of v).
    Vec obj(p2.n + 1, Rat(0));
    for (int v = 0; v < (int)c.size(); ++v) {
      if (c[v] == 0) continue;
      bool found = false;
      for (int j = 0; j < p2.n; ++j)
        if (p2.nonbasic[j] == v) {
          obj[j + 1] += c[v];
          found = true;
          break;
        }
      if (found) continue;
      for (int i = 0; i < p2.m; ++i)
        if (p2.basic[i] == v) {
          for (int j = 0; j <= p2.n; ++j) obj[j] += c[v] * p2.d[i + 1][j];
          break;
        }
    }
    p2.d[0] = obj;
    dict = std::move(p2);
  }
  if (!dict.optimize()) return {LPStatus::Unbounded, Rat(0), {}};
  LPResult res{LPStatus::Optimal, dict.d[0][0], Vec(c.size(), Rat(0))};
  for (int i = 0; i < dict.m; ++i)
    if (dict.basic[i] >= 0 && dict.basic[i] < (int)c.size())
      res.x[dict.basic[i]] = dict.d[i + 1][0];
  return res;
}

}  // namespace

LPResult lp_maximize(const Mat& a, const Vec& b, const Vec& c) {
  // Split x = p - q with p, q >= 0.
  int n = (int)c.size();
  Mat a2(a.size(), Vec(2 * n));
  for (size_t i = 0; i < a.size(); ++i)
    for (int j = 0; j < n; ++j) {
      a2[i][j] = a[i][j];
      a2[i][n + j] = -a[i][j];
    }
  Vec c2(2 * n);
  for (int j = 0; j < n; ++j) {
    c2[j] = c[j];
    c2[n + j] = -c[j];
  }
  LPResult r = lp_maximize_nn(a2, b, c2);
  if (r.status != LPStatus::Optimal) return r;
  Vec x(n);
  for (int j = 0; j < n; ++j) x[j] = r.x[j] - r.x[n + j];
  r.x = std::move(x);
  return r;
}

std::vector<int> facet_indices(const std::vector<HalfSpace>& hs, const Vec& interior) {
  std::vector<int> facets;
  int n = (int)interior.size();
  for (size_t i = 0; i < hs.size(); ++i) {
    Rat slack_i = hs[i].rhs - dot(hs[i].normal, interior);
    if (slack_i <= 0) throw std::invalid_argument("interior point is not interior");
    // Cheap test: the foot of the perpendicular from `interior` often lies in
    // the relative interior of the facet.
    Vec foot = vec_add(interior, vec_scale(slack_i / dot(hs[i].normal, hs[i].normal),
                                           hs[i].normal));
    bool foot_ok = true;
    for (size_t j = 0; j < hs.size(); ++j) {
      if (j == i) continue;
      if (dot(hs[j].normal, foot) >= hs[j].rhs) {
        foot_ok = false;
        break;
      }
    }
    if (foot_ok) {
      facets.push_back((int)i);
      continue;
    }
    // Full test: maximize the margin t with x pinned to the hyperplane.
    // Variables (x, t): <x,n_j> + t <= rhs_j (j != i), <x,n_i> = rhs_i, t <= 1.
    Mat a;
    Vec b, c(n + 1, Rat(0));
    c[n] = 1;
    for (size_t j = 0; j < hs.size(); ++j) {
      Vec row = hs[j].normal;
      row.push_back(j == i ? Rat(0) : Rat(1));
      a.push_back(std::move(row));
      b.push_back(hs[j].rhs);
    }
    {
      Vec row = hs[i].normal;
      for (Rat& x : row) x = -x;
      row.push_back(Rat(0));
      a.push_back(std::move(row));
      b.push_back(-hs[i].rhs);
    }
    {
      Vec row(n + 1, Rat(0));
      row[n] = 1;
      a.push_back(std::move(row));
      b.push_back(Rat(1));
    }
    LPResult r = lp_maximize(a, b, c);
    if (r.status == LPStatus::Optimal && r.value > 0) facets.push_back((int)i);
  }
  return facets;
}

}  // namespace ncp
