#pragma once

#include <cassert>
#include <vector>

#include "ncp/rational.hpp"

namespace ncp {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row major

Vec vec_zero(int n);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rat& c, const Vec& a);
Rat dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& a);

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& a, const Vec& x);
Mat mat_transpose(const Mat& a);
bool mat_is_identity(const Mat& a);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Mat& m);

int rank(Mat m);

// One solution of A x = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);

// Basis of { x : A x = 0 }.
std::vector<Vec> nullspace(const Mat& a);

// Basis (subset of columns, reduced) of the column space of A.
std::vector<Vec> column_space(const Mat& a);

// Independent subset spanning the same space, by Gaussian elimination.
std::vector<Vec> independent_subset(const std::vector<Vec>& vs);

bool in_span(const std::vector<Vec>& basis, const Vec& v);

// Orthogonal projection of p onto span(basis); basis need not be orthogonal.
Vec project_to_span(const std::vector<Vec>& basis, const Vec& p);

// Vectors orthogonal to everything in `vs`, inside ambient dimension n.
std::vector<Vec> orthogonal_complement(const std::vector<Vec>& vs, int n);

}  // namespace ncp
