#pragma once

#include <optional>

#include "stratkit/rational.hpp"

namespace stratkit::linalg {

QMat zeros(size_t rows, size_t cols);
QMat identity(size_t n);
QMat transpose(const QMat& a);
QMat mul(const QMat& a, const QMat& b);
QVec mul(const QMat& a, const QVec& x);

struct Rref {
  QMat r;
  std::vector<size_t> pivots;  // pivot column of each non-zero row
};
Rref rref(QMat a);

size_t rank(const QMat& a);
Q det(QMat a);

// Solves a x = b. Returns one solution (free variables set to 0) or nullopt.
std::optional<QVec> solve(const QMat& a, const QVec& b);

std::optional<QMat> inverse(const QMat& a);

// Basis of {x : a x = 0}, one vector per free column.
std::vector<QVec> nullspace(const QMat& a, size_t cols);

// Row Hermite normal form over Z. h = u * a with u unimodular; the non-zero
// rows of h come first.
struct Hnf {
  ZMat h;
  ZMat u;
  size_t rank = 0;
};
Hnf hnf(const ZMat& a);

// Lattice generated by the rows of `gens` (rational). Returns a basis.
std::vector<QVec> lattice_basis(const std::vector<QVec>& gens, size_t dim);

// Integer solution c of sum_j c_j rows[j] = target, if one exists.
std::optional<ZVec> integer_combination(const std::vector<QVec>& rows, const QVec& target);

// Basis (as integer coefficient vectors) of {c in Z^k : sum_j c_j rows[j] = 0}.
std::vector<ZVec> integer_left_kernel(const std::vector<QVec>& rows);

Z lcm_den(const QVec& v);

}  // namespace stratkit::linalg
