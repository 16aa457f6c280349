#pragma once

#include <span>
#include <vector>

#include "gkz/rational.hpp"

namespace gkz {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMat {
 public:
  IntMat(int rows, int cols);
  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<IntVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  IntVec row(int i) const;
  IntMat transposed() const;

  void swap_rows(int a, int b);
  void negate_row(int i);
  // row[dst] += q * row[src]
  void addmul_row(int dst, int src, const Int& q);
  void swap_cols(int a, int b);
  // col[dst] += q * col[src]
  void addmul_col(int dst, int src, const Int& q);

  bool operator==(const IntMat& o) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Int> data_;
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntVec matvec(const IntMat& a, const IntVec& x);

Int dot(std::span<const Int> a, std::span<const Int> b);

struct PrimitivePart {
  IntVec primitive;
  Int scale;  // primitive * scale == input; 0 only for the zero vector
};

// Divides out the gcd of the entries, preserving signs.
PrimitivePart make_primitive(const IntVec& v);

struct HnfResult {
  IntMat h;  // row-style Hermite normal form
  IntMat u;  // unimodular, u * m == h
};

// Deterministic pivot choice: smallest nonzero absolute value, ties by
// lowest row index; entries above each pivot reduced into [0, pivot).
HnfResult hermite_normal_form(const IntMat& m);

struct SnfResult {
  IntMat s;  // diagonal, d1 | d2 | ..., entries >= 0
  IntMat u;  // unimodular, u * m * v == s
  IntMat v;
};

SnfResult smith_normal_form(const IntMat& m);

int lattice_rank(const IntMat& m);

// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(const IntMat& m);

// Inverse of a matrix with determinant +-1; integral by construction.
IntMat unimodular_inverse(const IntMat& m);

// Index of the affine lattice spanned by points[j] - points[0] inside Z^D;
// 0 when the differences do not have full rank D.
Int affine_lattice_index(const std::vector<IntVec>& points);

// Basis of {x in Z^D : <u, x> = 0} for primitive u; D-1 vectors.
std::vector<IntVec> kernel_basis(const IntVec& primitive_normal);

}  // namespace gkz
