#include "gkz/intlinalg.hpp"

#include <algorithm>
#include <utility>

namespace gkz {

IntMat::IntMat(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0)
    throw Error(ErrorCode::internal, "negative matrix dimension");
  data_.assign(std::size_t(rows) * std::size_t(cols), Int(0));
}

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows) {
  if (rows.empty()) return IntMat(0, 0);
  IntMat m(int(rows.size()), int(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (int(rows[i].size()) != m.cols())
      throw Error(ErrorCode::internal, "ragged rows in matrix construction");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntVec IntMat::row(int i) const {
  IntVec r(cols_);
  for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
  return r;
}

IntMat IntMat::transposed() const {
  IntMat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

void IntMat::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMat::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
}

void IntMat::addmul_row(int dst, int src, const Int& q) {
  if (sgn(q) == 0) return;
  for (int j = 0; j < cols_; ++j) at(dst, j) += q * at(src, j);
}

void IntMat::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMat::addmul_col(int dst, int src, const Int& q) {
  if (sgn(q) == 0) return;
  for (int i = 0; i < rows_; ++i) at(i, dst) += q * at(i, src);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::internal, "matrix product shape mismatch");
  IntMat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a.at(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

IntVec matvec(const IntMat& a, const IntVec& x) {
  if (a.cols() != int(x.size()))
    throw Error(ErrorCode::internal, "matvec shape mismatch");
  IntVec y(a.rows(), Int(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::internal, "dot product length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

PrimitivePart make_primitive(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (sgn(g) == 0) return {IntVec(v.size(), Int(0)), Int(0)};
  IntVec p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return {std::move(p), g};
}

namespace {

int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// Truncated quotient, matching mpz_tdiv_q.
Int tdiv(const Int& a, const Int& b) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& m) {
  IntMat h = m;
  IntMat u = IntMat::identity(m.rows());
  const int r = m.rows(), c = m.cols();
  int pivot_row = 0;
  for (int col = 0; col < c && pivot_row < r; ++col) {
    // Repeatedly pull the smallest nonzero entry up and reduce the rest.
    for (;;) {
      int best = -1;
      for (int i = pivot_row; i < r; ++i) {
        if (sgn(h.at(i, col)) == 0) continue;
        if (best < 0 || cmp_abs(h.at(i, col), h.at(best, col)) < 0) best = i;
      }
      if (best < 0) break;
      h.swap_rows(pivot_row, best);
      u.swap_rows(pivot_row, best);
      bool clean = true;
      for (int i = pivot_row + 1; i < r; ++i) {
        if (sgn(h.at(i, col)) == 0) continue;
        Int q = -tdiv(h.at(i, col), h.at(pivot_row, col));
        h.addmul_row(i, pivot_row, q);
        u.addmul_row(i, pivot_row, q);
        if (sgn(h.at(i, col)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(h.at(pivot_row, col)) == 0) continue;  // column had no pivot
    if (sgn(h.at(pivot_row, col)) < 0) {
      h.negate_row(pivot_row);
      u.negate_row(pivot_row);
    }
    for (int i = 0; i < pivot_row; ++i) {
      Int q = -fdiv(h.at(i, col), h.at(pivot_row, col));
      h.addmul_row(i, pivot_row, q);
      u.addmul_row(i, pivot_row, q);
    }
    ++pivot_row;
  }
  return {std::move(h), std::move(u)};
}

SnfResult smith_normal_form(const IntMat& m) {
  IntMat s = m;
  IntMat u = IntMat::identity(m.rows());
  IntMat v = IntMat::identity(m.cols());
  const int r = m.rows(), c = m.cols();
  const int steps = std::min(r, c);
  for (int t = 0; t < steps; ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < r; ++i)
        for (int j = t; j < c; ++j) {
          if (sgn(s.at(i, j)) == 0) continue;
          if (pi < 0 || cmp_abs(s.at(i, j), s.at(pi, pj)) < 0) {
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        // remaining submatrix is zero; diagonal is complete
        return {std::move(s), std::move(u), std::move(v)};
      }
      s.swap_rows(t, pi);
      u.swap_rows(t, pi);
      s.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (int i = t + 1; i < r; ++i) {
        if (sgn(s.at(i, t)) == 0) continue;
        Int q = -tdiv(s.at(i, t), s.at(t, t));
        s.addmul_row(i, t, q);
        u.addmul_row(i, t, q);
        if (sgn(s.at(i, t)) != 0) clean = false;
      }
      for (int j = t + 1; j < c; ++j) {
        if (sgn(s.at(t, j)) == 0) continue;
        Int q = -tdiv(s.at(t, j), s.at(t, t));
        s.addmul_col(j, t, q);
        v.addmul_col(j, t, q);
        if (sgn(s.at(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain before moving on.
      bool fixed = false;
      for (int i = t + 1; i < r && !fixed; ++i)
        for (int j = t + 1; j < c && !fixed; ++j) {
          if (!mpz_divisible_p(s.at(i, j).get_mpz_t(), s.at(t, t).get_mpz_t())) {
            s.addmul_row(t, i, Int(1));
            u.addmul_row(t, i, Int(1));
            fixed = true;
          }
        }
      if (fixed) continue;

      if (sgn(s.at(t, t)) < 0) {
        s.negate_row(t);
        u.negate_row(t);
      }
      break;
    }
  }
  return {std::move(s), std::move(u), std::move(v)};
}

int lattice_rank(const IntMat& m) {
  IntMat h = hermite_normal_form(m).h;
  int rank = 0;
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j)
      if (sgn(h.at(i, j)) != 0) {
        ++rank;
        break;
      }
  return rank;
}

Int determinant(const IntMat& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::internal, "determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (sgn(a.at(i, k)) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  Int d = a.at(n - 1, n - 1);
  return sign < 0 ? Int(-d) : d;
}

IntMat unimodular_inverse(const IntMat& m) {
  if (m.rows() != m.cols())
    throw Error(ErrorCode::internal, "inverse of non-square matrix");
  const int n = m.rows();
  Int det = determinant(m);
  if (cmp_abs(det, Int(1)) != 0)
    throw Error(ErrorCode::internal, "matrix is not unimodular");
  IntMat inv(n, n);
  IntMat minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int a = 0, mi = 0; a < n; ++a) {
        if (a == j) continue;
        for (int b = 0, mj = 0; b < n; ++b) {
          if (b == i) continue;
          minor.at(mi, mj) = m.at(a, b);
          ++mj;
        }
        ++mi;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      inv.at(i, j) = det * cof;  // det is +-1
    }
  return inv;
}

Int affine_lattice_index(const std::vector<IntVec>& points) {
  if (points.empty())
    throw Error(ErrorCode::internal, "affine lattice index of empty set");
  const int d = int(points[0].size());
  if (d == 0) return 1;
  std::vector<IntVec> diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t j = 1; j < points.size(); ++j) {
    IntVec row(d);
    for (int k = 0; k < d; ++k) row[k] = points[j][k] - points[0][k];
    diffs.push_back(std::move(row));
  }
  if (int(diffs.size()) < d) return 0;
  IntMat s = smith_normal_form(IntMat::from_rows(diffs)).s;
  Int index = 1;
  for (int k = 0; k < d; ++k) {
    if (sgn(s.at(k, k)) == 0) return 0;
    index *= s.at(k, k);
  }
  return index;
}

std::vector<IntVec> kernel_basis(const IntVec& primitive_normal) {
  const int d = int(primitive_normal.size());
  IntMat col(d, 1);
  for (int i = 0; i < d; ++i) col.at(i, 0) = primitive_normal[i];
  HnfResult hnf = hermite_normal_form(col);
  if (hnf.h.at(0, 0) != 1)
    throw Error(ErrorCode::internal, "kernel_basis requires a primitive vector");
  // u * normal == e1, so rows 1..d-1 of u span the kernel lattice.
  std::vector<IntVec> basis;
  basis.reserve(d - 1);
  for (int i = 1; i < d; ++i) basis.push_back(hnf.u.row(i));
  return basis;
}

}  // namespace gkz
