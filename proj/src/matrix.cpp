#include "alexpoly/matrix.hpp"

#include <algorithm>

namespace alexpoly {

GammaMatrix GammaMatrix::identity(int n) {
  GammaMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

GammaMatrix GammaMatrix::operator*(const GammaMatrix& o) const {
  if (cols_ != o.rows_) throw Error("matrix dimension mismatch");
  GammaMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < o.cols_; ++j) {
      LaurentPoly s;
      for (int k = 0; k < cols_; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

GammaMatrix GammaMatrix::transpose() const {
  GammaMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

LaurentPoly GammaMatrix::det() const {
  if (rows_ != cols_) throw Error("determinant of non-square matrix");
  int n = rows_;
  if (n == 0) return LaurentPoly::one();
  if (n == 1) return at(0, 0);
  LaurentPoly sum;
  for (int j = 0; j < n; ++j) {
    if (at(0, j).is_zero()) continue;
    GammaMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cc++) = at(i, k);
      }
    }
    LaurentPoly term = at(0, j) * minor.det();
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

void GammaMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void GammaMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void GammaMatrix::add_row_multiple(int dst, int src, const LaurentPoly& f) {
  for (int j = 0; j < cols_; ++j) at(dst, j) += f * at(src, j);
}

void GammaMatrix::add_col_multiple(int dst, int src, const LaurentPoly& f) {
  for (int i = 0; i < rows_; ++i) at(i, dst) += f * at(i, src);
}

void GammaMatrix::scale_row(int i, const Rat& s, long shift) {
  for (int j = 0; j < cols_; ++j) at(i, j) = at(i, j).scaled(s).shifted(shift);
}

bool is_gamma_unit(const LaurentPoly& p) {
  return !p.is_zero() && p.width() == 0;
}

namespace {

// Pivot of minimal width in the lower-right submatrix; ties broken by
// lowest (row, col).
bool find_pivot(const GammaMatrix& d, int s, int& pi, int& pj) {
  bool found = false;
  long best = 0;
  for (int i = s; i < d.rows(); ++i) {
    for (int j = s; j < d.cols(); ++j) {
      if (d.at(i, j).is_zero()) continue;
      long w = d.at(i, j).width();
      if (!found || w < best) {
        found = true;
        best = w;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

bool row_col_clear(const GammaMatrix& d, int s) {
  for (int i = s + 1; i < d.rows(); ++i) {
    if (!d.at(i, s).is_zero()) return false;
  }
  for (int j = s + 1; j < d.cols(); ++j) {
    if (!d.at(s, j).is_zero()) return false;
  }
  return true;
}

}  // namespace

SnfResult smith_normal_form(const GammaMatrix& a) {
  SnfResult r;
  r.u = GammaMatrix::identity(a.rows());
  r.v = GammaMatrix::identity(a.cols());
  r.d = a;
  GammaMatrix& d = r.d;
  int nmin = std::min(a.rows(), a.cols());
  for (int s = 0; s < nmin; ++s) {
    int pi, pj;
    if (!find_pivot(d, s, pi, pj)) break;  // the rest is zero
    d.swap_rows(s, pi);
    r.u.swap_rows(s, pi);
    d.swap_cols(s, pj);
    r.v.swap_cols(s, pj);
    while (true) {
      // Reduce the pivot column and row by Euclidean division; remainders
      // have strictly smaller width, so re-pivoting terminates.
      for (int i = s + 1; i < d.rows(); ++i) {
        if (d.at(i, s).is_zero()) continue;
        auto [q, rem] = divide_rem(d.at(i, s), d.at(s, s));
        d.add_row_multiple(i, s, -q);
        r.u.add_row_multiple(i, s, -q);
      }
      for (int j = s + 1; j < d.cols(); ++j) {
        if (d.at(s, j).is_zero()) continue;
        auto [q, rem] = divide_rem(d.at(s, j), d.at(s, s));
        d.add_col_multiple(j, s, -q);
        r.v.add_col_multiple(j, s, -q);
      }
      if (!row_col_clear(d, s)) {
        int pi2, pj2;
        find_pivot(d, s, pi2, pj2);
        d.swap_rows(s, pi2);
        r.u.swap_rows(s, pi2);
        d.swap_cols(s, pj2);
        r.v.swap_cols(s, pj2);
        continue;
      }
      // Divisibility fix-up: the pivot must divide the whole submatrix.
      bool fixed = true;
      for (int i = s + 1; i < d.rows() && fixed; ++i) {
        for (int j = s + 1; j < d.cols() && fixed; ++j) {
          if (d.at(i, j).is_zero()) continue;
          if (!try_divide(d.at(i, j), d.at(s, s))) {
            d.add_row_multiple(s, i, LaurentPoly::one());
            r.u.add_row_multiple(s, i, LaurentPoly::one());
            fixed = false;
          }
        }
      }
      if (fixed) break;
    }
  }
  // Normalize diagonal entries by Lambda-units only (shift the lowest
  // exponent to 0, make the leading coefficient positive).  Every row
  // operation so far was a swap or a shear, so det U and det V stay +-1;
  // these scalings keep them +-t^k, and the diagonal product stays
  // Lambda-similar to det A.
  for (int s = 0; s < nmin; ++s) {
    if (d.at(s, s).is_zero()) continue;
    long shift = -d.at(s, s).lo();
    Rat sign = d.at(s, s).coeff(d.at(s, s).hi()) < 0 ? -1 : 1;
    d.scale_row(s, sign, shift);
    r.u.scale_row(s, sign, shift);
  }
  return r;
}

int matrix_rank(const GammaMatrix& a) {
  SnfResult r = smith_normal_form(a);
  int rank = 0;
  int nmin = std::min(a.rows(), a.cols());
  for (int i = 0; i < nmin; ++i) {
    if (!r.d.at(i, i).is_zero()) ++rank;
  }
  return rank;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diag(const std::vector<Int>& d) {
  IntMatrix m(static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw Error("matrix dimension mismatch");
  IntMatrix r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      Int s = 0;
      for (int k = 0; k < n_; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  }
  return r;
}

Int IntMatrix::det() const {
  if (n_ == 0) return 1;
  if (n_ == 1) return at(0, 0);
  Int sum = 0;
  for (int j = 0; j < n_; ++j) {
    if (at(0, j) == 0) continue;
    IntMatrix minor(n_ - 1);
    for (int i = 1; i < n_; ++i) {
      int cc = 0;
      for (int k = 0; k < n_; ++k) {
        if (k == j) continue;
        minor.at(i - 1, cc++) = at(i, k);
      }
    }
    Int term = at(0, j) * minor.det();
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

GammaMatrix IntMatrix::to_gamma() const {
  GammaMatrix r(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) != 0) r.at(i, j) = LaurentPoly::term(Rat(at(i, j)), 0);
    }
  }
  return r;
}

RationalFunction RationalFunctionMatrix::det() const {
  // Fraction-free enough at these sizes; straightforward elimination.
  RationalFunctionMatrix m = *this;
  RationalFunction result = RationalFunction::one();
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int i = c; i < n_; ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return RationalFunction::zero();
    if (pivot != c) {
      for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      result = -result;
    }
    result = result * m.at(c, c);
    for (int i = c + 1; i < n_; ++i) {
      if (m.at(i, c).is_zero()) continue;
      RationalFunction f = m.at(i, c) / m.at(c, c);
      for (int j = c; j < n_; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(c, j);
      }
    }
  }
  return result;
}

RationalFunctionMatrix RationalFunctionMatrix::inverse() const {
  RationalFunctionMatrix m = *this;
  RationalFunctionMatrix inv(n_);
  for (int i = 0; i < n_; ++i) inv.at(i, i) = RationalFunction::one();
  for (int c = 0; c < n_; ++c) {
    int pivot = -1;
    for (int i = c; i < n_; ++i) {
      if (!m.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) throw Error("singular matrix has no inverse");
    if (pivot != c) {
      for (int j = 0; j < n_; ++j) {
        std::swap(m.at(pivot, j), m.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    }
    RationalFunction p = m.at(c, c);
    for (int j = 0; j < n_; ++j) {
      m.at(c, j) = m.at(c, j) / p;
      inv.at(c, j) = inv.at(c, j) / p;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == c || m.at(i, c).is_zero()) continue;
      RationalFunction f = m.at(i, c);
      for (int j = 0; j < n_; ++j) {
        m.at(i, j) = m.at(i, j) - f * m.at(c, j);
        inv.at(i, j) = inv.at(i, j) - f * inv.at(c, j);
      }
    }
  }
  return inv;
}

RationalFunctionMatrix RationalFunctionMatrix::transpose() const {
  RationalFunctionMatrix r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  }
  return r;
}

RationalFunctionMatrix RationalFunctionMatrix::scaled(
    const RationalFunction& f) const {
  RationalFunctionMatrix r(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j) * f;
  }
  return r;
}

bool RationalFunctionMatrix::operator==(const RationalFunctionMatrix& o) const {
  if (n_ != o.n_) return false;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!(at(i, j) == o.at(i, j))) return false;
    }
  }
  return true;
}

RationalFunctionMatrix to_rational(const GammaMatrix& m) {
  if (m.rows() != m.cols()) throw Error("square matrix expected");
  RationalFunctionMatrix r(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      r.at(i, j) = RationalFunction::from_poly(m.at(i, j));
    }
  }
  return r;
}

}  // namespace alexpoly
