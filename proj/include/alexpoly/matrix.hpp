// Matrices over Q[t,1/t] with exact Smith normal form, plus plain integer
// matrices for pairing presentations.

#pragma once

#include "alexpoly/laurent.hpp"
#include "alexpoly/rational_function.hpp"

#include <vector>

namespace alexpoly {

class GammaMatrix {
 public:
  GammaMatrix() : rows_(0), cols_(0) {}
  GammaMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  static GammaMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const LaurentPoly& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * cols_ + j];
  }

  GammaMatrix operator*(const GammaMatrix& o) const;
  bool operator==(const GammaMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  GammaMatrix transpose() const;
  LaurentPoly det() const;  // cofactor expansion; square only

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  void add_row_multiple(int dst, int src, const LaurentPoly& f);
  void add_col_multiple(int dst, int src, const LaurentPoly& f);
  void scale_row(int i, const Rat& s, long shift);

 private:
  int rows_, cols_;
  std::vector<LaurentPoly> e_;
};

struct SnfResult {
  GammaMatrix u;  // rows x rows, unit determinant
  GammaMatrix d;  // diagonal, entries canonical primitive, divisibility chain
  GammaMatrix v;  // cols x cols, unit determinant
};

// u * a * v = d exactly.
SnfResult smith_normal_form(const GammaMatrix& a);
int matrix_rank(const GammaMatrix& a);
bool is_gamma_unit(const LaurentPoly& p);

// Square integer matrices (0x0 allowed for the trivial presentation).
class IntMatrix {
 public:
  IntMatrix() : n_(0) {}
  explicit IntMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}
  static IntMatrix identity(int n);
  static IntMatrix diag(const std::vector<Int>& d);

  int size() const { return n_; }
  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * n_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  Int det() const;

  GammaMatrix to_gamma() const;

 private:
  int n_;
  std::vector<Int> e_;
};

// Matrices over Q(t); only what the pairing machinery needs.
class RationalFunctionMatrix {
 public:
  RationalFunctionMatrix() : n_(0) {}
  explicit RationalFunctionMatrix(int n)
      : n_(n), e_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  RationalFunction& at(int i, int j) {
    return e_[static_cast<size_t>(i) * n_ + j];
  }
  const RationalFunction& at(int i, int j) const {
    return e_[static_cast<size_t>(i) * n_ + j];
  }

  RationalFunction det() const;  // Gaussian elimination over Q(t)
  // Inverse; error when singular.
  RationalFunctionMatrix inverse() const;
  RationalFunctionMatrix transpose() const;
  RationalFunctionMatrix scaled(const RationalFunction& f) const;
  bool operator==(const RationalFunctionMatrix& o) const;

 private:
  int n_;
  std::vector<RationalFunction> e_;
};

RationalFunctionMatrix to_rational(const GammaMatrix& m);

}  // namespace alexpoly
