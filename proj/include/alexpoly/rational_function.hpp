// Exact elements of Q(t) presented as scale * t^shift * num/den with num and
// den coprime canonical primitives.  Used for Blanchfield pairing matrices
// and discriminants; equality is decided by cross-multiplication.

#pragma once

#include "alexpoly/laurent.hpp"

namespace alexpoly {

class RationalFunction {
 public:
  RationalFunction() : num_(PrimitivePoly::one()), den_(PrimitivePoly::one()) {
    scale_ = 0;
  }
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);
  static RationalFunction from_poly(const LaurentPoly& p);
  static RationalFunction one() { return from_poly(LaurentPoly::one()); }
  static RationalFunction zero() { return RationalFunction(); }

  bool is_zero() const { return scale_ == 0; }
  const PrimitivePoly& num() const { return num_; }
  const PrimitivePoly& den() const { return den_; }
  const Rat& scale() const { return scale_; }
  long shift() const { return shift_; }

  // Numerator/denominator as plain Laurent polynomials with the unit folded
  // into the numerator.
  LaurentPoly num_laurent() const;
  LaurentPoly den_laurent() const { return den_.to_laurent(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  RationalFunction reciprocal_t() const;  // t -> 1/t
  bool is_polynomial() const { return den_.is_one(); }

  std::string to_string() const;

 private:
  PrimitivePoly num_;  // canonical, lo 0
  PrimitivePoly den_;  // canonical, lo 0
  Rat scale_;          // 0 iff the function is 0
  long shift_ = 0;     // power of t
};

}  // namespace alexpoly
