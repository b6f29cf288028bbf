// Exact Laurent polynomial arithmetic over Q and primitive integer forms.
//
// Elements of Q[t,1/t] are sparse maps exponent -> nonzero rational.
// A PrimitivePoly is the canonical integer representative of a similarity
// class: lowest exponent shifted to 0, coefficient gcd 1, positive leading
// coefficient.  All similarity questions reduce to structural equality of
// these canonical forms.

#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace alexpoly {

using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return term(1, 0); }
  static LaurentPoly t() { return term(1, 1); }
  static LaurentPoly term(const Rat& c, long e);
  // c[i] is the coefficient of t^(lo+i).
  static LaurentPoly from_coeffs(long lo, const std::vector<Rat>& c);
  static LaurentPoly from_int_coeffs(long lo, const std::vector<Int>& c);
  static LaurentPoly constant(const Rat& c) { return term(c, 0); }

  bool is_zero() const { return c_.empty(); }
  long lo() const;
  long hi() const;
  long width() const;  // hi - lo; error on zero
  Rat coeff(long e) const;
  const std::map<long, Rat>& terms() const { return c_; }
  bool is_integer() const;  // every coefficient has denominator 1

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return c_ != o.c_; }

  LaurentPoly shifted(long e) const;  // multiply by t^e
  LaurentPoly scaled(const Rat& s) const;
  LaurentPoly reciprocal() const;  // t -> 1/t
  LaurentPoly derivative() const;
  Rat evaluate(const Rat& x) const;  // x != 0

  // Literal form [lo; c0, c1, ...] with rationals as num/den.
  std::string to_literal() const;
  std::string to_pretty() const;  // human form, e.g. "t^2 - 3t + 1"

 private:
  void set(long e, const Rat& c);
  std::map<long, Rat> c_;
};

// scale * t^shift, the general unit of Q[t,1/t].
struct Unit {
  Rat scale{1};
  long shift{0};
};

class PrimitivePoly {
 public:
  PrimitivePoly() : lo_(0), c_{Int(1)} {}  // the unit 1

  static PrimitivePoly one() { return PrimitivePoly(); }
  // Asserts canonical-form invariants (content 1, ends nonzero, lead > 0).
  static PrimitivePoly from_canonical_coeffs(std::vector<Int> c);

  long lo() const { return lo_; }
  const std::vector<Int>& coeffs() const { return c_; }
  long width() const { return static_cast<long>(c_.size()) - 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1 && lo_ == 0; }
  bool is_canonical() const;

  LaurentPoly to_laurent() const;
  Rat evaluate(const Rat& x) const { return to_laurent().evaluate(x); }

  bool operator==(const PrimitivePoly& o) const {
    return lo_ == o.lo_ && c_ == o.c_;
  }
  bool operator!=(const PrimitivePoly& o) const { return !(*this == o); }
  // Total order for canonical sorting and map keys: width, then
  // coefficients from the top, then lo.
  bool operator<(const PrimitivePoly& o) const;

  std::string to_literal() const { return to_laurent().to_literal(); }
  std::string to_pretty() const { return to_laurent().to_pretty(); }

 private:
  friend std::pair<PrimitivePoly, Unit> normalize_primitive(const LaurentPoly&);
  friend PrimitivePoly normalize_symmetric(const PrimitivePoly&);
  long lo_;
  std::vector<Int> c_;  // constant term first; front() != 0; gcd 1
};

enum class Ring { Gamma, Lambda };

// p = unit.scale * t^unit.shift * primitive.  Error on the zero polynomial.
std::pair<PrimitivePoly, Unit> normalize_primitive(const LaurentPoly& p);
PrimitivePoly primitive_part(const LaurentPoly& p);

// a ~ b up to a unit of the chosen ring (q t^k for Gamma, +-t^k for Lambda).
bool similar(const LaurentPoly& a, const LaurentPoly& b, Ring ring);
bool similar(const PrimitivePoly& a, const PrimitivePoly& b, Ring ring);
// Exact equality up to +-t^k (used where even Lambda-primitive scaling
// must be trivial, e.g. alternating products of rational functions).
bool lambda_unit_ratio(const LaurentPoly& a, const LaurentPoly& b);

// Canonical primitive gcd; error when both arguments are zero.
PrimitivePoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
PrimitivePoly poly_gcd(const PrimitivePoly& a, const PrimitivePoly& b);

// Quotient q with a = q*b, or error carrying the nonzero remainder.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
std::optional<LaurentPoly> try_divide(const LaurentPoly& a,
                                      const LaurentPoly& b);
// Division with remainder: a = q*b + r with r = 0 or width(r) < width(b).
std::pair<LaurentPoly, LaurentPoly> divide_rem(const LaurentPoly& a,
                                               const LaurentPoly& b);

// Division of similarity classes: canonical primitive of a/b, error when
// b does not divide a in Q[t,1/t].
PrimitivePoly divide_class(const PrimitivePoly& a, const PrimitivePoly& b);
PrimitivePoly mul_class(const PrimitivePoly& a, const PrimitivePoly& b);
PrimitivePoly pow_class(const PrimitivePoly& a, long e);
PrimitivePoly reciprocal_class(const PrimitivePoly& a);

// The member of the Lambda-similarity class with c(t)=c(1/t) and c(1)=1.
// Preconditions (checked): c ~ c(1/t) in Lambda and c(1) = +-1.
// Odd width cannot satisfy c(t)=c(1/t) literally and is rejected.
PrimitivePoly normalize_symmetric(const PrimitivePoly& c);

// t - 1 and friends.
LaurentPoly t_minus_one();
PrimitivePoly t_minus_one_class();
// (t-1)^e as a primitive class.
PrimitivePoly t_minus_one_pow(long e);
// Splits p ~ (t-1)^k * rest with t-1 not dividing rest; returns {k, rest}.
std::pair<long, PrimitivePoly> strip_t_minus_one(const PrimitivePoly& p);

}  // namespace alexpoly
