#include "alexpoly/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace alexpoly {

void LaurentPoly::set(long e, const Rat& c) {
  if (c == 0) {
    c_.erase(e);
  } else {
    c_[e] = c;
  }
}

LaurentPoly LaurentPoly::term(const Rat& c, long e) {
  LaurentPoly p;
  p.set(e, c);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(long lo, const std::vector<Rat>& c) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i) {
    p.set(lo + static_cast<long>(i), c[i]);
  }
  return p;
}

LaurentPoly LaurentPoly::from_int_coeffs(long lo, const std::vector<Int>& c) {
  LaurentPoly p;
  for (size_t i = 0; i < c.size(); ++i) {
    p.set(lo + static_cast<long>(i), Rat(c[i]));
  }
  return p;
}

long LaurentPoly::lo() const {
  if (is_zero()) throw Error("zero polynomial has no lowest exponent");
  return c_.begin()->first;
}

long LaurentPoly::hi() const {
  if (is_zero()) throw Error("zero polynomial has no highest exponent");
  return c_.rbegin()->first;
}

long LaurentPoly::width() const {
  if (is_zero()) throw Error("zero polynomial has no width");
  return hi() - lo();
}

Rat LaurentPoly::coeff(long e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rat(0) : it->second;
}

bool LaurentPoly::is_integer() const {
  for (const auto& [e, c] : c_) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.c_) r.set(e, r.coeff(e) + c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.c_) r.set(e, r.coeff(e) - c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : c_) {
    for (const auto& [e2, c2] : o.c_) {
      long e = e1 + e2;
      r.set(e, r.coeff(e) + c1 * c2);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(long e) const {
  LaurentPoly r;
  for (const auto& [k, c] : c_) r.c_[k + e] = c;
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rat& s) const {
  LaurentPoly r;
  if (s == 0) return r;
  for (const auto& [k, c] : c_) r.c_[k] = c * s;
  return r;
}

LaurentPoly LaurentPoly::reciprocal() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) {
    if (e != 0) r.set(e - 1, c * Rat(e));
  }
  return r;
}

Rat LaurentPoly::evaluate(const Rat& x) const {
  if (x == 0) throw Error("cannot evaluate at 0: negative exponents");
  Rat inv = 1 / x;
  Rat sum = 0;
  for (const auto& [e, c] : c_) {
    Rat p = 1;
    Rat base = e >= 0 ? x : inv;
    for (long i = 0; i < std::abs(e); ++i) p *= base;
    sum += c * p;
  }
  return sum;
}

namespace {

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

}  // namespace

std::string LaurentPoly::to_literal() const {
  if (is_zero()) return "[0; 0]";
  std::ostringstream os;
  long l = lo(), h = hi();
  os << "[" << l << ";";
  for (long e = l; e <= h; ++e) {
    os << (e == l ? " " : ", ") << rat_to_string(coeff(e));
  }
  os << "]";
  return os.str();
}

std::string LaurentPoly::to_pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    long e = it->first;
    Rat c = it->second;
    bool neg = c < 0;
    Rat mag = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit_coeff = (mag == 1) && e != 0;
    if (!unit_coeff) os << rat_to_string(mag);
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

Int content_of(const std::vector<Int>& c) {
  Int g = 0;
  for (const Int& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

}  // namespace

PrimitivePoly PrimitivePoly::from_canonical_coeffs(std::vector<Int> c) {
  if (c.empty() || c.front() == 0 || c.back() <= 0) {
    throw Error("not a canonical primitive coefficient vector");
  }
  if (content_of(c) != 1) throw Error("coefficients have nontrivial content");
  PrimitivePoly p;
  p.lo_ = 0;
  p.c_ = std::move(c);
  return p;
}

bool PrimitivePoly::is_canonical() const {
  return lo_ == 0 && !c_.empty() && c_.front() != 0 && c_.back() > 0 &&
         content_of(c_) == 1;
}

LaurentPoly PrimitivePoly::to_laurent() const {
  return LaurentPoly::from_int_coeffs(lo_, c_);
}

bool PrimitivePoly::operator<(const PrimitivePoly& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return lo_ < o.lo_;
}

std::pair<PrimitivePoly, Unit> normalize_primitive(const LaurentPoly& p) {
  if (p.is_zero()) throw Error("zero polynomial has no primitive form");
  long lo = p.lo();
  // Clear denominators.
  Int den = 1;
  for (const auto& [e, c] : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Int> c(static_cast<size_t>(p.width()) + 1, Int(0));
  for (const auto& [e, co] : p.terms()) {
    Rat scaled = co * Rat(den);
    c[static_cast<size_t>(e - lo)] = scaled.get_num();
  }
  Int g = content_of(c);
  for (Int& x : c) x /= g;
  bool negate = c.back() < 0;
  if (negate) {
    for (Int& x : c) x = -x;
  }
  PrimitivePoly prim;
  prim.lo_ = 0;
  prim.c_ = std::move(c);
  Unit u;
  u.shift = lo;
  u.scale = Rat(g) / Rat(den);
  if (negate) u.scale = -u.scale;
  return {prim, u};
}

PrimitivePoly primitive_part(const LaurentPoly& p) {
  return normalize_primitive(p).first;
}

bool similar(const LaurentPoly& a, const LaurentPoly& b, Ring ring) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  auto [pa, ua] = normalize_primitive(a);
  auto [pb, ub] = normalize_primitive(b);
  if (!(pa == pb)) return false;
  if (ring == Ring::Gamma) return true;
  Rat ratio = ua.scale / ub.scale;
  return ratio == 1 || ratio == -1;
}

bool similar(const PrimitivePoly& a, const PrimitivePoly& b, Ring ring) {
  return similar(a.to_laurent(), b.to_laurent(), ring);
}

bool lambda_unit_ratio(const LaurentPoly& a, const LaurentPoly& b) {
  return similar(a, b, Ring::Lambda);
}

std::pair<LaurentPoly, LaurentPoly> divide_rem(const LaurentPoly& a,
                                               const LaurentPoly& b) {
  if (b.is_zero()) throw Error("division by zero polynomial");
  if (a.is_zero()) return {LaurentPoly::zero(), LaurentPoly::zero()};
  // Shift both to ordinary polynomials with nonzero constant term; t is a
  // unit so the shift is absorbed into the quotient.
  long la = a.lo(), lb = b.lo();
  LaurentPoly A = a.shifted(-la);
  LaurentPoly B = b.shifted(-lb);
  LaurentPoly q;
  LaurentPoly r = A;
  long degB = B.hi();
  Rat leadB = B.coeff(degB);
  while (!r.is_zero() && r.hi() >= degB) {
    long d = r.hi() - degB;
    Rat f = r.coeff(r.hi()) / leadB;
    LaurentPoly m = LaurentPoly::term(f, d);
    q += m;
    r -= m * B;
  }
  // a = q' b + r' with q' = t^(la-lb) q, r' = t^la r.
  return {q.shifted(la - lb), r.shifted(la)};
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& a,
                                      const LaurentPoly& b) {
  auto [q, r] = divide_rem(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divide_rem(a, b);
  if (!r.is_zero()) {
    throw Error("not divisible: remainder " + r.to_literal());
  }
  return q;
}

PrimitivePoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) {
    throw Error("gcd of two zero polynomials is undefined");
  }
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  LaurentPoly x = a, y = b;
  while (!y.is_zero()) {
    LaurentPoly r = divide_rem(x, y).second;
    x = y;
    y = r;
  }
  return primitive_part(x);
}

PrimitivePoly poly_gcd(const PrimitivePoly& a, const PrimitivePoly& b) {
  return poly_gcd(a.to_laurent(), b.to_laurent());
}

PrimitivePoly divide_class(const PrimitivePoly& a, const PrimitivePoly& b) {
  return primitive_part(divide_exact(a.to_laurent(), b.to_laurent()));
}

PrimitivePoly mul_class(const PrimitivePoly& a, const PrimitivePoly& b) {
  return primitive_part(a.to_laurent() * b.to_laurent());
}

PrimitivePoly pow_class(const PrimitivePoly& a, long e) {
  if (e < 0) throw Error("negative power of a polynomial class");
  PrimitivePoly r = PrimitivePoly::one();
  for (long i = 0; i < e; ++i) r = mul_class(r, a);
  return r;
}

PrimitivePoly reciprocal_class(const PrimitivePoly& a) {
  return primitive_part(a.to_laurent().reciprocal());
}

PrimitivePoly normalize_symmetric(const PrimitivePoly& c) {
  LaurentPoly l = c.to_laurent();
  if (!similar(l, l.reciprocal(), Ring::Lambda)) {
    throw Error("normalize_symmetric: not self-reciprocal in Lambda");
  }
  Rat v1 = l.evaluate(1);
  if (v1 != 1 && v1 != -1) {
    throw Error("normalize_symmetric: value at 1 is not +-1");
  }
  long w = c.width();
  if (w % 2 != 0) {
    throw Error("normalize_symmetric: odd-width self-reciprocal class");
  }
  // Center the exponents at -w/2 .. w/2; self-reciprocity up to a unit plus
  // c(1) != 0 forces literal symmetry of the centered form.
  PrimitivePoly r = c;
  r.lo_ = -w / 2;
  if (r.to_laurent().evaluate(1) == -1) {
    for (Int& x : r.c_) x = -x;
  }
  return r;
}

LaurentPoly t_minus_one() {
  return LaurentPoly::from_int_coeffs(0, {Int(-1), Int(1)});
}

PrimitivePoly t_minus_one_class() {
  return PrimitivePoly::from_canonical_coeffs({Int(-1), Int(1)});
}

PrimitivePoly t_minus_one_pow(long e) {
  return pow_class(t_minus_one_class(), e);
}

std::pair<long, PrimitivePoly> strip_t_minus_one(const PrimitivePoly& p) {
  long k = 0;
  LaurentPoly cur = p.to_laurent();
  LaurentPoly tm1 = t_minus_one();
  while (true) {
    auto q = try_divide(cur, tm1);
    if (!q) break;
    cur = *q;
    ++k;
  }
  return {k, primitive_part(cur)};
}

}  // namespace alexpoly
