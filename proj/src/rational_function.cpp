#include "alexpoly/rational_function.hpp"

#include <sstream>

namespace alexpoly {

RationalFunction::RationalFunction(const LaurentPoly& num,
                                   const LaurentPoly& den) {
  if (den.is_zero()) throw Error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = den_ = PrimitivePoly::one();
    scale_ = 0;
    shift_ = 0;
    return;
  }
  auto [pn, un] = normalize_primitive(num);
  auto [pd, ud] = normalize_primitive(den);
  PrimitivePoly g = poly_gcd(pn, pd);
  if (!g.is_one()) {
    pn = divide_class(pn, g);
    pd = divide_class(pd, g);
  }
  num_ = pn;
  den_ = pd;
  scale_ = un.scale / ud.scale;
  shift_ = un.shift - ud.shift;
}

RationalFunction RationalFunction::from_poly(const LaurentPoly& p) {
  return RationalFunction(p, LaurentPoly::one());
}

LaurentPoly RationalFunction::num_laurent() const {
  if (is_zero()) return LaurentPoly::zero();
  return num_.to_laurent().scaled(scale_).shifted(shift_);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(
      num_laurent() * o.den_laurent() + o.num_laurent() * den_laurent(),
      den_laurent() * o.den_laurent());
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.scale_ = -r.scale_;
  return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_laurent() * o.num_laurent(),
                          den_laurent() * o.den_laurent());
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw Error("division by zero rational function");
  return RationalFunction(num_laurent() * o.den_laurent(),
                          den_laurent() * o.num_laurent());
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_laurent() * o.den_laurent() == o.num_laurent() * den_laurent();
}

RationalFunction RationalFunction::reciprocal_t() const {
  if (is_zero()) return zero();
  return RationalFunction(num_laurent().reciprocal(),
                          den_laurent().reciprocal());
}

std::string RationalFunction::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "(" << num_laurent().to_pretty() << ")";
  if (!den_.is_one()) os << "/(" << den_.to_pretty() << ")";
  return os.str();
}

}  // namespace alexpoly
