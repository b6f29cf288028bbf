#include "alexpoly/factor.hpp"

#include <algorithm>
#include <map>

namespace alexpoly {

namespace {

// Divisors of |n| including negatives; n != 0.
std::vector<Int> signed_divisors(const Int& n) {
  Int a = abs(n);
  std::vector<Int> divs;
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d == 0) {
      divs.push_back(d);
      if (d * d != a) divs.push_back(a / d);
    }
  }
  std::sort(divs.begin(), divs.end());
  std::vector<Int> out;
  out.reserve(divs.size() * 2);
  for (const Int& d : divs) {
    out.push_back(d);
    out.push_back(-d);
  }
  return out;
}

// Evaluation for ordinary polynomials (lo >= 0), where x = 0 is fine.
Rat eval_point(const LaurentPoly& p, const Int& x) {
  if (x == 0) return p.coeff(0);
  return p.evaluate(Rat(x));
}

// Lagrange interpolation through (x_i, y_i); exact rationals.
LaurentPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
  LaurentPoly acc;
  size_t n = xs.size();
  for (size_t i = 0; i < n; ++i) {
    LaurentPoly basis = LaurentPoly::one();
    Rat denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis *= LaurentPoly::from_coeffs(0, {Rat(-xs[j]), Rat(1)});
      denom *= Rat(xs[i] - xs[j]);
    }
    acc += basis.scaled(Rat(ys[i]) / denom);
  }
  return acc;
}

bool laurent_is_integral(const LaurentPoly& p) { return p.is_integer(); }

// Strips all rational roots of an ordinary integer polynomial (lo = 0,
// nonzero constant term) and returns the linear factors found.
void strip_rational_roots(LaurentPoly& p, std::vector<PrimitivePoly>& out) {
  bool progress = true;
  while (progress && p.width() >= 1) {
    progress = false;
    Int c0 = p.coeff(p.lo()).get_num();
    Int lead = p.coeff(p.hi()).get_num();
    for (const Int& u : signed_divisors(c0)) {
      bool found = false;
      for (const Int& v : signed_divisors(lead)) {
        if (v <= 0) continue;  // sign already covered by the numerator
        Int g;
        mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        if (g != 1) continue;
        if (p.evaluate(Rat(u) / Rat(v)) == 0) {
          // factor v t - u
          LaurentPoly lin = LaurentPoly::from_coeffs(0, {Rat(-u), Rat(v)});
          p = divide_exact(p, lin);
          out.push_back(primitive_part(lin));
          found = true;
          break;
        }
      }
      if (found) {
        progress = true;
        break;
      }
    }
  }
}

// Kronecker search: returns a nontrivial monic-degree factor of p (integer
// polynomial, squarefree, no rational roots) or nullopt if p is irreducible.
std::optional<LaurentPoly> kronecker_factor(const LaurentPoly& p) {
  long deg = p.width();
  for (long f = 2; f <= deg / 2; ++f) {
    // Evaluation points 0, 1, -1, 2, -2, ...
    std::vector<Int> xs;
    xs.push_back(0);
    for (long i = 1; static_cast<long>(xs.size()) < f + 1; ++i) {
      xs.push_back(i);
      if (static_cast<long>(xs.size()) < f + 1) xs.push_back(-i);
    }
    std::vector<Int> vals;
    vals.reserve(xs.size());
    for (const Int& x : xs) vals.push_back(eval_point(p, x).get_num());
    std::vector<std::vector<Int>> choices;
    for (const Int& v : vals) choices.push_back(signed_divisors(v));
    // Odometer over divisor tuples.  The first coordinate ranges over
    // positive divisors only: a factor is determined up to sign.
    std::vector<size_t> idx(xs.size(), 0);
    while (true) {
      std::vector<Int> ys(xs.size());
      bool skip = false;
      for (size_t i = 0; i < xs.size(); ++i) {
        ys[i] = choices[i][idx[i]];
      }
      if (ys[0] < 0) skip = true;
      if (!skip) {
        LaurentPoly cand = interpolate(xs, ys);
        if (!cand.is_zero() && cand.width() >= 1 &&
            laurent_is_integral(cand)) {
          auto q = try_divide(p, cand);
          if (q) return cand;
        }
      }
      size_t pos = 0;
      while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
    }
  }
  return std::nullopt;
}

void factor_squarefree(const LaurentPoly& p, std::vector<PrimitivePoly>& out) {
  LaurentPoly cur = p;
  std::vector<PrimitivePoly> linear;
  strip_rational_roots(cur, linear);
  for (auto& l : linear) out.push_back(l);
  if (cur.width() == 0) return;
  // No rational roots left; degree <= 3 is now irreducible.
  if (cur.width() <= 3) {
    out.push_back(primitive_part(cur));
    return;
  }
  auto factor = kronecker_factor(cur);
  if (!factor) {
    out.push_back(primitive_part(cur));
    return;
  }
  factor_squarefree(*factor, out);
  factor_squarefree(divide_exact(cur, *factor), out);
}

}  // namespace

std::vector<PrimitivePoly> factor_rational(const PrimitivePoly& p,
                                           int degree_bound) {
  if (p.width() > degree_bound) {
    throw Error("factorization degree bound exceeded (width " +
                std::to_string(p.width()) + " > " +
                std::to_string(degree_bound) + ")");
  }
  std::vector<PrimitivePoly> out;
  if (p.width() == 0) return out;
  // Yun's squarefree decomposition p = prod a_i^i over Q.
  LaurentPoly f = p.to_laurent().shifted(-p.lo());
  LaurentPoly fp = f.derivative();
  LaurentPoly a = poly_gcd(f, fp).to_laurent();
  LaurentPoly b = divide_exact(f, a);
  LaurentPoly c = divide_exact(fp, a);
  LaurentPoly d = c - b.derivative();
  long mult = 1;
  while (b.width() > 0) {
    LaurentPoly g = poly_gcd(b, d).to_laurent();
    if (g.width() > 0) {
      std::vector<PrimitivePoly> factors;
      factor_squarefree(g.shifted(-g.lo()), factors);
      for (const auto& fac : factors) {
        for (long i = 0; i < mult; ++i) out.push_back(fac);
      }
    }
    b = divide_exact(b, g);
    c = divide_exact(d, g);
    d = c - b.derivative();
    ++mult;
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReciprocalSquare is_reciprocal_square(const PrimitivePoly& nu,
                                      const std::optional<PrimitivePoly>& witness,
                                      int degree_bound) {
  ReciprocalSquare res;
  if (witness) {
    LaurentPoly prod = witness->to_laurent() * witness->to_laurent().reciprocal();
    res.ok = similar(prod, nu.to_laurent(), Ring::Lambda);
    if (res.ok) res.witness = *witness;
    return res;
  }
  if (nu.is_one()) {
    res.ok = true;
    res.witness = PrimitivePoly::one();
    return res;
  }
  std::map<PrimitivePoly, long> mult;
  for (const auto& f : factor_rational(nu, degree_bound)) ++mult[f];
  LaurentPoly w = LaurentPoly::one();
  for (auto& [f, m] : mult) {
    if (m == 0) continue;
    PrimitivePoly rec = reciprocal_class(f);
    if (rec == f) {
      if (m % 2 != 0) return res;  // self-reciprocal factor of odd multiplicity
      for (long i = 0; i < m / 2; ++i) w *= f.to_laurent();
    } else {
      auto it = mult.find(rec);
      if (it == mult.end() || it->second != m) return res;
      // Take the smaller member of the pair into the witness.
      const PrimitivePoly& pick = f < rec ? f : rec;
      for (long i = 0; i < m; ++i) w *= pick.to_laurent();
      it->second = 0;
    }
    m = 0;
  }
  res.ok = true;
  res.witness = primitive_part(w);
  return res;
}

}  // namespace alexpoly
