// Shared helpers for the unit suites: literal-ish constructors and a
// deterministic random polynomial source.

#pragma once

#include "alexpoly/laurent.hpp"

#include <random>
#include <vector>

namespace testutil {

using alexpoly::Int;
using alexpoly::LaurentPoly;
using alexpoly::PrimitivePoly;
using alexpoly::Rat;

// P({-2, 5, -2}, -1) = -2/t + 5 - 2t
inline LaurentPoly L(std::vector<long> coeffs, long lo = 0) {
  std::vector<Rat> c;
  c.reserve(coeffs.size());
  for (long x : coeffs) c.emplace_back(x);
  return LaurentPoly::from_coeffs(lo, c);
}

inline PrimitivePoly P(std::vector<long> coeffs) {
  return alexpoly::primitive_part(L(std::move(coeffs)));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(g_);
  }

  LaurentPoly poly(long max_width = 3, long max_coeff = 4,
                   bool allow_zero = false) {
    while (true) {
      long w = pick(0, max_width);
      long lo = pick(-2, 2);
      std::vector<Rat> c;
      for (long i = 0; i <= w; ++i) c.emplace_back(pick(-max_coeff, max_coeff));
      LaurentPoly p = LaurentPoly::from_coeffs(lo, c);
      if (!p.is_zero() || allow_zero) return p;
    }
  }

  // Random primitive polynomial with p(1) = +-1.
  PrimitivePoly unimodular_at_one(long max_deg = 3, long max_coeff = 2) {
    while (true) {
      long d = pick(1, max_deg);
      std::vector<Rat> c(static_cast<size_t>(d) + 1);
      long sum = 0;
      for (long i = 1; i <= d; ++i) {
        long x = pick(-max_coeff, max_coeff);
        c[static_cast<size_t>(i)] = Rat(x);
        sum += x;
      }
      long target = pick(0, 1) ? 1 : -1;
      c[0] = Rat(target - sum);
      LaurentPoly p = LaurentPoly::from_coeffs(0, c);
      if (p.is_zero() || p.coeff(0) == 0) continue;
      if (p.width() == 0) continue;
      return alexpoly::primitive_part(p);
    }
  }

  std::mt19937_64& gen() { return g_; }

 private:
  std::mt19937_64 g_;
};

}  // namespace testutil
