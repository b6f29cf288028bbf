// Rational factorization of primitive Laurent polynomials: squarefree
// decomposition, rational-root stripping, and Kronecker interpolation for
// the residual.  Fully exact; cost is exponential in the degree, which is
// why callers pass a degree bound.

#pragma once

#include "alexpoly/laurent.hpp"

#include <optional>
#include <vector>

namespace alexpoly {

inline constexpr int kDefaultFactorBound = 10;

// Multiset (canonically sorted) of irreducible primitive factors whose
// product is Lambda-similar to p.  Units factor to the empty multiset.
// Error when width(p) exceeds the bound.
std::vector<PrimitivePoly> factor_rational(const PrimitivePoly& p,
                                           int degree_bound = kDefaultFactorBound);

struct ReciprocalSquare {
  bool ok = false;
  std::optional<PrimitivePoly> witness;
};

// Decides nu ~ p(t) p(1/t) in Lambda.  With a witness only the product is
// verified; without one the factorization is searched for a pairing of each
// irreducible factor with its reciprocal partner.
ReciprocalSquare is_reciprocal_square(
    const PrimitivePoly& nu,
    const std::optional<PrimitivePoly>& witness = std::nullopt,
    int degree_bound = kDefaultFactorBound);

}  // namespace alexpoly
