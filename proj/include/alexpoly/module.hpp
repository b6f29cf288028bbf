// Finitely generated modules over Q[t,1/t] recorded as a free rank plus a
// multiset of torsion invariants.  Chain form (each invariant divides the
// next) is the canonical storage; primary form is computed on demand.

#pragma once

#include "alexpoly/factor.hpp"
#include "alexpoly/matrix.hpp"

#include <map>

namespace alexpoly {

enum class InvariantForm { Chain, Primary };

struct TorsionModule {
  int free_rank = 0;
  std::vector<PrimitivePoly> invariants;  // nonunits
  InvariantForm form = InvariantForm::Chain;

  static TorsionModule trivial() { return TorsionModule{}; }
  static TorsionModule cyclic(const PrimitivePoly& p);
  static TorsionModule from_invariants(std::vector<PrimitivePoly> inv);
  static TorsionModule free_module(int rank);

  bool is_trivial() const { return free_rank == 0 && invariants.empty(); }
  bool operator==(const TorsionModule& o) const;
};

// Divisibility chain normalization of an invariant multiset (units dropped).
std::vector<PrimitivePoly> rechain(std::vector<PrimitivePoly> inv);

TorsionModule module_from_presentation(const GammaMatrix& a);
PrimitivePoly associated_polynomial(const TorsionModule& m);
std::map<PrimitivePoly, TorsionModule> primary_decomposition(
    const TorsionModule& m, int degree_bound = kDefaultFactorBound);

// The displayed closed form for tensor products.  When both operands have
// positive free rank the formula is applied verbatim and `both_free_flag`
// (when supplied) is set, so callers can surface the case.
TorsionModule tensor_product(const TorsionModule& a, const TorsionModule& b,
                             bool* both_free_flag = nullptr);
TorsionModule torsion_product(const TorsionModule& a, const TorsionModule& b);
TorsionModule direct_sum(const TorsionModule& a, const TorsionModule& b);

long q_dimension(const TorsionModule& m);
bool is_type_K(const TorsionModule& m);

}  // namespace alexpoly
