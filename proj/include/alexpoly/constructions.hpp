// Closed-form transformations of invariant data: knot sum, frame spinning,
// frame twist-spinning (with its Zeeman specialization), suspension, and
// the trivial slicing of a sphere knot.

#pragma once

#include "alexpoly/datum.hpp"
#include "alexpoly/module.hpp"

namespace alexpoly {

struct BettiProfile {
  std::vector<int> b;  // B_0..B_k of the spinning manifold

  int k() const { return static_cast<int>(b.size()) - 1; }
  int at(int i) const {
    if (i < 0 || i >= static_cast<int>(b.size())) return 0;
    return b[static_cast<size_t>(i)];
  }
  bool is_point() const { return b.size() == 1 && b[0] == 1; }
  void check() const;
};

// H_j(M; local system): free rank plus torsion invariants per degree.
struct CoefficientHomology {
  struct Degree {
    int free_rank = 0;
    std::vector<PrimitivePoly> zetas;
  };
  std::vector<Degree> degrees;

  int free_at(int r) const {
    if (r < 0 || r >= static_cast<int>(degrees.size())) return 0;
    return degrees[static_cast<size_t>(r)].free_rank;
  }
  const std::vector<PrimitivePoly>* zetas_at(int r) const {
    if (r < 0 || r >= static_cast<int>(degrees.size())) return nullptr;
    return &degrees[static_cast<size_t>(r)].zetas;
  }
};

// Unreduced Betti list of the seed's singular set (a point for the disk
// kinds).
std::vector<int> sigma_unreduced_betti(const KnotDatum& d);

// Reduced Betti list of M x Sigma by Kunneth convolution.
std::vector<int> product_betti(const BettiProfile& m,
                               const std::vector<int>& sigma_reduced);

KnotDatum knot_sum(const KnotDatum& d1, const KnotDatum& d2);
KnotDatum frame_spin(const KnotDatum& d, const BettiProfile& m);

struct TwistSpinResult {
  KnotDatum datum;
  // Set when the seed lacked invariant attachments and each polynomial was
  // treated as a single cyclic invariant.
  bool coarsened = false;
};

TwistSpinResult frame_twist_spin(const KnotDatum& d,
                                 const CoefficientHomology& h, int m, int k);
TwistSpinResult zeeman_twist_spin(const KnotDatum& d, int twist_k);
KnotDatum suspension(const KnotDatum& d);
KnotDatum trivial_slice(const SphereKnotPolys& s);
CoefficientHomology trivial_coefficient_module(const BettiProfile& m);

}  // namespace alexpoly
