// Middle-dimension pairing machinery for n = 2q+1: the presentation matrix
// M(t) built from integer matrices (tau, R), the shared polynomial factor
// c(t) = det M(t), the sesquilinear pairing matrix N(t), and the
// discriminant identity relating det N, c, |tau| and det R.

#pragma once

#include "alexpoly/matrix.hpp"
#include "alexpoly/module.hpp"
#include "alexpoly/report.hpp"

namespace alexpoly {

struct PairingPresentation {
  IntMatrix tau;
  IntMatrix r;
  int q = 2;  // parity driver: epsilon = (-1)^(q+1)

  int size() const { return tau.size(); }
  int epsilon() const { return (q % 2 == 0) ? -1 : 1; }
};

// Checks det R != 0 and integrality of (R^-1)' tau R; error naming the
// violated invariant.
void check_presentation(const PairingPresentation& p);

// (R^-1)' tau R as an exact integer matrix.
IntMatrix conjugated_tau(const PairingPresentation& p);

// M(t) = epsilon * (R^-1)' tau R t - tau'.
GammaMatrix build_M(const PairingPresentation& p);

struct CPolyResult {
  PrimitivePoly c;
  bool knot_valid = false;      // |det M(1)| == 1
  bool self_reciprocal = false; // c ~ c(1/t) in Lambda
  Rat det_m_at_1;
};

CPolyResult c_polynomial(const PairingPresentation& p);

// N(t) = (t-1) * D(t)^-1 with D = (R^-1)' tau - epsilon t tau' R^-1.
RationalFunctionMatrix pairing_matrix(const PairingPresentation& p);

// Entrywise N == epsilon * conj(N)' where conj is t -> 1/t.
bool hermitian_identity_holds(const PairingPresentation& p);

struct DiscriminantResult {
  RationalFunction value;     // det N(t), reduced
  RationalFunction expected;  // (t-1)^|tau| det(R) / (+-c(t))
  bool identity_holds = false;
};

DiscriminantResult discriminant(const PairingPresentation& p);

// R = diag(4a + sign, 1), tau = [[a,0],[1,1]], q = 2; realizes the
// quadratic classes a t^2 + (e - 2a) t + a.
PairingPresentation quadratic_family(const Int& a, int sign);

// Verification direction: c ~ det M, det M(1) = +-1, the presented module
// is type K, and the discriminant has the (t-1)^w rho / (+-c) form.
Report verify_middim_witness(const PrimitivePoly& c,
                             const PairingPresentation& p);

}  // namespace alexpoly
