#include "alexpoly/middim.hpp"

namespace alexpoly {

namespace {

// Cofactor matrix C with C_{ij} = (-1)^(i+j) * minor(i,j), so that
// (R^-1)' = C / det(R).
IntMatrix cofactor_matrix(const IntMatrix& r) {
  int n = r.size();
  IntMatrix c(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1);
      for (int a = 0, ai = 0; a < n; ++a) {
        if (a == i) continue;
        for (int b = 0, bj = 0; b < n; ++b) {
          if (b == j) continue;
          minor.at(ai, bj++) = r.at(a, b);
        }
        ++ai;
      }
      Int m = minor.det();
      c.at(i, j) = ((i + j) % 2 == 0) ? m : -m;
    }
  }
  return c;
}

}  // namespace

IntMatrix conjugated_tau(const PairingPresentation& p) {
  int n = p.size();
  if (p.r.size() != n) throw Error("tau and R must have equal size");
  Int det = p.r.det();
  if (det == 0) throw Error("det R = 0");
  if (n == 0) return IntMatrix();
  // (R^-1)' tau R = (C tau R) / det(R) with C the cofactor matrix of R.
  IntMatrix prod = cofactor_matrix(p.r) * p.tau * p.r;
  IntMatrix out(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (prod.at(i, j) % det != 0) {
        throw Error("(R^-1)' tau R is not an integer matrix");
      }
      out.at(i, j) = prod.at(i, j) / det;
    }
  }
  return out;
}

void check_presentation(const PairingPresentation& p) {
  conjugated_tau(p);
}

GammaMatrix build_M(const PairingPresentation& p) {
  IntMatrix a = conjugated_tau(p);
  IntMatrix taut = p.tau.transpose();
  int n = p.size();
  int eps = p.epsilon();
  GammaMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      LaurentPoly e = LaurentPoly::term(Rat(eps * a.at(i, j)), 1) -
                      LaurentPoly::term(Rat(taut.at(i, j)), 0);
      m.at(i, j) = e;
    }
  }
  return m;
}

CPolyResult c_polynomial(const PairingPresentation& p) {
  GammaMatrix m = build_M(p);
  LaurentPoly det = m.det();
  if (det.is_zero()) throw Error("singular presentation: det M(t) = 0");
  CPolyResult res;
  res.c = primitive_part(det);
  res.det_m_at_1 = det.evaluate(1);
  res.knot_valid = (res.det_m_at_1 == 1 || res.det_m_at_1 == -1);
  res.self_reciprocal =
      similar(res.c.to_laurent(), res.c.to_laurent().reciprocal(), Ring::Lambda);
  return res;
}

RationalFunctionMatrix pairing_matrix(const PairingPresentation& p) {
  int n = p.size();
  check_presentation(p);
  RationalFunctionMatrix rinv = to_rational(p.r.to_gamma()).inverse();
  RationalFunctionMatrix rinvt = rinv.transpose();
  RationalFunctionMatrix taur = to_rational(p.tau.to_gamma());
  RationalFunctionMatrix tautr = to_rational(p.tau.transpose().to_gamma());
  RationalFunction tpoly = RationalFunction::from_poly(LaurentPoly::t());
  RationalFunction eps = RationalFunction::from_poly(
      LaurentPoly::constant(Rat(p.epsilon())));
  // D = (R^-1)' tau - eps t tau' R^-1
  RationalFunctionMatrix d(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RationalFunction s1, s2;
      for (int k = 0; k < n; ++k) {
        s1 = s1 + rinvt.at(i, k) * taur.at(k, j);
        s2 = s2 + tautr.at(i, k) * rinv.at(k, j);
      }
      d.at(i, j) = s1 - eps * tpoly * s2;
    }
  }
  RationalFunction tm1 = RationalFunction::from_poly(t_minus_one());
  return d.inverse().scaled(tm1);
}

bool hermitian_identity_holds(const PairingPresentation& p) {
  RationalFunctionMatrix n = pairing_matrix(p);
  int sz = n.size();
  RationalFunctionMatrix conj_t(sz);
  for (int i = 0; i < sz; ++i) {
    for (int j = 0; j < sz; ++j) {
      conj_t.at(i, j) = n.at(j, i).reciprocal_t();
    }
  }
  RationalFunction eps = RationalFunction::from_poly(
      LaurentPoly::constant(Rat(p.epsilon())));
  return n == conj_t.scaled(eps);
}

DiscriminantResult discriminant(const PairingPresentation& p) {
  DiscriminantResult res;
  RationalFunctionMatrix n = pairing_matrix(p);
  res.value = n.det();
  // (t-1)^|tau| det(R) / (+-det M); the determinant itself, not its
  // primitive representative, so the identity is exact up to sign for
  // every presentation (the two coincide up to a Lambda-unit whenever
  // det M(1) = +-1).
  LaurentPoly detm = build_M(p).det();
  if (detm.is_zero()) throw Error("singular presentation: det M(t) = 0");
  LaurentPoly tm1pow = LaurentPoly::one();
  for (int i = 0; i < p.size(); ++i) tm1pow *= t_minus_one();
  res.expected = RationalFunction(tm1pow.scaled(Rat(p.r.det())), detm);
  RationalFunction ratio = res.value / res.expected;
  res.identity_holds =
      lambda_unit_ratio(ratio.num_laurent(), ratio.den_laurent());
  return res;
}

PairingPresentation quadratic_family(const Int& a, int sign) {
  if (sign != 1 && sign != -1) throw Error("sign must be +1 or -1");
  PairingPresentation p;
  p.q = 2;
  p.r = IntMatrix::diag({4 * a + sign, Int(1)});
  p.tau = IntMatrix(2);
  p.tau.at(0, 0) = a;
  p.tau.at(1, 0) = 1;
  p.tau.at(1, 1) = 1;
  return p;
}

Report verify_middim_witness(const PrimitivePoly& c,
                             const PairingPresentation& p) {
  Report rep;
  try {
    check_presentation(p);
    rep.add("T:middim(presentation)", true);
  } catch (const Error& e) {
    rep.add("T:middim(presentation)", false, e.what());
    return rep;
  }
  CPolyResult cp = c_polynomial(p);
  rep.add("T:middim(c~detM)", similar(c, cp.c, Ring::Lambda),
          "det M = " + cp.c.to_literal());
  rep.add("T:middim(detM(1))", cp.knot_valid,
          "det M(1) = " + Rat(cp.det_m_at_1).get_str());
  TorsionModule mod = module_from_presentation(build_M(p));
  rep.add("T:middim2(typeK)", is_type_K(mod));
  DiscriminantResult disc = discriminant(p);
  rep.add("E:discr", disc.identity_holds,
          "det N = " + disc.value.to_string());
  return rep;
}

}  // namespace alexpoly
