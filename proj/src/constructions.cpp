#include "alexpoly/constructions.hpp"

#include <algorithm>

namespace alexpoly {

void BettiProfile::check() const {
  if (b.empty() || b[0] < 1) {
    throw Error("Betti profile needs B_0 >= 1");
  }
  for (int x : b) {
    if (x < 0) throw Error("negative Betti number");
  }
  // A framed submanifold is closed and orientable, so its Betti numbers
  // satisfy B_i = B_{k-i}; the spin duality formulas rely on this.
  for (size_t i = 0; i < b.size(); ++i) {
    if (b[i] != b[b.size() - 1 - i]) {
      throw Error("Betti profile of a closed manifold must be symmetric");
    }
  }
}

std::vector<int> sigma_unreduced_betti(const KnotDatum& d) {
  if (d.kind == KnotKind::GeneralSingularSphere) {
    std::vector<int> out = d.sigma_reduced_betti;
    if (out.empty()) out.push_back(0);
    out[0] += 1;
    return out;
  }
  // Disk kinds: the sphere picture has a point singular set (several points
  // merge along an arc, so B~_0 still reads through unchanged).
  std::vector<int> out = d.sigma_reduced_betti;
  if (out.empty()) out.push_back(0);
  out[0] += 1;
  return out;
}

std::vector<int> product_betti(const BettiProfile& m,
                               const std::vector<int>& sigma_reduced) {
  std::vector<int> sigma = sigma_reduced;
  if (sigma.empty()) sigma.push_back(0);
  sigma[0] += 1;  // unreduce
  std::vector<int> beta(m.b.size() + sigma.size() - 1, 0);
  for (size_t r = 0; r < m.b.size(); ++r) {
    for (size_t s = 0; s < sigma.size(); ++s) {
      beta[r + s] += m.b[r] * sigma[s];
    }
  }
  beta[0] -= 1;  // reduce
  return beta;
}

namespace {

int betti_at(const std::vector<int>& v, int i) {
  if (i < 0 || i >= static_cast<int>(v.size())) return 0;
  return v[static_cast<size_t>(i)];
}

void trim_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

KnotDatum knot_sum(const KnotDatum& d1, const KnotDatum& d2) {
  d1.check_shape();
  d2.check_shape();
  if (d1.n != d2.n) throw Error("knot sum needs equal dimensions");
  KnotDatum out;
  out.n = d1.n;
  out.kind = std::max(d1.kind, d2.kind);
  bool s1 = d1.kind != KnotKind::LocallyFlatDisk;
  bool s2 = d2.kind != KnotKind::LocallyFlatDisk;
  if (s1 && s2) {
    size_t len = std::max(d1.sigma_reduced_betti.size(),
                          d2.sigma_reduced_betti.size());
    out.sigma_reduced_betti.assign(std::max<size_t>(len, 1), 0);
    for (size_t i = 0; i < len; ++i) {
      out.sigma_reduced_betti[i] = betti_at(d1.sigma_reduced_betti, static_cast<int>(i)) +
                                   betti_at(d2.sigma_reduced_betti, static_cast<int>(i));
    }
    out.sigma_reduced_betti[0] += 1;  // disjoint union gains a component
  } else if (s1) {
    out.sigma_reduced_betti = d1.sigma_reduced_betti;
  } else {
    out.sigma_reduced_betti = d2.sigma_reduced_betti;
  }
  for (int i = 1; i <= d1.n - 2; ++i) {
    out.lambda.push_back(mul_class(d1.lambda_at(i), d2.lambda_at(i)));
    out.mu.push_back(mul_class(d1.mu_at(i), d2.mu_at(i)));
  }
  for (int i = 1; i <= d1.nu_count(); ++i) {
    out.nu.push_back(mul_class(d1.nu_at(i), d2.nu_at(i)));
  }
  return out;
}

namespace {

PrimitivePoly sub_at(const std::vector<PrimitivePoly>& v, int offset, int i) {
  int idx = i - offset;
  if (idx < 0 || idx >= static_cast<int>(v.size())) return PrimitivePoly::one();
  return v[static_cast<size_t>(idx)];
}

PrimitivePoly strip_exact(const PrimitivePoly& p, int power,
                          const std::string& what) {
  auto q = try_divide(p.to_laurent(), t_minus_one_pow(power).to_laurent());
  if (!q) {
    throw Error(what + " lacks its (t-1)^" + std::to_string(power) +
                " factor");
  }
  return primitive_part(*q);
}

}  // namespace

KnotDatum frame_spin(const KnotDatum& d, const BettiProfile& m) {
  m.check();
  if (m.is_point()) return d;
  KnotDatum seed = derive_subpolynomials(d);
  int mm = d.n;  // the seed lives in S^m
  int k = m.k();
  int n = mm + k;
  std::vector<int> sigma = sigma_unreduced_betti(d);
  std::vector<int> beta = product_betti(m, d.sigma_reduced_betti);

  KnotDatum out;
  out.n = n;
  out.kind = KnotKind::GeneralSingularSphere;
  out.sigma_reduced_betti = beta;
  trim_zeros(out.sigma_reduced_betti);

  // Stripped seed families; the divisions are exact on valid seeds and
  // reported otherwise.
  std::vector<PrimitivePoly> mu_str, a_str;
  for (int l = 1; l <= mm - 2; ++l) {
    mu_str.push_back(strip_exact(d.mu_at(l), d.betti(l - 1),
                                 "mu_" + std::to_string(l)));
  }
  for (int l = 1; l <= mm - 3; ++l) {
    a_str.push_back(strip_exact(sub_at(*seed.sub_a, 0, l), d.betti(l),
                                "a_" + std::to_string(l)));
  }

  auto convolve = [&](auto poly_of_l, int lo, int hi, int i) {
    LaurentPoly prod = LaurentPoly::one();
    for (int l = lo; l <= hi; ++l) {
      int e = m.at(i - l);
      if (e == 0) continue;
      LaurentPoly base = poly_of_l(l);
      for (int c = 0; c < e; ++c) prod *= base;
    }
    return prod;
  };

  std::vector<PrimitivePoly> sa, sb, sc;
  sa.push_back(t_minus_one_pow(betti_at(beta, 0)));  // a_0
  for (int i = 1; i <= n - 2; ++i) {
    LaurentPoly li = convolve(
        [&](int l) { return d.lambda_at(l).to_laurent(); }, 1, mm - 2, i);
    out.lambda.push_back(primitive_part(li));

    LaurentPoly mi = convolve(
        [&](int l) {
          return mu_str[static_cast<size_t>(l - 1)].to_laurent();
        },
        1, mm - 2, i);
    mi *= t_minus_one_pow(betti_at(beta, i - 1)).to_laurent();
    out.mu.push_back(primitive_part(mi));

    LaurentPoly ci = convolve(
        [&](int l) { return seed.sub_c->at(static_cast<size_t>(l - 1)).to_laurent(); },
        1, mm - 2, i);
    sc.push_back(primitive_part(ci));
    LaurentPoly bi = convolve(
        [&](int l) { return sub_at(*seed.sub_b, 1, l).to_laurent(); }, 1,
        mm - 2, i);
    if (i <= n - 3) {
      sb.push_back(primitive_part(bi));
      LaurentPoly ai = convolve(
          [&](int l) {
            return l <= mm - 3 ? a_str[static_cast<size_t>(l - 1)].to_laurent()
                               : LaurentPoly::one();
          },
          1, mm - 2, i);
      ai *= t_minus_one_pow(betti_at(beta, i)).to_laurent();
      sa.push_back(primitive_part(ai));
    }
  }
  for (int i = 1; i <= n - 3; ++i) {
    LaurentPoly ni = convolve(
        [&](int l) {
          return l == 0 ? t_minus_one_pow(betti_at(sigma, 0)).to_laurent()
                        : d.nu_at(l).to_laurent();
        },
        0, mm - 3, i);
    out.nu.push_back(primitive_part(ni));
  }
  out.sub_a = std::move(sa);
  out.sub_b = std::move(sb);
  out.sub_c = std::move(sc);
  out.check_shape();
  return out;
}

namespace {

// Per-degree invariant lists, from attachments when present, otherwise the
// single-cyclic coarsening of each polynomial.
std::vector<std::vector<PrimitivePoly>> invariant_lists(
    const std::vector<PrimitivePoly>& polys,
    const std::optional<std::vector<std::vector<PrimitivePoly>>>& attach,
    bool strip_tm1, bool* coarsened) {
  std::vector<std::vector<PrimitivePoly>> out;
  for (size_t i = 0; i < polys.size(); ++i) {
    std::vector<PrimitivePoly> inv;
    if (attach) {
      inv = (*attach)[i];
    } else {
      if (!polys[i].is_one()) inv.push_back(polys[i]);
      if (coarsened && !polys[i].is_one()) *coarsened = true;
    }
    std::vector<PrimitivePoly> cleaned;
    for (const auto& p : inv) {
      PrimitivePoly q = strip_tm1 ? strip_t_minus_one(p).second : p;
      if (!q.is_one()) cleaned.push_back(q);
    }
    out.push_back(std::move(cleaned));
  }
  return out;
}

}  // namespace

TwistSpinResult frame_twist_spin(const KnotDatum& d,
                                 const CoefficientHomology& h, int m, int k) {
  d.check_shape();
  if (m != d.n) {
    throw Error("seed dimension mismatch: datum has n = " +
                std::to_string(d.n));
  }
  if (k < 0) throw Error("negative spin dimension");
  TwistSpinResult res;
  bool coarse = false;
  auto lam = invariant_lists(d.lambda, d.lambda_inv, false, &coarse);
  auto mu = invariant_lists(d.mu, d.mu_inv, true, &coarse);
  auto nu = invariant_lists(d.nu, d.nu_inv, true, &coarse);
  res.coarsened = coarse;
  if (h.free_at(0) == 0 &&
      (!h.zetas_at(0) || h.zetas_at(0)->empty())) {
    throw Error("coefficient homology must be nontrivial in degree 0");
  }

  auto list_at = [](const std::vector<std::vector<PrimitivePoly>>& v, int s)
      -> const std::vector<PrimitivePoly>* {
    if (s < 1 || s > static_cast<int>(v.size())) return nullptr;
    return &v[static_cast<size_t>(s - 1)];
  };

  int hdeg = static_cast<int>(h.degrees.size()) - 1;
  std::vector<int> sigma = sigma_unreduced_betti(d);
  // kappa_r counts the (t-1)-divisible torsion invariants of H_r(M).
  std::vector<int> kappa(static_cast<size_t>(std::max(hdeg + 1, 1)), 0);
  for (int r = 0; r <= hdeg; ++r) {
    if (const auto* z = h.zetas_at(r)) {
      for (const auto& zeta : *z) {
        if (zeta.evaluate(1) == 0) ++kappa[static_cast<size_t>(r)];
      }
    }
  }
  // Reduced Betti of M x Sigma computed from the coefficient data alone:
  // B_r(M) = free_r + kappa_r + kappa_{r-1}.
  auto beta_reduced = [&](int i) {
    if (i < 0) return 0;
    int total = 0;
    for (int r = 0; r <= std::min(i, hdeg); ++r) {
      int s = i - r;
      total += (h.free_at(r) + kappa[static_cast<size_t>(r)]) *
               betti_at(sigma, s);
    }
    for (int r = 0; r <= std::min(i - 1, hdeg); ++r) {
      int s = i - 1 - r;
      total += kappa[static_cast<size_t>(r)] * betti_at(sigma, s);
    }
    if (i == 0) total -= 1;
    return total;
  };

  int n = m + k;
  KnotDatum out;
  out.n = n;
  out.kind = KnotKind::GeneralSingularSphere;
  for (int i = 0; i <= n; ++i) {
    out.sigma_reduced_betti.push_back(beta_reduced(i));
  }
  trim_zeros(out.sigma_reduced_betti);

  // One convolution block: prod over r+s=j of (prod_l x_{sl}^{free_r} *
  // prod_{i,l} gcd(zeta_{ri}, x_{sl})), with an optional reciprocal twist
  // on the zetas.
  auto block = [&](const std::vector<std::vector<PrimitivePoly>>& fam, int j,
                   bool with_free, bool conj,
                   auto&& index_of_s) {
    LaurentPoly prod = LaurentPoly::one();
    for (int r = 0; r <= hdeg; ++r) {
      int s = j - r;
      if (s <= 0) continue;
      const auto* xs = list_at(fam, index_of_s(s));
      if (!xs || xs->empty()) continue;
      if (with_free) {
        for (const auto& x : *xs) {
          for (int c = 0; c < h.free_at(r); ++c) prod *= x.to_laurent();
        }
      }
      if (const auto* zs = h.zetas_at(r)) {
        for (const auto& zeta : *zs) {
          PrimitivePoly z = conj ? reciprocal_class(zeta) : zeta;
          for (const auto& x : *xs) {
            prod *= poly_gcd(z, x).to_laurent();
          }
        }
      }
    }
    return prod;
  };
  auto ident = [](int s) { return s; };

  for (int j = 1; j <= n - 2; ++j) {
    LaurentPoly lj = block(lam, j, true, false, ident) *
                     block(lam, j - 1, false, false, ident);
    out.lambda.push_back(primitive_part(lj));

    auto mu_index = [&](int s) { return m - s - 1; };
    LaurentPoly mj = block(mu, n - j - 1, true, true, mu_index) *
                     block(mu, n - j - 2, false, true, mu_index);
    mj *= t_minus_one_pow(beta_reduced(j - 1)).to_laurent();
    out.mu.push_back(primitive_part(mj));
  }
  for (int j = 1; j <= n - 3; ++j) {
    LaurentPoly nj = block(nu, j, true, false, ident) *
                     block(nu, j - 1, false, false, ident);
    nj *= t_minus_one_pow(beta_reduced(j)).to_laurent();
    out.nu.push_back(primitive_part(nj));
  }
  out.check_shape();
  try {
    out = derive_subpolynomials(out);
  } catch (const Error&) {
    // Subpolynomials stay unset when the output violates the ladder.
  }
  res.datum = std::move(out);
  return res;
}

TwistSpinResult zeeman_twist_spin(const KnotDatum& d, int twist_k) {
  if (twist_k < 0) throw Error("negative twist");
  CoefficientHomology h;
  if (twist_k == 0) {
    h = trivial_coefficient_module(BettiProfile{{1, 1}});
  } else {
    CoefficientHomology::Degree d0;
    std::vector<Int> c(static_cast<size_t>(twist_k) + 1, Int(0));
    c[0] = -1;
    c[static_cast<size_t>(twist_k)] = 1;  // t^k - 1
    d0.zetas.push_back(PrimitivePoly::from_canonical_coeffs(std::move(c)));
    h.degrees.push_back(std::move(d0));
  }
  return frame_twist_spin(d, h, d.n, 1);
}

KnotDatum suspension(const KnotDatum& d) {
  KnotDatum seed = derive_subpolynomials(d);
  int n = d.n;
  KnotDatum out;
  out.n = n + 1;
  out.kind = KnotKind::GeneralSingularSphere;
  out.sigma_reduced_betti.assign(1, 0);
  for (int b : d.sigma_reduced_betti) out.sigma_reduced_betti.push_back(b);
  trim_zeros(out.sigma_reduced_betti);
  for (int i = 1; i <= n - 1; ++i) {
    out.lambda.push_back(d.lambda_at(i));  // reads 1 above the seed range
    out.mu.push_back(d.mu_at(i - 1));
  }
  for (int i = 1; i <= n - 2; ++i) {
    LaurentPoly ni = sub_at(*seed.sub_a, 0, i - 1).to_laurent() *
                     sub_at(*seed.sub_b, 1, i).to_laurent() *
                     seed.sub_c->at(static_cast<size_t>(i - 1)).to_laurent() *
                     seed.sub_c->at(static_cast<size_t>(i - 1)).to_laurent();
    out.nu.push_back(primitive_part(ni));
  }
  out.check_shape();
  return derive_subpolynomials(out);
}

KnotDatum trivial_slice(const SphereKnotPolys& s) {
  Report rep = levine_validate(s);
  if (!rep.all_pass()) {
    throw Error("sphere polynomials fail the locally-flat conditions");
  }
  KnotDatum out;
  out.n = s.n;
  out.kind = KnotKind::LocallyFlatDisk;
  out.lambda = s.p;
  out.mu = s.p;
  out.nu.assign(static_cast<size_t>(out.nu_count()), PrimitivePoly::one());
  out.check_shape();
  return out;
}

CoefficientHomology trivial_coefficient_module(const BettiProfile& m) {
  m.check();
  CoefficientHomology h;
  for (int x : m.b) {
    CoefficientHomology::Degree deg;
    deg.free_rank = x;
    h.degrees.push_back(std::move(deg));
  }
  return h;
}

}  // namespace alexpoly
