#include "alexpoly/datum.hpp"

#include <sstream>

namespace alexpoly {

std::string kind_name(KnotKind k) {
  switch (k) {
    case KnotKind::LocallyFlatDisk: return "locally_flat_disk";
    case KnotKind::PointSingularSphere: return "point_singular_sphere";
    case KnotKind::GeneralSingularSphere: return "general_singular_sphere";
  }
  return "?";
}

std::optional<KnotKind> kind_from_name(const std::string& s) {
  if (s == "locally_flat_disk") return KnotKind::LocallyFlatDisk;
  if (s == "point_singular_sphere") return KnotKind::PointSingularSphere;
  if (s == "general_singular_sphere") return KnotKind::GeneralSingularSphere;
  return std::nullopt;
}

namespace {

PrimitivePoly at_or_one(const std::vector<PrimitivePoly>& v, int idx1) {
  if (idx1 < 1 || idx1 > static_cast<int>(v.size())) {
    return PrimitivePoly::one();
  }
  return v[static_cast<size_t>(idx1 - 1)];
}

bool unit_at_one(const PrimitivePoly& p) {
  Rat v = p.evaluate(1);
  return v == 1 || v == -1;
}

}  // namespace

PrimitivePoly KnotDatum::lambda_at(int i) const { return at_or_one(lambda, i); }
PrimitivePoly KnotDatum::mu_at(int i) const { return at_or_one(mu, i); }
PrimitivePoly KnotDatum::nu_at(int i) const { return at_or_one(nu, i); }

int KnotDatum::betti(int i) const {
  if (i < 0 || i >= static_cast<int>(sigma_reduced_betti.size())) return 0;
  return sigma_reduced_betti[static_cast<size_t>(i)];
}

KnotDatum KnotDatum::trivial(int n, KnotKind kind) {
  if (n < 3) throw Error("dimension must be at least 3");
  KnotDatum d;
  d.n = n;
  d.kind = kind;
  if (kind == KnotKind::PointSingularSphere) {
    d.sigma_reduced_betti.assign(1, 0);
  }
  d.nu.assign(static_cast<size_t>(d.nu_count()), PrimitivePoly::one());
  d.lambda.assign(static_cast<size_t>(n - 2), PrimitivePoly::one());
  d.mu.assign(static_cast<size_t>(n - 2), PrimitivePoly::one());
  return d;
}

void KnotDatum::check_shape() const {
  if (n < 3) throw Error("dimension must be at least 3");
  if (static_cast<int>(lambda.size()) != n - 2 ||
      static_cast<int>(mu.size()) != n - 2) {
    throw Error("lambda and mu must have n-2 entries");
  }
  if (static_cast<int>(nu.size()) != nu_count()) {
    throw Error("nu must have n-3 entries");
  }
  if (kind == KnotKind::LocallyFlatDisk) {
    for (int b : sigma_reduced_betti) {
      if (b != 0) throw Error("locally-flat data carry an all-zero Betti profile");
    }
  } else if (kind == KnotKind::PointSingularSphere) {
    // B~_0 = k-1 records k singular points; higher entries vanish.
    for (size_t i = 1; i < sigma_reduced_betti.size(); ++i) {
      if (sigma_reduced_betti[i] != 0) {
        throw Error("point singular sets have trivial higher Betti numbers");
      }
    }
    if (!sigma_reduced_betti.empty() && sigma_reduced_betti[0] < 0) {
      throw Error("negative Betti number");
    }
  }
  auto check_inv = [&](const auto& inv, size_t want, const char* name) {
    if (inv && inv->size() != want) {
      throw Error(std::string(name) + " attachments must parallel the list");
    }
  };
  check_inv(nu_inv, nu.size(), "nu");
  check_inv(lambda_inv, lambda.size(), "lambda");
  check_inv(mu_inv, mu.size(), "mu");
}

PrimitivePoly a_zero(const KnotDatum& d) {
  if (d.kind == KnotKind::GeneralSingularSphere) {
    return t_minus_one_pow(d.betti(0));
  }
  return PrimitivePoly::one();
}

KnotDatum derive_subpolynomials(const KnotDatum& d) {
  d.check_shape();
  int n = d.n;
  std::vector<PrimitivePoly> a(static_cast<size_t>(n - 2),
                               PrimitivePoly::one());  // a_0..a_{n-3}
  std::vector<PrimitivePoly> b(static_cast<size_t>(std::max(n - 3, 0)),
                               PrimitivePoly::one());  // b_1..b_{n-3}
  std::vector<PrimitivePoly> c(static_cast<size_t>(n - 2),
                               PrimitivePoly::one());  // c_1..c_{n-2}
  a[0] = a_zero(d);
  auto fail = [](const char* fam, int idx, const Error& e) {
    std::ostringstream os;
    os << "subpolynomial division failed at " << fam << "_" << idx << ": "
       << e.what();
    throw Error(os.str());
  };
  c[static_cast<size_t>(n - 3)] = d.lambda_at(n - 2);
  for (int i = n - 3; i >= 1; --i) {
    try {
      a[static_cast<size_t>(i)] =
          divide_class(d.mu_at(i + 1), c[static_cast<size_t>(i)]);
    } catch (const Error& e) {
      fail("mu", i + 1, e);
    }
    try {
      b[static_cast<size_t>(i - 1)] =
          divide_class(d.nu_at(i), a[static_cast<size_t>(i)]);
    } catch (const Error& e) {
      fail("nu", i, e);
    }
    try {
      c[static_cast<size_t>(i - 1)] =
          divide_class(d.lambda_at(i), b[static_cast<size_t>(i - 1)]);
    } catch (const Error& e) {
      fail("lambda", i, e);
    }
  }
  KnotDatum out = d;
  out.sub_a = std::move(a);
  out.sub_b = std::move(b);
  out.sub_c = std::move(c);
  return out;
}

namespace {

struct Subpolys {
  std::vector<PrimitivePoly> a, b, c;
  PrimitivePoly a_at(int i) const {  // subscripts 0..n-3
    if (i < 0 || i >= static_cast<int>(a.size())) return PrimitivePoly::one();
    return a[static_cast<size_t>(i)];
  }
  PrimitivePoly b_at(int i) const {  // subscripts 1..n-3
    if (i < 1 || i > static_cast<int>(b.size())) return PrimitivePoly::one();
    return b[static_cast<size_t>(i - 1)];
  }
  PrimitivePoly c_at(int i) const {  // subscripts 1..n-2
    if (i < 1 || i > static_cast<int>(c.size())) return PrimitivePoly::one();
    return c[static_cast<size_t>(i - 1)];
  }
};

// The division ladder determines every identity except the bottom one,
// mu_1 ~ c_1 a_0, which closes the factorization.
std::optional<Subpolys> try_derive(const KnotDatum& d, Report& rep,
                                   const std::string& id) {
  try {
    KnotDatum derived = derive_subpolynomials(d);
    Subpolys sub{*derived.sub_a, *derived.sub_b, *derived.sub_c};
    if (!similar(d.mu_at(1), mul_class(sub.c_at(1), sub.a_at(0)),
                 Ring::Lambda)) {
      rep.add(id, false, "mu_1 is not c_1 * a_0");
      return std::nullopt;
    }
    rep.add(id, true);
    return sub;
  } catch (const Error& e) {
    rep.add(id, false, e.what());
    return std::nullopt;
  }
}

bool reciprocal_dual(const PrimitivePoly& x, const PrimitivePoly& y) {
  return similar(x.to_laurent(), y.to_laurent().reciprocal(), Ring::Lambda);
}

}  // namespace

Report validate_disk_knot(
    const KnotDatum& d, const std::optional<PairingPresentation>& witness) {
  d.check_shape();
  if (d.kind == KnotKind::GeneralSingularSphere) {
    throw Error("validate_disk_knot expects a disk-knot kind");
  }
  Report rep;
  auto sub = try_derive(d, rep, "T:alexa(1)");
  if (!sub) return rep;
  int n = d.n;

  bool dual_c = true;
  std::string note_c;
  for (int i = 1; i <= n - 2; ++i) {
    if (!reciprocal_dual(sub->c_at(i), sub->c_at(n - 1 - i))) {
      dual_c = false;
      note_c = "fails at c_" + std::to_string(i);
      break;
    }
  }
  rep.add("T:alexa(2a)", dual_c, note_c);

  bool dual_ab = true;
  std::string note_ab;
  for (int i = 1; i <= n - 3; ++i) {
    if (!reciprocal_dual(sub->a_at(i), sub->b_at(n - i - 2))) {
      dual_ab = false;
      note_ab = "fails at a_" + std::to_string(i);
      break;
    }
  }
  rep.add("T:alexa(2b)", dual_ab, note_ab);

  bool norm = sub->a_at(0).is_one();
  std::string note_n = norm ? "" : "a_0 is not 1";
  for (int i = 0; i <= n - 3 && norm; ++i) {
    norm = unit_at_one(sub->a_at(i));
    if (!norm) note_n = "a_" + std::to_string(i) + "(1) is not +-1";
  }
  for (int i = 1; i <= n - 3 && norm; ++i) {
    norm = unit_at_one(sub->b_at(i));
    if (!norm) note_n = "b_" + std::to_string(i) + "(1) is not +-1";
  }
  for (int i = 1; i <= n - 2 && norm; ++i) {
    norm = unit_at_one(sub->c_at(i));
    if (!norm) note_n = "c_" + std::to_string(i) + "(1) is not +-1";
  }
  rep.add("T:alexa(3)", norm, note_n);

  if (n % 2 == 1 && ((n - 1) / 2) % 2 == 0) {
    int q = (n - 1) / 2;
    PrimitivePoly cq = sub->c_at(q);
    if (witness) {
      try {
        CPolyResult cw = c_polynomial(*witness);
        bool pass = similar(cw.c, cq, Ring::Lambda) && cw.knot_valid;
        rep.add("T:alexa(4)", pass,
                pass ? "witness det M ~ c_" + std::to_string(q)
                     : "witness does not present c_" + std::to_string(q));
      } catch (const Error& e) {
        rep.add("T:alexa(4)", false, e.what());
      }
    } else {
      rep.add_advisory("T:alexa(4)", true, "not checked: no (tau, R) witness");
    }
    if (q == 2) {
      bool odd_sq = false;
      std::string note;
      try {
        PrimitivePoly nf = normalize_symmetric(cq);
        Rat v = nf.evaluate(-1);
        odd_sq = is_odd_square(v);
        note = "normal-form c_2(-1) = " + v.get_str();
      } catch (const Error& e) {
        note = e.what();
      }
      rep.add_advisory("T:allpolys(2f)", odd_sq, note);
    }
  }
  return rep;
}

Report validate_singular_sphere(const KnotDatum& d) {
  d.check_shape();
  if (d.kind != KnotKind::GeneralSingularSphere) {
    throw Error("validate_singular_sphere expects a general singular kind");
  }
  Report rep;
  int n = d.n;
  auto sub = try_derive(d, rep, "T:sstrata(1-3)");
  if (!sub) return rep;

  bool dual_ab = true;
  std::string note_ab;
  for (int i = 1; i <= n - 3; ++i) {
    LaurentPoly rhs = sub->b_at(n - 2 - i).to_laurent().reciprocal() *
                      t_minus_one_pow(d.betti(i)).to_laurent();
    if (!similar(sub->a_at(i).to_laurent(), rhs, Ring::Lambda)) {
      dual_ab = false;
      note_ab = "fails at a_" + std::to_string(i);
      break;
    }
  }
  rep.add("T:sstrata(4)", dual_ab, note_ab);

  bool dual_c = true;
  std::string note_c;
  for (int i = 1; i <= n - 2; ++i) {
    if (!reciprocal_dual(sub->c_at(i), sub->c_at(n - 1 - i))) {
      dual_c = false;
      note_c = "fails at c_" + std::to_string(i);
      break;
    }
  }
  rep.add("T:sstrata(5)", dual_c, note_c);

  bool bnorm = true;
  std::string note_b;
  for (int i = 1; i <= n - 3 && bnorm; ++i) {
    bnorm = unit_at_one(sub->b_at(i));
    if (!bnorm) note_b = "b_" + std::to_string(i) + "(1) is not +-1";
  }
  rep.add("T:sstrata(6)", bnorm, note_b);

  bool cnorm = true;
  std::string note_cn;
  for (int i = 1; i <= n - 2 && cnorm; ++i) {
    cnorm = unit_at_one(sub->c_at(i));
    if (!cnorm) note_cn = "c_" + std::to_string(i) + "(1) is not +-1";
  }
  rep.add("T:sstrata(7)", cnorm, note_cn);

  // Boundary knot: nu_i = r_i (t-1)^{b_i} with r_P ~ r_Q(1/t), P+Q = n-2.
  bool boundary = true;
  std::string note_r;
  std::vector<PrimitivePoly> r(static_cast<size_t>(std::max(n - 3, 0)) + 1,
                               PrimitivePoly::one());
  for (int i = 1; i <= n - 3 && boundary; ++i) {
    auto [k, rest] = strip_t_minus_one(d.nu_at(i));
    if (k != d.betti(i)) {
      boundary = false;
      note_r = "nu_" + std::to_string(i) + " has (t-1)-power " +
               std::to_string(k) + ", expected " + std::to_string(d.betti(i));
      break;
    }
    r[static_cast<size_t>(i)] = rest;
    if (!unit_at_one(rest)) {
      boundary = false;
      note_r = "r_" + std::to_string(i) + "(1) is not +-1";
    }
  }
  for (int p = 1; boundary && p <= n - 3; ++p) {
    int q = n - 2 - p;
    if (q < 1 || q > n - 3) continue;
    if (!reciprocal_dual(r[static_cast<size_t>(p)],
                         r[static_cast<size_t>(q)])) {
      boundary = false;
      note_r = "r_" + std::to_string(p) + " !~ r_" + std::to_string(q) +
               "(1/t)";
    }
  }
  rep.add("T:boundary", boundary, note_r);

  bool duality = true;
  std::string note_d;
  for (int q = 1; q <= n - 2; ++q) {
    LaurentPoly rhs = d.lambda_at(n - 1 - q).to_laurent().reciprocal() *
                      t_minus_one_pow(d.betti(q - 1)).to_laurent();
    if (!similar(d.mu_at(q).to_laurent(), rhs, Ring::Lambda)) {
      duality = false;
      note_d = "fails at mu_" + std::to_string(q);
      break;
    }
  }
  rep.add("T:duality*", duality, note_d);
  return rep;
}

Report validate(const KnotDatum& d,
                const std::optional<PairingPresentation>& witness) {
  if (d.kind == KnotKind::GeneralSingularSphere) {
    return validate_singular_sphere(d);
  }
  return validate_disk_knot(d, witness);
}

Report levine_validate(const SphereKnotPolys& s) {
  Report rep;
  int n = s.n;
  if (static_cast<int>(s.p.size()) != n - 2) {
    throw Error("sphere polynomial list must have n-2 entries");
  }
  auto p_at = [&](int i) { return at_or_one(s.p, i); };

  bool dual = true;
  std::string note;
  for (int i = 1; i <= n - 2; ++i) {
    if (!reciprocal_dual(p_at(i), p_at(n - 1 - i))) {
      dual = false;
      note = "fails at p_" + std::to_string(i);
      break;
    }
  }
  rep.add("levine(1)", dual, note);

  bool norm = true;
  std::string note2;
  for (int i = 1; i <= n - 2; ++i) {
    if (!unit_at_one(p_at(i))) {
      norm = false;
      note2 = "p_" + std::to_string(i) + "(1) is not +-1";
      break;
    }
  }
  rep.add("levine(2)", norm, note2);

  if (n % 2 == 1 && ((n - 1) / 2) % 2 == 0) {
    int q = (n - 1) / 2;
    bool odd_sq = false;
    std::string note3;
    try {
      PrimitivePoly nf = normalize_symmetric(p_at(q));
      Rat v = nf.evaluate(-1);
      odd_sq = is_odd_square(v);
      note3 = "normal-form p_" + std::to_string(q) + "(-1) = " + v.get_str();
    } catch (const Error& e) {
      note3 = e.what();
    }
    rep.add("levine(3)", odd_sq, note3);
  }
  return rep;
}

KnotDatum complete_by_duality(const PartialKnotDatum& partial) {
  int n = partial.n;
  if (n < 3) throw Error("dimension must be at least 3");
  size_t want_l = static_cast<size_t>(n - 2);
  size_t want_nu = static_cast<size_t>(std::max(n - 3, 0));
  if (partial.lambda.size() != want_l || partial.mu.size() != want_l ||
      partial.nu.size() != want_nu) {
    throw Error("partial datum has wrong list lengths");
  }
  bool general = partial.kind == KnotKind::GeneralSingularSphere;
  auto betti = [&](int i) {
    if (i < 0 || i >= static_cast<int>(partial.sigma_reduced_betti.size())) {
      return 0;
    }
    return partial.sigma_reduced_betti[static_cast<size_t>(i)];
  };

  KnotDatum out;
  out.n = n;
  out.kind = partial.kind;
  out.sigma_reduced_betti = partial.sigma_reduced_betti;
  out.lambda.assign(want_l, PrimitivePoly::one());
  out.mu.assign(want_l, PrimitivePoly::one());
  out.nu.assign(want_nu, PrimitivePoly::one());

  // mu_j ~ lambda_{n-1-j}(1/t) (t-1)^{B_{j-1}}.
  for (int j = 1; j <= n - 2; ++j) {
    int i = n - 1 - j;  // lambda partner subscript
    const auto& lam = partial.lambda[static_cast<size_t>(i - 1)];
    const auto& mu = partial.mu[static_cast<size_t>(j - 1)];
    auto expected_mu = [&](const PrimitivePoly& l) {
      LaurentPoly e = l.to_laurent().reciprocal();
      if (general) e *= t_minus_one_pow(betti(j - 1)).to_laurent();
      return primitive_part(e);
    };
    if (lam && mu) {
      if (!similar(*mu, expected_mu(*lam), Ring::Lambda)) {
        throw Error("conflicting lambda_" + std::to_string(i) + " / mu_" +
                    std::to_string(j));
      }
      out.lambda[static_cast<size_t>(i - 1)] = *lam;
      out.mu[static_cast<size_t>(j - 1)] = *mu;
    } else if (lam) {
      out.lambda[static_cast<size_t>(i - 1)] = *lam;
      out.mu[static_cast<size_t>(j - 1)] = expected_mu(*lam);
    } else if (mu) {
      LaurentPoly stripped = mu->to_laurent();
      if (general) {
        stripped = divide_exact(stripped,
                                t_minus_one_pow(betti(j - 1)).to_laurent());
      }
      out.mu[static_cast<size_t>(j - 1)] = *mu;
      out.lambda[static_cast<size_t>(i - 1)] =
          primitive_part(stripped.reciprocal());
    } else {
      throw Error("dual pair lambda_" + std::to_string(i) + " / mu_" +
                  std::to_string(j) + " has no supplied member");
    }
  }

  // nu_P and nu_Q with P+Q = n-2: r_P ~ r_Q(1/t) after stripping the
  // (t-1)^{B} factors.
  auto strip = [&](const PrimitivePoly& v, int idx) {
    auto q = try_divide(v.to_laurent(), t_minus_one_pow(betti(idx)).to_laurent());
    if (!q) {
      throw Error("nu_" + std::to_string(idx) + " lacks its (t-1)^" +
                  std::to_string(betti(idx)) + " factor");
    }
    return primitive_part(*q);
  };
  for (int p = 1; p <= n - 3; ++p) {
    int q = n - 2 - p;
    if (q < 1 || q > n - 3 || p > q) continue;
    const auto& vp = partial.nu[static_cast<size_t>(p - 1)];
    const auto& vq = partial.nu[static_cast<size_t>(q - 1)];
    if (vp && vq) {
      PrimitivePoly rp = strip(*vp, p), rq = strip(*vq, q);
      if (!reciprocal_dual(rp, rq)) {
        throw Error("conflicting nu_" + std::to_string(p) + " / nu_" +
                    std::to_string(q));
      }
      out.nu[static_cast<size_t>(p - 1)] = *vp;
      out.nu[static_cast<size_t>(q - 1)] = *vq;
    } else if (vp || vq) {
      int have = vp ? p : q;
      int miss = vp ? q : p;
      const PrimitivePoly& v = vp ? *vp : *vq;
      PrimitivePoly r = strip(v, have);
      LaurentPoly other = r.to_laurent().reciprocal() *
                          t_minus_one_pow(betti(miss)).to_laurent();
      out.nu[static_cast<size_t>(have - 1)] = v;
      out.nu[static_cast<size_t>(miss - 1)] = primitive_part(other);
    } else {
      throw Error("dual pair nu_" + std::to_string(p) + " / nu_" +
                  std::to_string(q) + " has no supplied member");
    }
  }
  out.check_shape();
  return out;
}

bool check_division_corollary(const KnotDatum& d) {
  if (d.kind == KnotKind::GeneralSingularSphere) {
    throw Error("division corollary applies to disk-knot kinds");
  }
  LaurentPoly num = LaurentPoly::one();
  LaurentPoly den = LaurentPoly::one();
  for (int i = 1; 2 * i - 1 <= d.n - 2; ++i) {
    num *= d.mu_at(2 * i - 1).to_laurent();
    num *= d.nu_at(2 * i - 1).to_laurent();
    num *= d.lambda_at(2 * i).to_laurent();
    den *= d.mu_at(2 * i).to_laurent();
    den *= d.nu_at(2 * i).to_laurent();
    den *= d.lambda_at(2 * i - 1).to_laurent();
  }
  return lambda_unit_ratio(num, den);
}

bool is_odd_square(const Rat& v) {
  if (v.get_den() != 1) return false;
  Int a = abs(v.get_num());
  if (a % 2 == 0) return false;
  return mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

}  // namespace alexpoly
