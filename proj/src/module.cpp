#include "alexpoly/module.hpp"

#include <algorithm>

namespace alexpoly {

TorsionModule TorsionModule::cyclic(const PrimitivePoly& p) {
  TorsionModule m;
  if (!p.is_one()) m.invariants.push_back(p);
  return m;
}

TorsionModule TorsionModule::from_invariants(std::vector<PrimitivePoly> inv) {
  TorsionModule m;
  m.invariants = rechain(std::move(inv));
  return m;
}

TorsionModule TorsionModule::free_module(int rank) {
  TorsionModule m;
  m.free_rank = rank;
  return m;
}

bool TorsionModule::operator==(const TorsionModule& o) const {
  if (free_rank != o.free_rank) return false;
  auto a = rechain(invariants);
  auto b = rechain(o.invariants);
  return a == b;
}

std::vector<PrimitivePoly> rechain(std::vector<PrimitivePoly> inv) {
  // Drop units, then run gcd/lcm passes until each entry divides the next.
  std::vector<PrimitivePoly> v;
  for (auto& p : inv) {
    if (!p.is_one()) v.push_back(p);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      for (size_t j = i + 1; j < v.size(); ++j) {
        PrimitivePoly g = poly_gcd(v[i], v[j]);
        if (similar(g, v[i], Ring::Gamma) || similar(g, v[j], Ring::Gamma)) {
          // Already comparable; just order them gcd-first.
          if (similar(g, v[j], Ring::Gamma) && !similar(g, v[i], Ring::Gamma)) {
            std::swap(v[i], v[j]);
            changed = true;
          }
          continue;
        }
        PrimitivePoly l = divide_class(mul_class(v[i], v[j]), g);
        v[i] = g;
        v[j] = l;
        changed = true;
      }
    }
  }
  std::vector<PrimitivePoly> out;
  for (auto& p : v) {
    if (!p.is_one()) out.push_back(p);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const PrimitivePoly& a, const PrimitivePoly& b) {
                     return a.width() < b.width();
                   });
  return out;
}

TorsionModule module_from_presentation(const GammaMatrix& a) {
  SnfResult s = smith_normal_form(a);
  TorsionModule m;
  int nmin = std::min(a.rows(), a.cols());
  int rank = 0;
  for (int i = 0; i < nmin; ++i) {
    const LaurentPoly& d = s.d.at(i, i);
    if (d.is_zero()) continue;
    ++rank;
    PrimitivePoly p = primitive_part(d);
    if (!p.is_one()) m.invariants.push_back(p);
  }
  m.free_rank = a.cols() - rank;
  m.form = InvariantForm::Chain;
  return m;
}

PrimitivePoly associated_polynomial(const TorsionModule& m) {
  if (m.free_rank > 0) throw Error("module not torsion");
  LaurentPoly prod = LaurentPoly::one();
  for (const auto& p : m.invariants) prod *= p.to_laurent();
  return primitive_part(prod);
}

std::map<PrimitivePoly, TorsionModule> primary_decomposition(
    const TorsionModule& m, int degree_bound) {
  if (m.free_rank > 0) throw Error("module not torsion");
  std::map<PrimitivePoly, TorsionModule> out;
  for (const auto& inv : m.invariants) {
    std::map<PrimitivePoly, long> mult;
    for (const auto& f : factor_rational(inv, degree_bound)) ++mult[f];
    for (const auto& [p, k] : mult) {
      TorsionModule& mod = out[p];
      mod.form = InvariantForm::Primary;
      mod.invariants.push_back(pow_class(p, k));
    }
  }
  return out;
}

namespace {

std::vector<PrimitivePoly> pairwise_gcds(const TorsionModule& a,
                                         const TorsionModule& b) {
  std::vector<PrimitivePoly> out;
  for (const auto& p : a.invariants) {
    for (const auto& q : b.invariants) {
      PrimitivePoly g = poly_gcd(p, q);
      if (!g.is_one()) out.push_back(g);
    }
  }
  return out;
}

}  // namespace

TorsionModule tensor_product(const TorsionModule& a, const TorsionModule& b,
                             bool* both_free_flag) {
  if (both_free_flag) *both_free_flag = a.free_rank > 0 && b.free_rank > 0;
  std::vector<PrimitivePoly> inv;
  for (int i = 0; i < b.free_rank; ++i) {
    for (const auto& p : a.invariants) inv.push_back(p);
  }
  for (int i = 0; i < a.free_rank; ++i) {
    for (const auto& q : b.invariants) inv.push_back(q);
  }
  for (auto& g : pairwise_gcds(a, b)) inv.push_back(g);
  TorsionModule r;
  r.free_rank = a.free_rank + b.free_rank;
  r.invariants = rechain(std::move(inv));
  return r;
}

TorsionModule torsion_product(const TorsionModule& a, const TorsionModule& b) {
  TorsionModule r;
  r.invariants = rechain(pairwise_gcds(a, b));
  return r;
}

TorsionModule direct_sum(const TorsionModule& a, const TorsionModule& b) {
  TorsionModule r;
  r.free_rank = a.free_rank + b.free_rank;
  std::vector<PrimitivePoly> inv = a.invariants;
  inv.insert(inv.end(), b.invariants.begin(), b.invariants.end());
  r.invariants = rechain(std::move(inv));
  return r;
}

long q_dimension(const TorsionModule& m) {
  if (m.free_rank > 0) throw Error("infinite dimensional");
  long sum = 0;
  for (const auto& p : m.invariants) sum += p.width();
  return sum;
}

bool is_type_K(const TorsionModule& m) {
  if (m.free_rank > 0) return false;
  for (const auto& p : m.invariants) {
    if (p.evaluate(1) == 0) return false;
  }
  return true;
}

}  // namespace alexpoly
