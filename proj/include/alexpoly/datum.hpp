// The central record for a knot's polynomial invariants and the validators
// for the disk-knot and singular-sphere condition systems.
//
// Index conventions (1-based subscripts, 0-based storage):
//   lambda, mu : subscripts 1..n-2
//   nu         : subscripts 1..n-3
//   sub_a      : subscripts 0..n-3 (a_0 first)
//   sub_b      : subscripts 1..n-3 (b_{n-2} ~ 1 implicitly)
//   sub_c      : subscripts 1..n-2

#pragma once

#include "alexpoly/laurent.hpp"
#include "alexpoly/middim.hpp"
#include "alexpoly/report.hpp"

#include <optional>
#include <vector>

namespace alexpoly {

enum class KnotKind {
  LocallyFlatDisk,
  PointSingularSphere,
  GeneralSingularSphere,
};

std::string kind_name(KnotKind k);
std::optional<KnotKind> kind_from_name(const std::string& s);

struct KnotDatum {
  int n = 3;
  KnotKind kind = KnotKind::LocallyFlatDisk;
  std::vector<int> sigma_reduced_betti;
  std::vector<PrimitivePoly> nu;
  std::vector<PrimitivePoly> lambda;
  std::vector<PrimitivePoly> mu;
  std::optional<std::vector<PrimitivePoly>> sub_a, sub_b, sub_c;
  // Optional per-degree torsion invariants, parallel to nu/lambda/mu.
  std::optional<std::vector<std::vector<PrimitivePoly>>> nu_inv, lambda_inv,
      mu_inv;

  int lambda_count() const { return n - 2; }
  int nu_count() const { return n > 3 ? n - 3 : 0; }
  // 1-based accessors; out-of-range subscripts read as 1.
  PrimitivePoly lambda_at(int i) const;
  PrimitivePoly mu_at(int i) const;
  PrimitivePoly nu_at(int i) const;
  int betti(int i) const;  // reduced Betti of the singular set, 0 past the end

  static KnotDatum trivial(int n, KnotKind kind = KnotKind::LocallyFlatDisk);
  void check_shape() const;  // throws on malformed list lengths
};

// a_0 for the subpolynomial ladder: 1 for disk kinds, (t-1)^b0 for general
// singular sets.
PrimitivePoly a_zero(const KnotDatum& d);

// Fills sub_a/sub_b/sub_c by dividing in from the top of the interleaved
// sequence; throws Error naming the failing index when a division fails or
// the bottom consistency mu_1 ~ c_1 a_0 is violated.
KnotDatum derive_subpolynomials(const KnotDatum& d);

Report validate_disk_knot(
    const KnotDatum& d,
    const std::optional<PairingPresentation>& middim_witness = std::nullopt);
Report validate_singular_sphere(const KnotDatum& d);
Report validate(const KnotDatum& d,
                const std::optional<PairingPresentation>& witness = std::nullopt);

struct SphereKnotPolys {
  int n = 3;
  std::vector<PrimitivePoly> p;  // p_1..p_{n-2}
};

Report levine_validate(const SphereKnotPolys& s);

struct PartialKnotDatum {
  int n = 3;
  KnotKind kind = KnotKind::LocallyFlatDisk;
  std::vector<int> sigma_reduced_betti;
  std::vector<std::optional<PrimitivePoly>> nu, lambda, mu;
};

// Fills the missing member of every dual pair; checks consistency when both
// members are supplied and errors on conflict.
KnotDatum complete_by_duality(const PartialKnotDatum& partial);

// The alternating product of mu, nu, lambda over odd/even subscripts is a
// Lambda-unit.  Disk kinds only.
bool check_division_corollary(const KnotDatum& d);

// |v| is an odd perfect square.
bool is_odd_square(const Rat& v);

}  // namespace alexpoly
