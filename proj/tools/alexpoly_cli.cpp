// Command-line front end: validation, subpolynomial derivation, duality
// completion, knot constructions, pairing presentations, Smith normal form,
// and factorization, over the datum file format.

#include <CLI11.hpp>

#include "alexpoly/constructions.hpp"
#include "alexpoly/factor.hpp"
#include "alexpoly/io.hpp"

#include <iostream>

using namespace alexpoly;

namespace {

KnotDatum load_datum(const std::string& path) {
  std::vector<std::string> warnings;
  KnotDatum d = parse_datum(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return d;
}

void emit_datum(const KnotDatum& d, const std::string& out_path) {
  std::string text = serialize_datum(d);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_file(out_path, text);
  }
}

int report_exit(const Report& rep) {
  rep.render(std::cout);
  return rep.all_pass() ? 0 : 1;
}

std::optional<PairingPresentation> witness_from(const std::string& tau,
                                                const std::string& r, int q) {
  if (tau.empty() && r.empty()) return std::nullopt;
  PairingPresentation p;
  p.tau = parse_int_matrix(tau);
  p.r = parse_int_matrix(r);
  p.q = q;
  return p;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Alexander-polynomial computations for disk and singular sphere knots"};
  app.require_subcommand(1);

  std::string in_path, in2_path, out_path;
  std::string tau_lit, r_lit, c_lit, matrix_lit, poly_lit;
  std::string coeff_free;
  std::vector<std::string> coeff_tor;
  std::vector<int> betti;
  int q = 2;
  int twist = 0;
  int spin_k = -1;
  int bound = kDefaultFactorBound;

  auto* validate_cmd = app.add_subcommand("validate", "run the validator for the datum's kind");
  validate_cmd->add_option("file", in_path)->required();
  validate_cmd->add_option("--tau", tau_lit, "pairing witness tau, e.g. 1,0;1,1");
  validate_cmd->add_option("--r", r_lit, "pairing witness R");

  auto* derive_cmd = app.add_subcommand("derive-subpolys", "fill sub_a/sub_b/sub_c by dividing in");
  derive_cmd->add_option("file", in_path)->required();
  derive_cmd->add_option("-o,--out", out_path);

  auto* complete_cmd = app.add_subcommand("complete", "fill missing dual entries (`_`) by duality");
  complete_cmd->add_option("file", in_path)->required();
  complete_cmd->add_option("-o,--out", out_path);

  auto* sum_cmd = app.add_subcommand("sum", "knot sum of two data");
  sum_cmd->add_option("a", in_path)->required();
  sum_cmd->add_option("b", in2_path)->required();
  sum_cmd->add_option("-o,--out", out_path);

  auto* spin_cmd = app.add_subcommand("spin", "frame spin over a manifold given by its Betti numbers");
  spin_cmd->add_option("seed", in_path)->required();
  spin_cmd->add_option("--betti", betti, "B_0,B_1,...,B_k of M")
      ->delimiter(',')
      ->required();
  spin_cmd->add_option("-o,--out", out_path);

  int twist_bound = 64;
  auto* twist_cmd = app.add_subcommand("twistspin", "frame twist-spin with explicit coefficient homology");
  twist_cmd->add_option("seed", in_path)->required();
  twist_cmd->add_option("--free", coeff_free, "free ranks per degree, e.g. 1,0,1");
  twist_cmd
      ->add_option("--zeta", coeff_tor,
                   "torsion invariant DEG:[lo; c...] (repeatable)")
      ->take_all();
  twist_cmd->add_option("--k", spin_k, "dimension of M")->required();
  twist_cmd->add_option("--degree-bound", twist_bound,
                        "max width of a torsion invariant (default 64)");
  twist_cmd->add_option("-o,--out", out_path);

  auto* zeeman_cmd = app.add_subcommand("zeeman", "k-twist spin over the circle");
  zeeman_cmd->add_option("seed", in_path)->required();
  zeeman_cmd->add_option("--k", twist, "twist degree")->required();
  zeeman_cmd->add_option("--degree-bound", twist_bound,
                         "max twist degree (default 64)");
  zeeman_cmd->add_option("-o,--out", out_path);

  auto* suspend_cmd = app.add_subcommand("suspend", "suspension of a datum");
  suspend_cmd->add_option("seed", in_path)->required();
  suspend_cmd->add_option("-o,--out", out_path);

  auto* slice_cmd = app.add_subcommand("slice", "trivial slicing of locally-flat sphere polynomials");
  slice_cmd->add_option("file", in_path, "file with fields n and p")->required();
  slice_cmd->add_option("-o,--out", out_path);

  auto* middim_cmd = app.add_subcommand("middim", "middle-dimension pairing from (tau, R)");
  middim_cmd->add_option("--tau", tau_lit)->required();
  middim_cmd->add_option("--r", r_lit)->required();
  middim_cmd->add_option("--q", q)->required();
  middim_cmd->add_option("--c", c_lit, "claimed shared polynomial to verify");

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form of a polynomial matrix");
  snf_cmd->add_option("--matrix", matrix_lit, "entries like [0; -1, 1],2;0,[0; 1, 1]")->required();

  auto* factor_cmd = app.add_subcommand("factor", "rational factorization and reciprocal-square test");
  factor_cmd->add_option("--poly", poly_lit)->required();
  factor_cmd->add_option("--bound", bound, "degree bound (default 10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // bad verbs and flags are input errors
  }

  try {
    if (*validate_cmd) {
      KnotDatum d = load_datum(in_path);
      int q = (d.n - 1) / 2;
      return report_exit(validate(d, witness_from(tau_lit, r_lit, q)));
    }
    if (*derive_cmd) {
      emit_datum(derive_subpolynomials(load_datum(in_path)), out_path);
      return 0;
    }
    if (*complete_cmd) {
      std::vector<std::string> warnings;
      PartialKnotDatum partial =
          parse_partial_datum(read_file(in_path), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      emit_datum(complete_by_duality(partial), out_path);
      return 0;
    }
    if (*sum_cmd) {
      emit_datum(knot_sum(load_datum(in_path), load_datum(in2_path)), out_path);
      return 0;
    }
    if (*spin_cmd) {
      emit_datum(frame_spin(load_datum(in_path), BettiProfile{betti}),
                 out_path);
      return 0;
    }
    if (*twist_cmd) {
      CoefficientHomology h;
      {
        std::stringstream ss(coeff_free);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
          if (tok.empty()) continue;
          CoefficientHomology::Degree deg;
          deg.free_rank = std::stoi(tok);
          h.degrees.push_back(deg);
        }
      }
      for (const std::string& spec : coeff_tor) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) {
          throw Error("--zeta expects DEG:[lo; c...]");
        }
        int degidx = std::stoi(spec.substr(0, colon));
        if (degidx < 0) throw Error("--zeta degree must be nonnegative");
        while (static_cast<int>(h.degrees.size()) <= degidx) {
          h.degrees.emplace_back();
        }
        std::vector<std::string> warnings;
        PrimitivePoly zeta =
            parse_poly_literal(spec.substr(colon + 1), &warnings);
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        if (zeta.width() > twist_bound) {
          throw Error("torsion invariant exceeds --degree-bound " +
                      std::to_string(twist_bound));
        }
        h.degrees[static_cast<size_t>(degidx)].zetas.push_back(zeta);
      }
      KnotDatum seed = load_datum(in_path);
      TwistSpinResult res = frame_twist_spin(seed, h, seed.n, spin_k);
      if (res.coarsened) {
        std::cerr << "warning: seed lacks invariant attachments; each "
                     "polynomial was treated as a single cyclic invariant\n";
      }
      emit_datum(res.datum, out_path);
      return 0;
    }
    if (*zeeman_cmd) {
      if (twist > twist_bound) {
        throw Error("twist degree exceeds --degree-bound " +
                    std::to_string(twist_bound));
      }
      TwistSpinResult res = zeeman_twist_spin(load_datum(in_path), twist);
      if (res.coarsened) {
        std::cerr << "warning: seed lacks invariant attachments; each "
                     "polynomial was treated as a single cyclic invariant\n";
      }
      emit_datum(res.datum, out_path);
      return 0;
    }
    if (*suspend_cmd) {
      emit_datum(suspension(load_datum(in_path)), out_path);
      return 0;
    }
    if (*slice_cmd) {
      std::vector<std::string> warnings;
      SphereKnotPolys s = parse_sphere_polys(read_file(in_path), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      Report rep = levine_validate(s);
      if (!rep.all_pass()) {
        rep.render(std::cout);
        return 1;
      }
      emit_datum(trivial_slice(s), out_path);
      return 0;
    }
    if (*middim_cmd) {
      PairingPresentation p;
      p.tau = parse_int_matrix(tau_lit);
      p.r = parse_int_matrix(r_lit);
      p.q = q;
      CPolyResult cp = c_polynomial(p);
      std::cout << "c = " << cp.c.to_literal() << "\n";
      bool herm = hermitian_identity_holds(p);
      std::cout << "hermitian: " << (herm ? "pass" : "fail") << "\n";
      DiscriminantResult disc = discriminant(p);
      std::cout << "discriminant identity: "
                << (disc.identity_holds ? "pass" : "fail") << "\n";
      bool ok = herm && disc.identity_holds;
      if (!cp.knot_valid) {
        std::cout << "normalization: fail (det M(1) = "
                  << cp.det_m_at_1.get_str() << ")\n";
        ok = false;
      }
      if (!c_lit.empty()) {
        Report rep = verify_middim_witness(parse_poly_literal(c_lit), p);
        rep.render(std::cout);
        ok = ok && rep.all_pass();
      }
      return ok ? 0 : 1;
    }
    if (*snf_cmd) {
      GammaMatrix a = parse_gamma_matrix(matrix_lit);
      SnfResult s = smith_normal_form(a);
      std::cout << "diagonal: [";
      int nmin = std::min(a.rows(), a.cols());
      for (int i = 0; i < nmin; ++i) {
        if (i) std::cout << ", ";
        std::cout << s.d.at(i, i).to_literal();
      }
      std::cout << "]\n";
      TorsionModule mod = module_from_presentation(a);
      std::cout << "free_rank: " << mod.free_rank << "\n";
      std::cout << "invariants: [";
      for (size_t i = 0; i < mod.invariants.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << mod.invariants[i].to_literal();
      }
      std::cout << "]\n";
      return 0;
    }
    if (*factor_cmd) {
      PrimitivePoly p = parse_poly_literal(poly_lit);
      auto factors = factor_rational(p, bound);
      std::cout << "factors: [";
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << factors[i].to_literal();
      }
      std::cout << "]\n";
      Rat at1 = p.evaluate(1);
      if (at1 == 1 || at1 == -1) {
        auto rs = is_reciprocal_square(p, std::nullopt, bound);
        std::cout << "reciprocal_square: " << (rs.ok ? "true" : "false");
        if (rs.ok) std::cout << ", witness " << rs.witness->to_literal();
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
