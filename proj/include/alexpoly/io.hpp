// Datum file parsing and canonical serialization.
//
// Datum grammar (line oriented, fixed field order for byte-stable output):
//   n: 4
//   kind: locally_flat_disk
//   sigma_reduced_betti: [0, 1]
//   nu: [[0; 2, -5, 2]]
//   lambda: [[0; -2, 1], [0; -1, 2]]
//   mu: [[0; 1], [0; -1, 2]]
// optional trailing sections: sub_a/sub_b/sub_c (polynomial lists) and
// nu_inv/lambda_inv/mu_inv (lists of {free: n, inv: [...]} module literals).
// A polynomial literal [lo; c0, c1, ...] means sum c_i t^(lo+i); `_` marks
// an unknown entry in a partial datum.

#pragma once

#include "alexpoly/constructions.hpp"
#include "alexpoly/datum.hpp"
#include "alexpoly/matrix.hpp"

#include <string>
#include <vector>

namespace alexpoly {

class ParseError : public Error {
 public:
  ParseError(int line, int col, const std::string& what)
      : Error("line " + std::to_string(line) + ", col " + std::to_string(col) +
              ": " + what),
        line(line),
        col(col) {}
  int line, col;
};

// Non-canonical polynomial entries are normalized with a warning appended.
KnotDatum parse_datum(const std::string& text,
                      std::vector<std::string>* warnings = nullptr);
PartialKnotDatum parse_partial_datum(const std::string& text,
                                     std::vector<std::string>* warnings = nullptr);
std::string serialize_datum(const KnotDatum& d);

SphereKnotPolys parse_sphere_polys(const std::string& text,
                                   std::vector<std::string>* warnings = nullptr);

// Single polynomial literal, e.g. "[-1; -2, 5, -2]".
PrimitivePoly parse_poly_literal(const std::string& text,
                                 std::vector<std::string>* warnings = nullptr);
// Laurent form that keeps the unit (no normalization).
LaurentPoly parse_laurent_literal(const std::string& text);

// Integer matrix literal: rows of comma-separated integers joined by ';',
// e.g. "1,0;1,1".  The empty string is the 0x0 matrix.
IntMatrix parse_int_matrix(const std::string& text);

// Polynomial matrix literal: entries are polynomial literals separated by
// ',' within a row and ';' between rows (separators outside brackets).
// Bare integers are accepted as constant entries.
GammaMatrix parse_gamma_matrix(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace alexpoly
