// Exact sequences of polynomials: each term factors as delta_i * delta_{i+1}
// with the deltas computed by dividing in from the ends.

#pragma once

#include "alexpoly/laurent.hpp"

#include <map>
#include <vector>

namespace alexpoly {

struct PolySequence {
  // terms[0] is Delta_1; the sequence is implicitly padded by 1's.
  std::vector<PrimitivePoly> terms;
};

enum class Direction { Left, Right };

class SequenceError : public Error {
 public:
  SequenceError(int index, const LaurentPoly& remainder)
      : Error("subpolynomial division failed at index " +
              std::to_string(index) + ", remainder " + remainder.to_literal()),
        index(index),
        remainder(remainder) {}
  int index;
  LaurentPoly remainder;
};

// delta list of length n+1 (delta_1..delta_{n+1} for terms Delta_1..Delta_n)
// with Delta_i ~ delta_i * delta_{i+1}; the chosen boundary delta is 1.
std::vector<PrimitivePoly> subpolynomials(const PolySequence& seq,
                                          Direction dir);

struct ExactCheck {
  bool exact = false;
  std::vector<PrimitivePoly> delta;  // filled when extraction succeeded
};

// True iff extraction from the left succeeds and the alternating product of
// the terms is a Lambda-unit.
ExactCheck verify_exact(const PolySequence& seq);

// Reconstructs missing terms from two-of-three coverage plus the junction
// deltas, then verifies exactness.  Indices are 1-based; shared maps a
// delta index to its value (boundary deltas default to 1).
PolySequence recover_missing_third(const std::map<int, PrimitivePoly>& known,
                                   const std::map<int, PrimitivePoly>& shared,
                                   int n);

}  // namespace alexpoly
