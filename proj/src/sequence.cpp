#include "alexpoly/sequence.hpp"

namespace alexpoly {

std::vector<PrimitivePoly> subpolynomials(const PolySequence& seq,
                                          Direction dir) {
  int n = static_cast<int>(seq.terms.size());
  std::vector<PrimitivePoly> delta(static_cast<size_t>(n) + 1,
                                   PrimitivePoly::one());
  if (dir == Direction::Left) {
    // delta[0] is delta_1 = 1; delta_{i+1} = Delta_i / delta_i.
    for (int i = 1; i <= n; ++i) {
      const PrimitivePoly& term = seq.terms[static_cast<size_t>(i - 1)];
      auto q = try_divide(term.to_laurent(),
                          delta[static_cast<size_t>(i - 1)].to_laurent());
      if (!q) {
        auto [qq, rem] = divide_rem(term.to_laurent(),
                                    delta[static_cast<size_t>(i - 1)].to_laurent());
        throw SequenceError(i, rem);
      }
      delta[static_cast<size_t>(i)] = primitive_part(*q);
    }
  } else {
    // delta[n] is delta_{n+1} = 1; delta_i = Delta_i / delta_{i+1}.
    for (int i = n; i >= 1; --i) {
      const PrimitivePoly& term = seq.terms[static_cast<size_t>(i - 1)];
      auto q = try_divide(term.to_laurent(),
                          delta[static_cast<size_t>(i)].to_laurent());
      if (!q) {
        auto [qq, rem] = divide_rem(term.to_laurent(),
                                    delta[static_cast<size_t>(i)].to_laurent());
        throw SequenceError(i, rem);
      }
      delta[static_cast<size_t>(i - 1)] = primitive_part(*q);
    }
  }
  return delta;
}

ExactCheck verify_exact(const PolySequence& seq) {
  ExactCheck res;
  std::vector<PrimitivePoly> delta;
  try {
    delta = subpolynomials(seq, Direction::Left);
  } catch (const SequenceError&) {
    return res;
  }
  LaurentPoly odd = LaurentPoly::one();
  LaurentPoly even = LaurentPoly::one();
  for (size_t i = 0; i < seq.terms.size(); ++i) {
    if (i % 2 == 0) {
      odd *= seq.terms[i].to_laurent();
    } else {
      even *= seq.terms[i].to_laurent();
    }
  }
  if (!lambda_unit_ratio(odd, even)) return res;
  res.exact = true;
  res.delta = std::move(delta);
  return res;
}

PolySequence recover_missing_third(const std::map<int, PrimitivePoly>& known,
                                   const std::map<int, PrimitivePoly>& shared,
                                   int n) {
  auto get_shared = [&](int idx) {
    auto it = shared.find(idx);
    if (it != shared.end()) return it->second;
    return PrimitivePoly::one();  // boundary deltas
  };
  auto get_known = [&](int idx) {
    auto it = known.find(idx);
    if (it != known.end()) return it->second;
    return PrimitivePoly::one();  // implicit padding
  };
  PolySequence seq;
  seq.terms.assign(static_cast<size_t>(n), PrimitivePoly::one());
  for (int i = 1; i <= n; ++i) {
    if (known.count(i)) {
      seq.terms[static_cast<size_t>(i - 1)] = known.at(i);
      continue;
    }
    if (known.count(i - 1) == 0 && i > 1) {
      throw Error("recover_missing_third: index " + std::to_string(i - 1) +
                  " and " + std::to_string(i) + " are both missing");
    }
    // Delta_i = (Delta_{i-1}/delta_{i-1}) * (Delta_{i+1}/delta_{i+2}).
    PrimitivePoly left = get_known(i - 1);
    PrimitivePoly right = get_known(i + 1);
    PrimitivePoly dl = get_shared(i - 1);
    PrimitivePoly dr = get_shared(i + 2);
    auto lq = try_divide(left.to_laurent(), dl.to_laurent());
    if (!lq) {
      throw Error("recover_missing_third: shared factor at delta index " +
                  std::to_string(i - 1) + " does not divide its term");
    }
    auto rq = try_divide(right.to_laurent(), dr.to_laurent());
    if (!rq) {
      throw Error("recover_missing_third: shared factor at delta index " +
                  std::to_string(i + 2) + " does not divide its term");
    }
    seq.terms[static_cast<size_t>(i - 1)] = primitive_part(*lq * *rq);
  }
  ExactCheck chk = verify_exact(seq);
  if (!chk.exact) {
    throw Error("recover_missing_third: reconstructed sequence is not exact");
  }
  return seq;
}

}  // namespace alexpoly
