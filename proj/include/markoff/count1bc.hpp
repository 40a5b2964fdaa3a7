#pragma once

// Existence and closed-form count of minimal triples of the shape (1, b, c).
//
// Writing m - 1 = 5^(2*alpha) * A^2 * B^2 * C with C square-free, every prime
// of A satisfying (p/5) = -1, every prime of B satisfying (p/5) = +1, 5
// dividing neither A nor B: a triple (1, b, c) exists iff no prime of C has
// (p/5) = -1, and then the number of minimal (1, b, c) equals
//     sum over d | B of 2^( w(B^2 C / d^2) + l - 1 ),   l = (C/5).

#include <optional>
#include <utility>
#include <vector>

#include "markoff/forms.hpp"
#include "markoff/integers.hpp"
#include "markoff/kernel.hpp"

namespace markoff {

template <Integer I>
struct Decomposition1bc {
  unsigned alpha = 0;
  I A{1}, B{1}, C{1};
  I S{1};  // 5^alpha * A * B, so that m - 1 = S^2 * C
};

template <Integer I>
struct DecompositionOutcome {
  std::optional<Decomposition1bc<I>> decomposition;
  // prime with odd exponent in m-1 and (p/5) = -1 that blocks existence
  std::optional<I> blocking_prime;
};

template <Integer I>
DecompositionOutcome<I> decompose_m1(const I& m) {
  if (m < I(2)) throw domain_error("decompose_m1 requires m >= 2");
  Factorization<I> f = factorize(I(m - I(1)));
  Decomposition1bc<I> d;
  for (const auto& [p, e] : f.factors) {
    int chi = legendre5(p);
    if (chi == -1 && e % 2 != 0) return {std::nullopt, p};
    I half(1);
    for (unsigned i = 0; i < e / 2; ++i) half = half * p;
    if (p == I(5))
      d.alpha = e / 2;
    else if (chi == -1)
      d.A = d.A * half;
    else
      d.B = d.B * half;
    if (e % 2 != 0) d.C = d.C * p;
  }
  I five_alpha(1);
  for (unsigned i = 0; i < d.alpha; ++i) five_alpha = five_alpha * I(5);
  d.S = five_alpha * d.A * d.B;
  if (!(d.S * d.S * d.C == m - I(1)))
    throw invariant_error("decomposition does not multiply back to m-1, m=" +
                          to_dec(m));
  return {std::move(d), std::nullopt};
}

template <Integer I>
bool exists_1bc(const I& m) {
  return decompose_m1(m).decomposition.has_value();
}

template <Integer I>
struct Count1bcResult {
  bool exists = false;
  I count{0};
  int l = 0;  // (C/5); 0 or +1 whenever the count is meaningful
  std::vector<std::pair<I, I>> terms;  // (d, contribution), d ascending
};

template <Integer I>
Count1bcResult<I> count_1bc(const I& m) {
  DecompositionOutcome<I> out = decompose_m1(m);
  if (!out.decomposition) return {};
  const Decomposition1bc<I>& d = *out.decomposition;
  Count1bcResult<I> result;
  result.exists = true;
  result.l = legendre5(d.C);
  if (result.l == -1)
    throw invariant_error("square-free part with (C/5) = -1 survived the "
                          "existence test, m=" + to_dec(m));
  Factorization<I> fb = factorize(d.B);
  Factorization<I> fc = factorize(d.C);
  for (const I& div : divisors(fb)) {
    // w(B^2 C / d^2) from the exponent lattice: a prime survives unless its
    // full power in B is cancelled by d and it does not divide C
    unsigned w = 0;
    for (const auto& [p, e] : fb.factors) {
      unsigned ed = 0;
      I rest = div;
      while (rest % p == I(0)) {
        rest = rest / p;
        ++ed;
      }
      bool in_c = d.C % p == I(0);
      if (2 * e - 2 * ed + (in_c ? 1 : 0) > 0) ++w;
    }
    for (const auto& [p, e] : fc.factors)
      if (!(d.B % p == I(0))) ++w;
    int exponent = static_cast<int>(w) + result.l - 1;
    if (exponent < 0)
      throw invariant_error("negative exponent in the (1,b,c) counting "
                            "formula, m=" + to_dec(m));
    I term(1);
    for (int i = 0; i < exponent; ++i) term = term * I(2);
    result.terms.emplace_back(div, term);
    result.count = result.count + term;
  }
  return result;
}

// The minimal triples with first component 1, read off the forms-based
// enumerator; this is the oracle the closed-form count is tested against.
template <Integer I>
std::vector<MinimalTriple<I>> enumerate_1bc(const I& m) {
  std::vector<MinimalTriple<I>> out;
  for (const MinimalTriple<I>& t : enumerate_minimal_via_forms(m).triples)
    if (t.a() == I(1)) out.push_back(t);
  return out;
}

}  // namespace markoff
