#pragma once

// Exhaustive enumeration of all minimal triples for a given m, using the
// exact bounds 1 <= a, 2a^2 <= m; a <= b, a^2 + b^2 <= m; and
// max(3ab, b) <= c <= 3ab + sqrt(m - a^2 - b^2).

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "markoff/integers.hpp"
#include "markoff/triple.hpp"

namespace markoff {

template <Integer I>
struct MinimalSet {
  I m;
  std::vector<MinimalTriple<I>> triples;  // lexicographic by (a, b, c)
  std::vector<int> orders;                // parallel to triples, values 1..3
  std::size_t n1 = 0, n2 = 0, n3 = 0;
  std::size_t n_improper = 0;

  std::size_t total() const { return triples.size(); }

  std::vector<MinimalTriple<I>> by_order(int k) const {
    std::vector<MinimalTriple<I>> out;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (orders[i] == k) out.push_back(triples[i]);
    return out;
  }

  friend bool operator==(const MinimalSet& x, const MinimalSet& y) {
    return x.m == y.m && x.triples == y.triples && x.orders == y.orders;
  }
};

struct CountSummary {
  std::size_t total, n1, n2, n3, n_improper;
  friend bool operator==(const CountSummary&, const CountSummary&) = default;
};

template <Integer I>
CountSummary count_summary(const MinimalSet<I>& s) {
  return {s.total(), s.n1, s.n2, s.n3, s.n_improper};
}

// Strategy for resolving c once (a, b) is fixed.
enum class CResolve {
  kScan,   // walk c over [max(3ab, b), 3ab + sqrt(m - a^2 - b^2)]
  kSolve,  // discriminant test on c^2 - 3ab*c + (a^2 + b^2 - m) = 0
  kAuto,   // scan up to m = 10^5, solve above
};

namespace detail {

// Sorts, deduplicates, classifies by order and checks the partition laws
// (#O2 even, #O3 divisible by 3).
template <Integer I>
MinimalSet<I> build_minimal_set(const I& m,
                                std::vector<MinimalTriple<I>> triples) {
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  MinimalSet<I> set{m, std::move(triples), {}, 0, 0, 0, 0};
  set.orders.reserve(set.triples.size());
  for (const MinimalTriple<I>& t : set.triples) {
    int k = ord_of(t);
    set.orders.push_back(k);
    (k == 1 ? set.n1 : k == 2 ? set.n2 : set.n3) += 1;
    if (t.improper()) ++set.n_improper;
  }
  if (set.n2 % 2 != 0)
    throw invariant_error("#O2(m) not even for m=" + to_dec(m));
  if (set.n3 % 3 != 0)
    throw invariant_error("#O3(m) not divisible by 3 for m=" + to_dec(m));
  return set;
}

}  // namespace detail

// Brute-force enumeration within the exact bounds. When `mod4_shortcut` is
// set, m = 3 (mod 4) returns empty without scanning (no solutions exist
// there); the default scans regardless so tests can watch the two agree.
template <Integer I>
MinimalSet<I> enumerate_minimal_bruteforce(const I& m,
                                           CResolve resolve = CResolve::kAuto,
                                           bool mod4_shortcut = false) {
  if (m < I(2))
    throw domain_error("enumeration requires m >= 2, got " + to_dec(m));
  if (mod4_shortcut && mod_small(m, 4) == 3)
    return detail::build_minimal_set(m, {});
  bool solve = resolve == CResolve::kSolve ||
               (resolve == CResolve::kAuto && I(100000) < m);
  std::vector<MinimalTriple<I>> found;
  for (I a(1); a * a * I(2) <= m; a = a + I(1)) {
    for (I b = a; a * a + b * b <= m; b = b + I(1)) {
      I r = m - a * a - b * b;  // = c * (c - 3ab) for a solution
      I ab3 = I(3) * a * b;
      if (solve) {
        // c = (3ab + sqrt(9a^2b^2 + 4r)) / 2; the other root is <= 0
        I disc = ab3 * ab3 + I(4) * r, s;
        if (!is_perfect_square(disc, s)) continue;
        I c = (ab3 + s) / I(2);
        if ((ab3 + s) % I(2) == I(0) && r == c * (c - ab3))
          found.push_back(
              MinimalTriple<I>::make(OrderedTriple<I>::make(m, a, b, c)));
      } else {
        I lo = (b < ab3) ? ab3 : b;  // max(3ab, b); keeps c >= b explicit
        for (I c = lo; (c - ab3) * (c - ab3) <= r; c = c + I(1)) {
          if (c * (c - ab3) == r)
            found.push_back(
                MinimalTriple<I>::make(OrderedTriple<I>::make(m, a, b, c)));
        }
      }
    }
  }
  return detail::build_minimal_set(m, std::move(found));
}

}  // namespace markoff
