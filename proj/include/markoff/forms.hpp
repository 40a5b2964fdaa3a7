#pragma once

// Fundamental solutions of F(x, y) = x^2 - 3a*xy + y^2 = m - a^2 and their
// correspondence with minimal triples having a as first or second component.
//
// A solution (u, v) with v >= 0 is fundamental exactly when one of
//   (1) 0 < v < V,
//   (2) v = 0 and u = sqrt(N),
//   (3) v = V and u = (U + 3aV)/2 = v(3a + 1),
// holds, where N = m - a^2, V = sqrt(N / (3a+2)) and U = sqrt(N (3a+2)).
// All V/U comparisons below are integer cross-multiplications; no real
// square roots are ever taken.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "markoff/enumerate.hpp"
#include "markoff/integers.hpp"
#include "markoff/kernel.hpp"
#include "markoff/triple.hpp"

namespace markoff {

template <Integer I>
class FormContext {
 public:
  static FormContext make(const I& m, const I& a) {
    if (m < I(2)) throw domain_error("form context requires m >= 2");
    if (a < I(1) || !(a * a < m))
      throw domain_error("form context requires 1 <= a < sqrt(m)");
    return FormContext(m, a);
  }

  const I& m() const { return m_; }
  const I& a() const { return a_; }
  const I& N() const { return N_; }        // m - a^2
  I discriminant() const { return I(9) * a_ * a_ - I(4); }

  // F(x, y) = x^2 - 3a*xy + y^2
  I eval(const I& x, const I& y) const {
    return x * x - I(3) * a_ * x * y + y * y;
  }

 private:
  FormContext(const I& m, const I& a) : m_(m), a_(a), N_(m - a * a) {}
  I m_, a_, N_;
};

template <Integer I>
struct FundamentalSolution {
  I u;
  I v;  // >= 0
  friend bool operator==(const FundamentalSolution&,
                         const FundamentalSolution&) = default;
  friend bool operator<(const FundamentalSolution& x,
                        const FundamentalSolution& y) {
    if (!(x.v == y.v)) return x.v < y.v;
    return x.u < y.u;
  }
};

// Element of T_a: (a, b, c) such that (a, b, c) or (b, a, c) is minimal.
template <Integer I>
struct TaElement {
  I a, b, c;
  friend bool operator==(const TaElement&, const TaElement&) = default;
};

namespace detail {

// 1 = below V, 0 = equal to V, -1 = above V, decided by v^2 (3a+2) vs N.
template <Integer I>
int cmp_against_V(const FormContext<I>& ctx, const I& value) {
  I lhs = value * value * (I(3) * ctx.a() + I(2));
  if (lhs < ctx.N()) return 1;
  if (lhs == ctx.N()) return 0;
  return -1;
}

template <Integer I>
int mrs_case(const FormContext<I>& ctx, const FundamentalSolution<I>& s) {
  int matched = 0, which = 0;
  if (I(0) < s.v && cmp_against_V(ctx, s.v) == 1) {
    ++matched;
    which = 1;
  }
  if (s.v == I(0) && s.u * s.u == ctx.N() && I(0) < s.u) {
    ++matched;
    which = 2;
  }
  if (cmp_against_V(ctx, s.v) == 0 && I(0) < s.v &&
      I(2) * s.u == s.v * (I(6) * ctx.a() + I(2))) {
    ++matched;
    which = 3;
  }
  if (matched != 1)
    throw invariant_error("fundamental solution (" + to_dec(s.u) + "," +
                          to_dec(s.v) + ") matches " + std::to_string(matched) +
                          " classification cases, m=" + to_dec(ctx.m()) +
                          ", a=" + to_dec(ctx.a()));
  return which;
}

template <Integer I>
void validate_fundamental(const FormContext<I>& ctx,
                          const FundamentalSolution<I>& s) {
  if (s.v < I(0))
    throw invariant_error("fundamental solution with negative v");
  if (!(ctx.eval(s.u, s.v) == ctx.N()))
    throw invariant_error("claimed fundamental solution does not represent "
                          "N, m=" + to_dec(ctx.m()) + ", a=" + to_dec(ctx.a()));
  mrs_case(ctx, s);
}

}  // namespace detail

// All fundamental solutions of F(x, y) = N, sorted by (v, u). The scan walks
// v upward while v^2 (3a+2) <= N and solves u^2 - 3av*u + (v^2 - N) = 0 by a
// discriminant square test; both roots count strictly below V, only
// u = v(3a+1) on the boundary, and only u = +sqrt(N) at v = 0.
template <Integer I>
std::vector<FundamentalSolution<I>> fundamental_solutions(
    const FormContext<I>& ctx) {
  std::vector<FundamentalSolution<I>> out;
  const I& N = ctx.N();
  I root;
  if (is_perfect_square(N, root))
    out.push_back({root, I(0)});
  I d = ctx.discriminant();
  for (I v(1);; v = v + I(1)) {
    int pos = detail::cmp_against_V(ctx, v);
    if (pos < 0) break;
    if (pos == 0) {
      out.push_back({I(v * (I(3) * ctx.a() + I(1))), v});
      break;  // v = V is the last admissible value
    }
    I disc = d * v * v + I(4) * N, s;
    if (!is_perfect_square(disc, s)) continue;
    I av3 = I(3) * ctx.a() * v;
    if (!((av3 + s) % I(2) == I(0)))
      throw invariant_error("square discriminant with odd parity, m=" +
                            to_dec(ctx.m()));
    out.push_back({I((av3 - s) / I(2)), v});
    out.push_back({I((av3 + s) / I(2)), v});
  }
  for (const auto& s : out) detail::validate_fundamental(ctx, s);
  return out;
}

// Checks that (a, b, c) or (b, a, c) is a minimal triple for ctx.m() and
// returns the corresponding MinimalTriple.
template <Integer I>
MinimalTriple<I> ta_element_as_minimal(const FormContext<I>& ctx,
                                       const TaElement<I>& t) {
  if (!(t.a == ctx.a()))
    throw domain_error("element does not belong to this context's a");
  if (t.a < I(1) || t.b < I(1) || t.c < I(1))
    throw domain_error("element of T_a requires positive components");
  const I& lo = (t.b < t.a) ? t.b : t.a;
  const I& hi = (t.b < t.a) ? t.a : t.b;
  if (t.c < hi) throw domain_error("element of T_a requires c >= max(a, b)");
  return MinimalTriple<I>::make(OrderedTriple<I>::make(ctx.m(), lo, hi, t.c));
}

// Image of a T_a element under the bijection with S_a:
//   (c, b)            when b <= V,
//   (-b, c - 3ab)     when b > V and c - 3ab > 0,
//   (b, 0)            when c = 3ab.
template <Integer I>
FundamentalSolution<I> triple_to_fundamental(const FormContext<I>& ctx,
                                             const TaElement<I>& t) {
  ta_element_as_minimal(ctx, t);  // precondition: t is in T_a
  I phi = t.c - I(3) * t.a * t.b;
  FundamentalSolution<I> s;
  if (phi == I(0))
    s = {t.b, I(0)};
  else if (detail::cmp_against_V(ctx, t.b) >= 0)
    s = {t.c, t.b};
  else
    s = {I(-t.b), std::move(phi)};
  detail::validate_fundamental(ctx, s);
  return s;
}

// Inverse map S_a -> T_a (in the (u, v) = (c, b) naming):
//   v = 0  ->  (a, u, 3a*u)
//   u > 0  ->  (a, v, u)
//   u < 0  ->  (a, -u, v - 3a*u)
template <Integer I>
TaElement<I> fundamental_to_triple(const FormContext<I>& ctx,
                                   const FundamentalSolution<I>& s) {
  detail::validate_fundamental(ctx, s);
  TaElement<I> t;
  if (s.v == I(0))
    t = {ctx.a(), s.u, I(I(3) * ctx.a() * s.u)};
  else if (I(0) < s.u)
    t = {ctx.a(), s.v, s.u};
  else
    t = {ctx.a(), I(-s.u), I(s.v - I(3) * ctx.a() * s.u)};
  ta_element_as_minimal(ctx, t);
  return t;
}

// Second enumerator of the minimal set: collect S_a for every a with
// a^2 < m, pull each solution back to a triple, reorder and deduplicate.
template <Integer I>
MinimalSet<I> enumerate_minimal_via_forms(const I& m) {
  if (m < I(2))
    throw domain_error("enumeration requires m >= 2, got " + to_dec(m));
  std::vector<MinimalTriple<I>> found;
  for (I a(1); a * a < m; a = a + I(1)) {
    FormContext<I> ctx = FormContext<I>::make(m, a);
    for (const FundamentalSolution<I>& s : fundamental_solutions(ctx))
      found.push_back(ta_element_as_minimal(ctx, fundamental_to_triple(ctx, s)));
  }
  return detail::build_minimal_set(m, std::move(found));
}

template <Integer I>
struct CardinalityIdentity {
  I lhs;  // sum over a of #S_a
  I rhs;  // 2 * #minimal - #improper
  bool ok = false;
  // per a: (a, #S_a, #T_a)
  std::vector<std::array<I, 3>> per_a;
};

// The cardinality identity sum_a #S_a = 2 #minimal - #improper, checked
// against a brute-force minimal set, together with #S_a = #T_a for each a.
template <Integer I>
CardinalityIdentity<I> verify_cardinality_identity(const I& m) {
  MinimalSet<I> brute = enumerate_minimal_bruteforce(m);
  CardinalityIdentity<I> out{I(0),
                             I(2) * from_ll<I>(static_cast<long long>(
                                        brute.total())) -
                                 from_ll<I>(static_cast<long long>(
                                     brute.n_improper)),
                             false,
                             {}};
  bool per_a_ok = true;
  for (I a(1); a * a < m; a = a + I(1)) {
    FormContext<I> ctx = FormContext<I>::make(m, a);
    auto sols = fundamental_solutions(ctx);
    long long t_count = 0;
    for (const MinimalTriple<I>& t : brute.triples)
      if (t.a() == a || t.b() == a) ++t_count;
    out.per_a.push_back({a, from_ll<I>(static_cast<long long>(sols.size())),
                         from_ll<I>(t_count)});
    if (!(from_ll<I>(static_cast<long long>(sols.size())) ==
          from_ll<I>(t_count)))
      per_a_ok = false;
    out.lhs = out.lhs + from_ll<I>(static_cast<long long>(sols.size()));
  }
  out.ok = per_a_ok && out.lhs == out.rhs;
  return out;
}

// Number of fundamental solutions of F(x, y) = N coming from primitive
// representations (discriminant 5 class group is trivial): none when 25 | N
// or some prime divisor p of N has (p/5) = -1, otherwise 2^w(N), halved
// when 5 | N.
template <Integer I>
std::optional<I> wn_count(const I& N) {
  if (N < I(2)) throw domain_error("wn_count requires N >= 2");
  if (N % I(25) == I(0)) return std::nullopt;
  Factorization<I> f = factorize(N);
  for (const auto& [p, e] : f.factors)
    if (legendre5(p) == -1) return std::nullopt;
  unsigned w = f.n_distinct_primes();
  if (N % I(5) == I(0)) --w;
  I count(1);
  for (unsigned i = 0; i < w; ++i) count = count * I(2);
  return count;
}

}  // namespace markoff
