#pragma once

// Triple algebra for a^2 + b^2 + c^2 = 3abc + m: validated solution triples,
// Vieta involutions, sign transformations, minimality, order classification,
// descent to the minimal triple, and root construction.

#include <algorithm>
#include <utility>
#include <vector>

#include "markoff/integers.hpp"

namespace markoff {

// A solution triple of a^2 + b^2 + c^2 = 3abc + m. Components may carry any
// sign; the factory rejects anything that does not satisfy the equation.
template <Integer I>
class MTriple {
 public:
  static MTriple make(I m, I a, I b, I c) {
    if (m < I(2))
      throw domain_error("m must be an integer greater than 1, got " +
                         to_dec(m));
    I residual = a * a + b * b + c * c - I(3) * a * b * c - m;
    if (!(residual == I(0)))
      throw domain_error("(" + to_dec(a) + "," + to_dec(b) + "," + to_dec(c) +
                         ") is not a solution for m=" + to_dec(m) +
                         " (residual " + to_dec(residual) + ")");
    return MTriple(std::move(m), std::move(a), std::move(b), std::move(c));
  }

  const I& m() const { return m_; }
  const I& a() const { return a_; }
  const I& b() const { return b_; }
  const I& c() const { return c_; }

  bool all_positive() const {
    return I(0) < a_ && I(0) < b_ && I(0) < c_;
  }

  friend bool operator==(const MTriple& x, const MTriple& y) {
    return x.m_ == y.m_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  MTriple(I m, I a, I b, I c)
      : m_(std::move(m)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}
  I m_, a_, b_, c_;
};

template <Integer I>
MTriple<I> make_triple(const I& m, const I& a, const I& b, const I& c) {
  return MTriple<I>::make(m, a, b, c);
}

// Vieta involution V_i replaces component i by (3 * product of the others)
// minus itself; the result is again a solution.
template <Integer I>
MTriple<I> vieta(int i, const MTriple<I>& t) {
  switch (i) {
    case 1:
      return MTriple<I>::make(t.m(), I(I(3) * t.b() * t.c() - t.a()), t.b(),
                              t.c());
    case 2:
      return MTriple<I>::make(t.m(), t.a(), I(I(3) * t.a() * t.c() - t.b()),
                              t.c());
    case 3:
      return MTriple<I>::make(t.m(), t.a(), t.b(),
                              I(I(3) * t.a() * t.b() - t.c()));
    default:
      throw domain_error("vieta: component index must be 1, 2 or 3");
  }
}

// S_i flips the signs of the two components other than component i.
template <Integer I>
MTriple<I> sign_transform(int i, const MTriple<I>& t) {
  switch (i) {
    case 1:
      return MTriple<I>::make(t.m(), t.a(), I(-t.b()), I(-t.c()));
    case 2:
      return MTriple<I>::make(t.m(), I(-t.a()), t.b(), I(-t.c()));
    case 3:
      return MTriple<I>::make(t.m(), I(-t.a()), I(-t.b()), t.c());
    default:
      throw domain_error("sign_transform: component index must be 1, 2 or 3");
  }
}

// A positive solution triple with a <= b <= c. Every constructed instance is
// also checked against 3ab < b + c, which holds for all ordered positive
// solutions and guards the descent's termination.
template <Integer I>
class OrderedTriple {
 public:
  static OrderedTriple make(const I& m, const I& a, const I& b, const I& c) {
    MTriple<I> t = MTriple<I>::make(m, a, b, c);
    if (!t.all_positive())
      throw domain_error("ordered triple requires positive components");
    if (!(a <= b && b <= c))
      throw domain_error("components not ascending: (" + to_dec(a) + "," +
                         to_dec(b) + "," + to_dec(c) + ")");
    if (!(I(3) * a * b < b + c))
      throw invariant_error("ordered solution triple violates 3ab < b+c: (" +
                            to_dec(a) + "," + to_dec(b) + "," + to_dec(c) +
                            "), m=" + to_dec(m));
    return OrderedTriple(std::move(t));
  }

  const I& m() const { return t_.m(); }
  const I& a() const { return t_.a(); }
  const I& b() const { return t_.b(); }
  const I& c() const { return t_.c(); }
  const MTriple<I>& as_mtriple() const { return t_; }

  bool improper() const {
    return t_.a() == t_.b() || t_.b() == t_.c();
  }

  friend bool operator==(const OrderedTriple& x, const OrderedTriple& y) {
    return x.t_ == y.t_;
  }
  // lexicographic by (a, b, c); callers compare triples of one m-context
  friend bool operator<(const OrderedTriple& x, const OrderedTriple& y) {
    if (!(x.a() == y.a())) return x.a() < y.a();
    if (!(x.b() == y.b())) return x.b() < y.b();
    return x.c() < y.c();
  }

 private:
  explicit OrderedTriple(MTriple<I> t) : t_(std::move(t)) {}
  MTriple<I> t_;
};

// Ascending rearrangement of a positive solution triple.
template <Integer I>
OrderedTriple<I> order_components(const MTriple<I>& t) {
  if (!t.all_positive())
    throw domain_error("order_components requires positive components");
  I x = t.a(), y = t.b(), z = t.c();
  if (y < x) std::swap(x, y);
  if (z < y) std::swap(y, z);
  if (y < x) std::swap(x, y);
  return OrderedTriple<I>::make(t.m(), x, y, z);
}

template <Integer I>
struct MinimalityCheck {
  bool minimal;
  I phi;  // c - 3ab, meaningful when minimal
};

// Evaluates both characterizations of minimality (3ab <= c and
// a^2 + b^2 <= m) and insists they agree.
template <Integer I>
MinimalityCheck<I> is_minimal(const OrderedTriple<I>& t) {
  I phi = t.c() - I(3) * t.a() * t.b();
  bool by_phi = I(0) <= phi;
  bool by_norm = t.a() * t.a() + t.b() * t.b() <= t.m();
  if (by_phi != by_norm)
    throw invariant_error(
        "minimality characterizations disagree (3ab<=c vs a^2+b^2<=m) on (" +
        to_dec(t.a()) + "," + to_dec(t.b()) + "," + to_dec(t.c()) +
        "), m=" + to_dec(t.m()));
  return {by_phi, std::move(phi)};
}

// An ordered triple with 3ab <= c (equivalently a^2 + b^2 <= m).
template <Integer I>
class MinimalTriple {
 public:
  static MinimalTriple make(const OrderedTriple<I>& t) {
    MinimalityCheck<I> mc = is_minimal(t);
    if (!mc.minimal)
      throw domain_error("triple is not minimal: (" + to_dec(t.a()) + "," +
                         to_dec(t.b()) + "," + to_dec(t.c()) +
                         "), m=" + to_dec(t.m()));
    return MinimalTriple(t, std::move(mc.phi));
  }

  const OrderedTriple<I>& triple() const { return t_; }
  const I& m() const { return t_.m(); }
  const I& a() const { return t_.a(); }
  const I& b() const { return t_.b(); }
  const I& c() const { return t_.c(); }
  const I& phi() const { return phi_; }
  bool improper() const { return t_.improper(); }

  friend bool operator==(const MinimalTriple& x, const MinimalTriple& y) {
    return x.t_ == y.t_;
  }
  friend bool operator<(const MinimalTriple& x, const MinimalTriple& y) {
    return x.t_ < y.t_;
  }

 private:
  MinimalTriple(OrderedTriple<I> t, I phi)
      : t_(std::move(t)), phi_(std::move(phi)) {}
  OrderedTriple<I> t_;
  I phi_;
};

// Order of a minimal triple: 1 when phi = 0, otherwise #{a, b, phi}. The
// equivalent definition -- the number of distinct triples among the triple
// itself and its two reordered companions o(phi, a, 3a*phi + b) and
// o(phi, b, 3b*phi + a) -- is evaluated as well and must agree.
template <Integer I>
int ord_of(const MinimalTriple<I>& t) {
  if (t.phi() == I(0)) return 1;
  const I &a = t.a(), &b = t.b(), &phi = t.phi();
  int by_set = 1 + (a == b ? 0 : 1);
  if (!(phi == a) && !(phi == b)) ++by_set;

  OrderedTriple<I> d1 = order_components(
      MTriple<I>::make(t.m(), phi, a, I(I(3) * a * phi + b)));
  OrderedTriple<I> d2 = order_components(
      MTriple<I>::make(t.m(), phi, b, I(I(3) * b * phi + a)));
  for (const OrderedTriple<I>* d : {&d1, &d2})
    if (!is_minimal(*d).minimal)
      throw invariant_error("companion triple of a minimal triple is not "
                            "minimal, m=" + to_dec(t.m()));
  int by_def = 1;
  if (!(d1 == t.triple())) ++by_def;
  if (!(d2 == t.triple()) && !(d2 == d1)) ++by_def;
  if (by_set != by_def)
    throw invariant_error("order formulas disagree on (" + to_dec(a) + "," +
                          to_dec(b) + "," + to_dec(t.c()) +
                          "), m=" + to_dec(t.m()));
  return by_set;
}

// Root of the solution tree grown from a minimal triple: the triple itself
// when proper, (a, c, 3ac - b) when improper (a = b).
template <Integer I>
OrderedTriple<I> root_of(const MinimalTriple<I>& t) {
  if (!t.improper()) return t.triple();
  if (!(t.a() == t.b()))
    throw invariant_error("improper minimal triple with a != b, m=" +
                          to_dec(t.m()));
  return OrderedTriple<I>::make(t.m(), t.a(), t.c(),
                                I(I(3) * t.a() * t.c() - t.b()));
}

template <Integer I>
struct DescentResult {
  MinimalTriple<I> minimal;
  // ordered triples after each V3 step, ending with the minimal one;
  // empty when the input is already minimal
  std::vector<OrderedTriple<I>> path;
};

// Repeated V3 with re-ordering. The maximum component strictly decreases
// (3ab < b+c), so this terminates at the minimal triple of the input's tree.
template <Integer I>
DescentResult<I> descend(const OrderedTriple<I>& start) {
  OrderedTriple<I> cur = start;
  std::vector<OrderedTriple<I>> path;
  while (true) {
    I third = I(3) * cur.a() * cur.b() - cur.c();
    if (third <= I(0)) break;
    cur = order_components(
        MTriple<I>::make(cur.m(), cur.a(), cur.b(), std::move(third)));
    path.push_back(cur);
  }
  return {MinimalTriple<I>::make(cur), std::move(path)};
}

}  // namespace markoff
