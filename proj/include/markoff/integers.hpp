#pragma once

// Exact integer layer shared by the whole library.
//
// Two integer types drive every algorithm in this project:
//   * `long long`   -- fast instance, valid for parameters m <= kFastMLimit
//                      (all intermediates are proven to fit in 63 bits there),
//   * `markoff::Int` (GMP mpz_class) -- unbounded instance used for tree
//                      nodes, descent inputs and any parameter beyond the cap.
// Algorithms are templated on the `Integer` concept so both instances share
// one code path and can be tested against each other.

#include <gmpxx.h>

#include <bit>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace markoff {

using Int = mpz_class;

// Raised when a caller violates a documented precondition (bad range,
// malformed number, equation not satisfied, ...). CLI maps this to exit 1.
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an internal mathematical law that the code re-checks at runtime
// fails to hold. This always indicates a bug. CLI maps this to exit 2.
class invariant_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

template <typename T>
concept Integer =
    std::copyable<T> && std::constructible_from<T, int> &&
    requires(const T& a, const T& b) {
      { a + b } -> std::convertible_to<T>;
      { a - b } -> std::convertible_to<T>;
      { a * b } -> std::convertible_to<T>;
      { a / b } -> std::convertible_to<T>;
      { a % b } -> std::convertible_to<T>;
      { -a } -> std::convertible_to<T>;
      { a < b } -> std::convertible_to<bool>;
      { a <= b } -> std::convertible_to<bool>;
      { a == b } -> std::convertible_to<bool>;
    };

// Largest m accepted by the long long instance. For m below this cap every
// intermediate quantity in the enumeration and forms algorithms is bounded by
// ~10*m^2 < 2^63 (worst case: the equation check with c <= 3ab + sqrt(m),
// ab <= m/sqrt(2), hence c^2 and 3abc each < 4.9*m^2).
inline constexpr long long kFastMLimit = 500'000'000LL;

inline std::string to_dec(long long v) { return std::to_string(v); }
inline std::string to_dec(const Int& v) { return v.get_str(); }

inline long long to_ll(long long v) { return v; }
inline long long to_ll(const Int& v) {
  if (!v.fits_slong_p()) throw domain_error("integer does not fit in 64 bits");
  return v.get_si();
}

inline bool fits_ll(long long) { return true; }
inline bool fits_ll(const Int& v) { return v.fits_slong_p(); }

template <Integer I>
I from_ll(long long v) {
  if constexpr (std::same_as<I, Int>) {
    return Int(static_cast<long>(v));
  } else {
    return static_cast<I>(v);
  }
}

// mpz_class has no long long constructor; this avoids the ambiguity
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

// Parses a decimal integer (optional leading '-'). Rejects anything else.
template <Integer I>
I parse_dec(std::string_view s) {
  if (s.empty()) throw domain_error("empty integer literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw domain_error("malformed integer literal");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9')
      throw domain_error("malformed integer literal: " + std::string(s));
  if constexpr (std::same_as<I, Int>) {
    return Int(std::string(s), 10);
  } else {
    I value(0), ten(10);
    bool neg = (i == 1);
    for (std::size_t k = i; k < s.size(); ++k) {
      long long digit = s[k] - '0';
      long long prev = static_cast<long long>(value);
      if (prev > (std::numeric_limits<long long>::max() - digit) / 10)
        throw domain_error("integer literal exceeds the fast-path range: " +
                           std::string(s));
      value = value * ten + I(static_cast<int>(digit));
    }
    return neg ? -value : value;
  }
}

// Least non-negative residue of n modulo a small positive modulus.
template <Integer I>
int mod_small(const I& n, int modulus) {
  I r = n % I(modulus);
  if (r < I(0)) r = r + I(modulus);
  return static_cast<int>(to_ll(r));
}

namespace detail {

inline long long isqrt_seed(long long n) {
  int bits = std::bit_width(static_cast<unsigned long long>(n));
  return 1LL << ((bits + 1) / 2);
}

inline Int isqrt_seed(const Int& n) {
  std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  Int seed(1);
  mpz_mul_2exp(seed.get_mpz_t(), seed.get_mpz_t(), (bits + 2) / 2);
  return seed;
}

// Exact perfect-square test for 64-bit values; the inner loops of the forms
// and enumeration scans live or die on this. A residue filter rejects most
// non-squares before the sqrt, and the final correction makes the result
// exact regardless of floating-point rounding.
inline bool is_square_ull(unsigned long long x, unsigned long long& root) {
  // squares mod 64 can only hit these residues
  static constexpr std::uint64_t kMask = [] {
    std::uint64_t m = 0;
    for (unsigned i = 0; i < 64; ++i) m |= 1ULL << ((i * i) & 63u);
    return m;
  }();
  if (!(kMask >> (x & 63u) & 1u)) return false;
  auto r = static_cast<unsigned long long>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  root = r;
  return r * r == x;
}

}  // namespace detail

// Floor square root by pure integer Newton iteration; no floating point is
// involved, so every downstream inequality test stays exact.
template <Integer I>
I isqrt_floor(const I& n) {
  if (n < I(0)) throw domain_error("isqrt_floor: negative input");
  if (n < I(2)) return n;
  I x = detail::isqrt_seed(n);
  I y = (x + n / x) / I(2);
  while (y < x) {
    x = y;
    y = (x + n / x) / I(2);
  }
  while (x * x > n) x = x - I(1);
  while ((x + I(1)) * (x + I(1)) <= n) x = x + I(1);
  return x;
}

template <Integer I>
struct SqrtResult {
  I root;
  bool exact;
};

template <Integer I>
SqrtResult<I> isqrt(const I& n) {
  I r = isqrt_floor(n);
  return {r, r * r == n};
}

template <Integer I>
bool is_perfect_square(const I& n, I& root) {
  if (n < I(0)) return false;
  if constexpr (std::same_as<I, long long>) {
    unsigned long long r = 0;
    if (!detail::is_square_ull(static_cast<unsigned long long>(n), r))
      return false;
    root = static_cast<long long>(r);
    return true;
  } else {
    auto [r, exact] = isqrt(n);
    if (!exact) return false;
    root = r;
    return true;
  }
}

}  // namespace markoff
