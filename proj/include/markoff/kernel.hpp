#pragma once

// Number-theoretic kernel: Legendre symbol mod 5, primality, factorization,
// sums of two squares, and solvability of x^2 = d (mod 4N).

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "markoff/integers.hpp"

namespace markoff {

// Legendre symbol (n/5): 0 when 5 | n, +1 when n = +-1 (mod 5), -1 when
// n = +-2 (mod 5). For an odd prime p this equals (p/5) = (5/p), the two
// readings coincide because 5 = 1 (mod 4).
template <Integer I>
int legendre5(const I& n) {
  static constexpr int table[5] = {0, 1, -1, -1, 1};
  return table[mod_small(n, 5)];
}

namespace detail {

inline long long mulmod(long long a, long long b, long long n) {
  return static_cast<long long>(
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) %
      static_cast<unsigned __int128>(n));
}

inline Int mulmod(const Int& a, const Int& b, const Int& n) {
  return Int(a * b % n);
}

template <Integer I>
I powmod(I base, I exp, const I& n) {
  if constexpr (std::same_as<I, Int>) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), n.get_mpz_t());
    return r;
  } else {
    I result(1);
    base = base % n;
    while (exp > I(0)) {
      if (mod_small(exp, 2) == 1) result = mulmod(result, base, n);
      base = mulmod(base, base, n);
      exp = exp / I(2);
    }
    return result;
  }
}

template <Integer I>
I gcd_int(I a, I b) {
  if (a < I(0)) a = -a;
  if (b < I(0)) b = -b;
  while (!(b == I(0))) {
    I t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace detail

struct Primality {
  bool prime = false;
  // true when the verdict is unconditional (all inputs below 2^64); above
  // that the Miller-Rabin base set only certifies "probable prime".
  bool certified = true;
};

// Miller-Rabin with the fixed base set {2,...,37}, deterministic for every
// input below 2^64; larger inputs reuse the bases and drop the certificate.
template <Integer I>
Primality is_prime(const I& n) {
  static constexpr int kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < I(2)) return {false, true};
  for (int p : kBases) {
    if (n == I(p)) return {true, true};
    if (n % I(p) == I(0)) return {false, true};
  }
  bool certified = true;
  if constexpr (std::same_as<I, Int>) {
    certified = mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
  }
  I d = n - I(1);
  int s = 0;
  while (mod_small(d, 2) == 0) {
    d = d / I(2);
    ++s;
  }
  for (int b : kBases) {
    I x = detail::powmod(I(b), d, n);
    if (x == I(1) || x == n - I(1)) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - I(1)) {
        witness = false;
        break;
      }
    }
    if (witness) return {false, certified};
  }
  return {true, certified};
}

template <Integer I>
struct Factorization {
  std::vector<std::pair<I, unsigned>> factors;  // ascending primes
  bool certified = true;  // false if any factor is only a probable prime

  unsigned n_distinct_primes() const {
    return static_cast<unsigned>(factors.size());
  }
};

namespace detail {

inline constexpr long long kTrialLimit = 1'000'000;

// Brent-cycle Pollard rho; n must be odd, composite and free of factors
// below the trial-division limit.
template <Integer I>
I rho_brent(const I& n) {
  for (long long c0 = 1;; ++c0) {
    I y(2), c(static_cast<int>(c0 % 1000 + 1));
    I g(1), q(1), x(0), ys(0);
    long long r = 1, m = 128;
    while (g == I(1)) {
      x = y;
      for (long long i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      long long k = 0;
      while (k < r && g == I(1)) {
        ys = y;
        long long lim = std::min(m, r - k);
        for (long long i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          I diff = x - y;
          if (diff < I(0)) diff = -diff;
          q = mulmod(q, diff, n);
        }
        g = gcd_int(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        I diff = x - ys;
        if (diff < I(0)) diff = -diff;
        g = gcd_int(diff, n);
      } while (g == I(1));
    }
    if (!(g == n)) return g;
  }
}

}  // namespace detail

// Complete prime factorization: trial division by 2, 3 and 6k+-1 up to 10^6,
// then Miller-Rabin / Pollard rho on what remains. factorize(1) is empty.
template <Integer I>
Factorization<I> factorize(I n) {
  if (n < I(1)) throw domain_error("factorize: input must be >= 1");
  Factorization<I> result;
  auto emit = [&result](const I& p, unsigned e) {
    result.factors.emplace_back(p, e);
  };
  for (int p : {2, 3}) {
    unsigned e = 0;
    while (n % I(p) == I(0)) {
      n = n / I(p);
      ++e;
    }
    if (e) emit(I(p), e);
  }
  for (long long p = 5; p <= detail::kTrialLimit; p += (p % 6 == 5) ? 2 : 4) {
    I ip = from_ll<I>(p);
    if (n < ip * ip) break;
    unsigned e = 0;
    while (n % ip == I(0)) {
      n = n / ip;
      ++e;
    }
    if (e) emit(ip, e);
  }
  // remaining cofactor: prime, or a product of primes above the trial limit
  std::vector<I> pending;
  if (I(1) < n) pending.push_back(n);
  std::vector<std::pair<I, unsigned>> large;
  while (!pending.empty()) {
    I v = pending.back();
    pending.pop_back();
    Primality pr = is_prime(v);
    if (pr.prime) {
      result.certified = result.certified && pr.certified;
      auto it = std::find_if(large.begin(), large.end(),
                             [&](const auto& f) { return f.first == v; });
      if (it == large.end())
        large.emplace_back(v, 1u);
      else
        ++it->second;
      continue;
    }
    I root;
    if (is_perfect_square(v, root)) {
      pending.push_back(root);
      pending.push_back(root);
      continue;
    }
    I g = detail::rho_brent(v);
    pending.push_back(g);
    pending.push_back(I(v / g));
  }
  for (auto& [p, e] : large) emit(p, e);
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  // merge any duplicate primes produced by the splitting loop
  std::vector<std::pair<I, unsigned>> merged;
  for (auto& f : result.factors) {
    if (!merged.empty() && merged.back().first == f.first)
      merged.back().second += f.second;
    else
      merged.push_back(f);
  }
  result.factors = std::move(merged);
  return result;
}

// All divisors of the factored integer, ascending.
template <Integer I>
std::vector<I> divisors(const Factorization<I>& f) {
  std::vector<I> divs{I(1)};
  for (const auto& [p, e] : f.factors) {
    std::size_t count = divs.size();
    I pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk = pk * p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(I(divs[i] * pk));
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// All representations m = a^2 + b^2 with 0 < a <= b, ascending in a.
template <Integer I>
std::vector<std::pair<I, I>> two_square_reps(const I& m) {
  if (m < I(1)) throw domain_error("two_square_reps: input must be >= 1");
  std::vector<std::pair<I, I>> reps;
  for (I a(1); a * a * I(2) <= m; a = a + I(1)) {
    I b;
    if (is_perfect_square(I(m - a * a), b) && I(0) < b)
      reps.emplace_back(a, b);
  }
  return reps;
}

namespace detail {

// Euler criterion; p an odd prime not dividing d.
template <Integer I>
bool is_qr_mod_p(const I& d, const I& p) {
  I dd = d % p;
  if (dd < I(0)) dd = dd + p;
  return powmod(dd, I((p - I(1)) / I(2)), p) == I(1);
}

// Solvability of x^2 = d (mod p^e) for a single prime power.
template <Integer I>
bool qr_solvable_prime_power(const I& d, const I& p, unsigned e) {
  I pe(1);
  for (unsigned i = 0; i < e; ++i) pe = pe * p;
  I dd = d % pe;
  if (dd < I(0)) dd = dd + pe;
  if (dd == I(0)) return true;
  unsigned j = 0;
  while (dd % p == I(0)) {
    dd = dd / p;
    ++j;
  }
  if (j % 2 != 0) return false;
  unsigned rem = e - j;  // need dd a square mod p^rem, p coprime to dd
  if (p == I(2)) {
    if (rem == 1) return true;
    if (rem == 2) return mod_small(dd, 4) == 1;
    return mod_small(dd, 8) == 1;
  }
  return is_qr_mod_p(dd, p);
}

// Factorization-based path; exact for every N, used above the scan cutoff.
template <Integer I>
bool qr_solvable_mod4N_factored(const I& d, const I& N) {
  Factorization<I> f = factorize(I(I(4) * N));
  for (const auto& [p, e] : f.factors)
    if (!qr_solvable_prime_power(d, p, e)) return false;
  return true;
}

template <Integer I>
bool qr_solvable_mod4N_scan(const I& d, const I& N) {
  I M = I(4) * N;
  I dd = d % M;
  if (dd < I(0)) dd = dd + M;
  for (I x(0); x < I(2) * N; x = x + I(1))
    if (x * x % M == dd) return true;
  return false;
}

}  // namespace detail

// True iff x^2 = d (mod 4N) has a solution. Requires d = 0 or 1 (mod 4).
// Small N is settled by an exhaustive residue scan, larger N prime-by-prime
// from the factorization of 4N.
template <Integer I>
bool qr_solvable_mod4N(const I& d, const I& N) {
  if (N < I(1)) throw domain_error("qr_solvable_mod4N: N must be >= 1");
  int d4 = mod_small(d, 4);
  if (d4 != 0 && d4 != 1)
    throw domain_error("qr_solvable_mod4N: d must be 0 or 1 (mod 4)");
  if (N <= I(100000)) return detail::qr_solvable_mod4N_scan(d, N);
  return detail::qr_solvable_mod4N_factored(d, N);
}

}  // namespace markoff
