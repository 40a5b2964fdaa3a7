#include <doctest.h>

#include <set>

#include "markoff/integers.hpp"
#include "markoff/kernel.hpp"

using namespace markoff;

namespace {

// independent trial-division oracle; kept deliberately naive
bool naive_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, unsigned>> naive_factorize(long long n) {
  std::vector<std::pair<long long, unsigned>> out;
  for (long long d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

}  // namespace

TEST_CASE("isqrt_floor basics") {
  CHECK(isqrt_floor<long long>(0) == 0);
  CHECK(isqrt_floor<long long>(49) == 7);
  CHECK(isqrt_floor<long long>(50) == 7);
  CHECK(isqrt<long long>(49).exact);
  CHECK(!isqrt<long long>(50).exact);
  CHECK_THROWS_AS(isqrt_floor<long long>(-1), domain_error);
  CHECK(isqrt_floor(Int("123456789012345678901234567890")) ==
        Int("351364182882014"));
}

TEST_CASE("isqrt_floor brackets n for all n <= 10^6") {
  for (long long n = 0; n <= 1'000'000; ++n) {
    long long r = isqrt_floor(n);
    REQUIRE(r * r <= n);
    REQUIRE(n < (r + 1) * (r + 1));
  }
}

TEST_CASE("fast square test agrees with isqrt_floor") {
  for (long long n = 0; n <= 200'000; ++n) {
    long long root = -1;
    bool sq = is_perfect_square(n, root);
    long long r = isqrt_floor(n);
    CHECK(sq == (r * r == n));
    if (sq) CHECK(root == r);
  }
  // near the top of the 63-bit range
  long long big = 3037000499LL;  // floor(sqrt(2^63 - 1))
  long long root = -1;
  CHECK(is_perfect_square(big * big, root));
  CHECK(root == big);
  CHECK(!is_perfect_square(big * big - 1, root));
  CHECK(!is_perfect_square(big * big + 1, root));
}

TEST_CASE("legendre5 values and periodicity") {
  CHECK(legendre5<long long>(11) == 1);
  CHECK(legendre5<long long>(7) == -1);
  CHECK(legendre5<long long>(25) == 0);
  for (long long n = -10; n <= 10; ++n) {
    CHECK(legendre5<long long>(n) == legendre5<long long>(n + 5));
    CHECK(legendre5<long long>(n) == legendre5(make_int(n)));
  }
}

TEST_CASE("primality matches trial division up to 10^4") {
  for (long long n = 0; n <= 10'000; ++n) {
    Primality p = is_prime(n);
    CHECK(p.prime == naive_prime(n));
    CHECK(p.certified);
  }
}

TEST_CASE("primality on large inputs") {
  CHECK(is_prime<long long>(2'147'483'647).prime);        // 2^31 - 1
  CHECK(is_prime<long long>((1LL << 61) - 1).prime);      // Mersenne prime
  CHECK(!is_prime<long long>((1LL << 59) - 1).prime);
  // beyond 64 bits the verdict is only probable
  Int p = Int("170141183460469231731687303715884105727");  // 2^127 - 1
  Primality pr = is_prime(p);
  CHECK(pr.prime);
  CHECK(!pr.certified);
}

TEST_CASE("factorize examples") {
  CHECK(factorize<long long>(1).factors.empty());
  auto f = factorize<long long>(104);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<long long, unsigned>{2, 3});
  CHECK(f.factors[1] == std::pair<long long, unsigned>{13, 1});
  auto g = factorize<long long>(61235);
  REQUIRE(g.factors.size() == 3);
  CHECK(g.factors[0].first == 5);
  CHECK(g.factors[1].first == 37);
  CHECK(g.factors[2].first == 331);
  CHECK_THROWS_AS(factorize<long long>(0), domain_error);
}

TEST_CASE("factorize reconstructs n and reports primes, n <= 10^5") {
  for (long long n = 1; n <= 100'000; ++n) {
    auto f = factorize(n);
    long long prod = 1;
    long long prev = 0;
    for (auto& [p, e] : f.factors) {
      CHECK(p > prev);
      prev = p;
      CHECK(naive_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("factorize uses rho beyond the trial-division limit") {
  long long p = 1'000'003, q = 1'000'033;
  auto f = factorize(p * q);
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == std::pair<long long, unsigned>{p, 1});
  CHECK(f.factors[1] == std::pair<long long, unsigned>{q, 1});
  CHECK(f.certified);
  auto naive = naive_factorize(600'851'475'143LL);
  CHECK(factorize(600'851'475'143LL).factors == naive);
  // square of a large prime
  auto sq = factorize(Int(make_int(p) * make_int(p) * make_int(q)));
  REQUIRE(sq.factors.size() == 2);
  CHECK(sq.factors[0] == std::pair<Int, unsigned>{make_int(p), 2});
}

TEST_CASE("divisors are ascending and complete") {
  auto divs = divisors(factorize<long long>(360));
  CHECK(divs.size() == 24);
  CHECK(divs.front() == 1);
  CHECK(divs.back() == 360);
  for (std::size_t i = 1; i < divs.size(); ++i) CHECK(divs[i - 1] < divs[i]);
  for (long long d : divs) CHECK(360 % d == 0);
}

TEST_CASE("two_square_reps examples") {
  auto r50 = two_square_reps<long long>(50);
  REQUIRE(r50.size() == 2);
  CHECK(r50[0] == std::pair<long long, long long>{1, 7});
  CHECK(r50[1] == std::pair<long long, long long>{5, 5});
  CHECK(two_square_reps<long long>(3).empty());
  auto r5 = two_square_reps<long long>(5);
  REQUIRE(r5.size() == 1);
  CHECK(r5[0] == std::pair<long long, long long>{1, 2});
}

TEST_CASE("two_square_reps equals exhaustive pair scan up to 10^4") {
  for (long long m = 1; m <= 10'000; ++m) {
    std::set<std::pair<long long, long long>> expected;
    for (long long a = 1; a * a <= m; ++a)
      for (long long b = a; a * a + b * b <= m; ++b)
        if (a * a + b * b == m) expected.insert({a, b});
    auto got = two_square_reps(m);
    REQUIRE(got.size() == expected.size());
    for (auto& p : got) CHECK(expected.count(p) == 1);
  }
}

TEST_CASE("qr_solvable_mod4N examples") {
  CHECK(qr_solvable_mod4N<long long>(5, 11));   // 7^2 = 49 = 5 (mod 44)
  CHECK(!qr_solvable_mod4N<long long>(5, 7));
  CHECK(qr_solvable_mod4N<long long>(5, 1));
  CHECK_THROWS_AS(qr_solvable_mod4N<long long>(3, 5), domain_error);
  CHECK_THROWS_AS(qr_solvable_mod4N<long long>(5, 0), domain_error);
}

TEST_CASE("qr_solvable factored path agrees with the scan") {
  for (long long N = 1; N <= 2000; ++N) {
    bool scan = detail::qr_solvable_mod4N_scan<long long>(5, N);
    CHECK(qr_solvable_mod4N<long long>(5, N) == scan);
    CHECK(detail::qr_solvable_mod4N_factored<long long>(5, N) == scan);
  }
  for (long long d : {0LL, 1LL, 4LL, 8LL, 9LL, 12LL, 13LL, 77LL, -3LL})
    for (long long N = 1; N <= 300; ++N) {
      if (((d % 4) + 4) % 4 > 1) continue;
      CHECK(detail::qr_solvable_mod4N_factored(d, N) ==
            detail::qr_solvable_mod4N_scan(d, N));
    }
}

TEST_CASE("factorization above 64 bits is flagged as probable") {
  // 2^89 - 1 is prime but too large for the certified base-set range
  Int m89 = Int("618970019642690137449562111");
  auto f = factorize(m89);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].second == 1);
  CHECK(!f.certified);
  // a product with one small factor keeps the probable flag
  auto g = factorize(Int(m89 * 7));
  REQUIRE(g.factors.size() == 2);
  CHECK(g.factors[0].first == 7);
  CHECK(!g.certified);
  // fully small factorizations stay certified
  CHECK(factorize(Int("123456789123456789")).certified);
}

TEST_CASE("two_square_reps rejects non-positive input") {
  CHECK_THROWS_AS(two_square_reps<long long>(0), domain_error);
}
