#include <doctest.h>

#include "markoff/enumerate.hpp"
#include "markoff/kernel.hpp"
#include "markoff/integers.hpp"
#include "reference_data.hpp"

using namespace markoff;

namespace {

MinimalSet<long long> set_of(long long m, CResolve r = CResolve::kAuto) {
  return enumerate_minimal_bruteforce(m, r);
}

}  // namespace

TEST_CASE("enumerate examples") {
  auto s20 = set_of(20);
  REQUIRE(s20.total() == 3);
  CHECK(s20.n1 == 1);
  CHECK(s20.n2 == 2);
  CHECK(s20.by_order(1).front().triple() ==
        OrderedTriple<long long>::make(20, 2, 4, 24));

  CHECK(set_of(4).total() == 0);

  auto s32 = set_of(32);
  REQUIRE(s32.total() == 4);
  CHECK(s32.n1 == 1);
  CHECK(s32.n3 == 3);

  CHECK_THROWS_AS(set_of(1), domain_error);
}

TEST_CASE("count_summary examples") {
  CHECK(count_summary(set_of(12)) == CountSummary{2, 0, 2, 0, 1});
  CHECK(count_summary(set_of(50)) == CountSummary{2, 2, 0, 0, 1});
  CHECK(count_summary(set_of(7)) == CountSummary{0, 0, 0, 0, 0});
}

TEST_CASE("reference minimal sets for m <= 50") {
  // validate the frozen rows themselves, then compare the enumeration
  std::size_t i = 0;
  for (long long m = 2; m <= 50; ++m) {
    auto set = set_of(m);
    std::size_t count = 0;
    while (i + count < refdata::minimal_up_to_50().size() &&
           refdata::minimal_up_to_50()[i + count].m == m)
      ++count;
    REQUIRE(set.total() == count);
    std::vector<MinimalTriple<long long>> expected;
    for (std::size_t k = 0; k < count; ++k) {
      const auto& row = refdata::minimal_up_to_50()[i + k];
      REQUIRE(row.a * row.a + row.b * row.b + row.c * row.c ==
              3 * row.a * row.b * row.c + m);
      auto t = MinimalTriple<long long>::make(
          OrderedTriple<long long>::make(m, row.a, row.b, row.c));
      CHECK(ord_of(t) == row.order);
      expected.push_back(t);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(set.triples == expected);
    i += count;
  }
  CHECK(i == refdata::minimal_up_to_50().size());
}

TEST_CASE("scan and quadratic-solve inner loops agree") {
  for (long long m = 2; m <= 1000; ++m)
    CHECK(set_of(m, CResolve::kScan) == set_of(m, CResolve::kSolve));
  for (long long m : {9999LL, 10000LL, 54321LL, 100003LL})
    CHECK(set_of(m, CResolve::kScan) == set_of(m, CResolve::kSolve));
}

TEST_CASE("m = 3 (mod 4) has no solutions; shortcut agrees with the scan") {
  for (long long m = 3; m <= 2000; m += 4) {
    auto scanned = enumerate_minimal_bruteforce(m, CResolve::kAuto, false);
    CHECK(scanned.total() == 0);
    CHECK(enumerate_minimal_bruteforce(m, CResolve::kAuto, true) == scanned);
  }
}

TEST_CASE("every two-square representation contributes an order-1 triple") {
  for (long long m = 2; m <= 2000; ++m) {
    auto set = set_of(m);
    for (auto [a, b] : two_square_reps(m)) {
      auto t = MinimalTriple<long long>::make(
          OrderedTriple<long long>::make(m, a, b, 3 * a * b));
      CHECK(std::find(set.triples.begin(), set.triples.end(), t) !=
            set.triples.end());
      CHECK(ord_of(t) == 1);
    }
  }
}

TEST_CASE("emitted set is exactly the in-bounds solution set, m <= 400") {
  for (long long m = 2; m <= 400; ++m) {
    auto set = set_of(m);
    std::size_t found = 0;
    for (long long a = 1; 2 * a * a <= m; ++a)
      for (long long b = a; a * a + b * b <= m; ++b)
        for (long long c = b; c <= 3 * a * b + isqrt_floor(m - a * a - b * b);
             ++c) {
          bool solves = a * a + b * b + c * c == 3 * a * b * c + m;
          bool minimal = solves && 3 * a * b <= c;
          if (!minimal) continue;
          ++found;
          auto t = MinimalTriple<long long>::make(
              OrderedTriple<long long>::make(m, a, b, c));
          CHECK(std::find(set.triples.begin(), set.triples.end(), t) !=
                set.triples.end());
        }
    CHECK(found == set.total());
  }
}

TEST_CASE("long long and unbounded instances agree") {
  for (long long m : {2LL, 45LL, 1000LL, 4443LL}) {
    auto fast = set_of(m);
    auto big = enumerate_minimal_bruteforce(make_int(m));
    REQUIRE(fast.total() == big.total());
    for (std::size_t i = 0; i < fast.total(); ++i) {
      CHECK(make_int(fast.triples[i].a()) == big.triples[i].a());
      CHECK(make_int(fast.triples[i].b()) == big.triples[i].b());
      CHECK(make_int(fast.triples[i].c()) == big.triples[i].c());
      CHECK(fast.orders[i] == big.orders[i]);
    }
  }
}
