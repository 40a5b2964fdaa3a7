#pragma once

// Range scans over m producing per-m aggregates: order partition sizes,
// improper count, sum-of-two-squares and 9m-4 primality flags, the (1,b,c)
// counts from both the closed form and enumeration, and the cardinality
// identity check. Scans run on the long long instance; kFastMLimit caps the
// range and is enforced, never silently exceeded.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "markoff/count1bc.hpp"
#include "markoff/enumerate.hpp"
#include "markoff/forms.hpp"
#include "markoff/integers.hpp"
#include "markoff/kernel.hpp"

namespace markoff {

enum class Method { kBrute, kForms, kBoth, kAuto };

struct SurveyRecord {
  long long m = 0;
  unsigned long long total = 0, n1 = 0, n2 = 0, n3 = 0, n_improper = 0;
  bool is_sum2sq = false;      // sum of two non-zero squares
  bool is_9m4_prime = false;
  bool all_first_is_1 = false; // non-empty set, every first component 1
  bool unique_minimal = false;
  long long count_1bc_formula = 0;
  long long count_1bc_enum = 0;
  bool thm12_ok = false;
};

inline int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("MARKOFF_WORKERS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

inline std::string describe_set(const MinimalSet<long long>& s) {
  std::ostringstream os;
  for (const auto& t : s.triples)
    os << " (" << t.a() << "," << t.b() << "," << t.c() << ")";
  return os.str();
}

// Runs fn(m) for each m in [lo, hi], strided across workers. Slot-indexed
// writes keep the merged output deterministic for any worker count.
template <typename Fn>
void parallel_for_m(long long lo, long long hi, int workers, Fn&& fn) {
  workers = static_cast<int>(
      std::max<long long>(1, std::min<long long>(workers, hi - lo + 1)));
  if (workers == 1) {
    for (long long m = lo; m <= hi; ++m) fn(m);
    return;
  }
  std::vector<std::thread> pool;
  std::mutex err_mutex;
  std::exception_ptr first_error;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (long long m = lo + w; m <= hi; m += workers) fn(m);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// One m. With Method::kBoth the two enumerators are compared and a mismatch
// is a hard failure naming m and both sets. kAuto picks kBoth below 10^4 and
// kForms above (brute force is O(m) per m, the forms scan ~m^(3/4)).
inline SurveyRecord compute_survey_record(long long m, Method method) {
  if (method == Method::kAuto) method = (m <= 10'000) ? Method::kBoth : Method::kForms;
  MinimalSet<long long> set = [&] {
    switch (method) {
      case Method::kBrute:
        return enumerate_minimal_bruteforce<long long>(m);
      case Method::kForms:
        return enumerate_minimal_via_forms<long long>(m);
      default: {
        MinimalSet<long long> brute = enumerate_minimal_bruteforce<long long>(m);
        MinimalSet<long long> forms = enumerate_minimal_via_forms<long long>(m);
        if (!(brute == forms))
          throw invariant_error(
              "enumerators disagree at m=" + std::to_string(m) +
              ": bounded scan finds{" + detail::describe_set(brute) +
              " } vs fundamental solutions{" + detail::describe_set(forms) +
              " }");
        return brute;
      }
    }
  }();
  SurveyRecord rec;
  rec.m = m;
  rec.total = set.total();
  rec.n1 = set.n1;
  rec.n2 = set.n2;
  rec.n3 = set.n3;
  rec.n_improper = set.n_improper;
  rec.is_sum2sq = !two_square_reps<long long>(m).empty();
  rec.is_9m4_prime = is_prime<long long>(9 * m - 4).prime;
  rec.all_first_is_1 = set.total() > 0;
  for (const auto& t : set.triples)
    if (!(t.a() == 1)) rec.all_first_is_1 = false;
  rec.unique_minimal = set.total() == 1;
  rec.count_1bc_formula = count_1bc<long long>(m).count;
  rec.count_1bc_enum = 0;
  for (const auto& t : set.triples)
    if (t.a() == 1) ++rec.count_1bc_enum;
  if (rec.count_1bc_formula != rec.count_1bc_enum)
    throw invariant_error("closed-form (1,b,c) count " +
                          std::to_string(rec.count_1bc_formula) +
                          " != enumerated " +
                          std::to_string(rec.count_1bc_enum) +
                          " at m=" + std::to_string(m));
  CardinalityIdentity<long long> id = verify_cardinality_identity<long long>(m);
  rec.thm12_ok = id.ok;
  if (!rec.thm12_ok)
    throw invariant_error("cardinality identity fails at m=" +
                          std::to_string(m));
  if (rec.total != rec.n1 + rec.n2 + rec.n3)
    throw invariant_error("order partition does not sum at m=" +
                          std::to_string(m));
  return rec;
}

inline void check_scan_range(long long lo, long long hi) {
  if (lo < 2 || hi < lo)
    throw domain_error("scan range must satisfy 2 <= lo <= hi");
  if (hi > kFastMLimit)
    throw domain_error("range scans support m <= " + std::to_string(kFastMLimit) +
                       "; use per-m subcommands beyond that");
}

inline std::vector<SurveyRecord> scan(long long lo, long long hi,
                                      Method method = Method::kAuto,
                                      int workers = 0) {
  check_scan_range(lo, hi);
  std::vector<SurveyRecord> records(static_cast<std::size_t>(hi - lo + 1));
  detail::parallel_for_m(lo, hi, resolve_workers(workers), [&](long long m) {
    records[static_cast<std::size_t>(m - lo)] = compute_survey_record(m, method);
  });
  return records;
}

// All m <= bound with exactly one minimal triple whose phi != 0. Each hit is
// checked against the necessary condition a = b, c = 3a^2 + a.
inline std::vector<std::pair<long long, MinimalTriple<long long>>>
special_unique_phi_nonzero(long long bound, int workers = 0) {
  check_scan_range(2, bound);
  std::vector<std::vector<std::pair<long long, MinimalTriple<long long>>>>
      slots(static_cast<std::size_t>(bound - 1));
  detail::parallel_for_m(2, bound, resolve_workers(workers), [&](long long m) {
    MinimalSet<long long> set = enumerate_minimal_via_forms<long long>(m);
    if (set.total() != 1) return;
    const MinimalTriple<long long>& t = set.triples.front();
    if (t.phi() == 0) return;
    if (!(t.a() == t.b()) || !(t.c() == 3 * t.a() * t.a() + t.a()))
      throw invariant_error("unique minimal triple with phi != 0 violates "
                            "a = b, c = 3a^2 + a at m=" + std::to_string(m));
    slots[static_cast<std::size_t>(m - 2)].emplace_back(m, t);
  });
  std::vector<std::pair<long long, MinimalTriple<long long>>> out;
  for (auto& s : slots)
    for (auto& hit : s) out.push_back(std::move(hit));
  return out;
}

// Violations of "9m-4 prime and m not a sum of two non-zero squares implies
// 3 | #O(m)" in [lo, hi]; expected empty.
inline std::vector<long long> verify_prop_9m4(long long lo, long long hi,
                                              int workers = 0) {
  check_scan_range(lo, hi);
  std::vector<char> bad(static_cast<std::size_t>(hi - lo + 1), 0);
  detail::parallel_for_m(lo, hi, resolve_workers(workers), [&](long long m) {
    if (!is_prime<long long>(9 * m - 4).prime) return;
    if (!two_square_reps<long long>(m).empty()) return;
    if (enumerate_minimal_via_forms<long long>(m).total() % 3 != 0)
      bad[static_cast<std::size_t>(m - lo)] = 1;
  });
  std::vector<long long> out;
  for (long long m = lo; m <= hi; ++m)
    if (bad[static_cast<std::size_t>(m - lo)]) out.push_back(m);
  return out;
}

}  // namespace markoff
