#pragma once

// Machine-readable emission. CSV: header row, UTF-8, LF line endings, plain
// decimal integers (booleans as 0/1). JSON: every integer value is a decimal
// string so that consumers never lose precision (tree components routinely
// exceed 64 bits); booleans stay booleans. Identical inputs produce
// byte-identical output.

#include <json.hpp>

#include <string>
#include <vector>

#include "markoff/count1bc.hpp"
#include "markoff/enumerate.hpp"
#include "markoff/forms.hpp"
#include "markoff/integers.hpp"
#include "markoff/kernel.hpp"
#include "markoff/survey.hpp"
#include "markoff/tree.hpp"

namespace markoff {

using Json = nlohmann::ordered_json;

// ---- minimal sets ----------------------------------------------------------

// Schema: m,order,a,b,c -- one row per triple, m ascending, triples
// lexicographic within one m.
template <Integer I>
std::string minimal_csv(const std::vector<MinimalSet<I>>& sets) {
  std::string out = "m,order,a,b,c\n";
  for (const MinimalSet<I>& s : sets)
    for (std::size_t i = 0; i < s.triples.size(); ++i) {
      const MinimalTriple<I>& t = s.triples[i];
      out += to_dec(s.m) + "," + std::to_string(s.orders[i]) + "," +
             to_dec(t.a()) + "," + to_dec(t.b()) + "," + to_dec(t.c()) + "\n";
    }
  return out;
}

template <Integer I>
Json minimal_json(const std::vector<MinimalSet<I>>& sets) {
  Json arr = Json::array();
  for (const MinimalSet<I>& s : sets) {
    Json entry;
    entry["m"] = to_dec(s.m);
    entry["total"] = to_dec(from_ll<I>(static_cast<long long>(s.total())));
    Json triples = Json::array();
    for (std::size_t i = 0; i < s.triples.size(); ++i) {
      const MinimalTriple<I>& t = s.triples[i];
      triples.push_back({{"a", to_dec(t.a())},
                         {"b", to_dec(t.b())},
                         {"c", to_dec(t.c())},
                         {"order", std::to_string(s.orders[i])},
                         {"phi", to_dec(t.phi())}});
    }
    entry["triples"] = std::move(triples);
    arr.push_back(std::move(entry));
  }
  return arr;
}

// ---- fundamental solutions --------------------------------------------------

template <Integer I>
std::string fundsols_csv(
    const std::vector<std::pair<I, std::vector<FundamentalSolution<I>>>>& per_a) {
  std::string out = "a,u,v\n";
  for (const auto& [a, sols] : per_a)
    for (const FundamentalSolution<I>& s : sols)
      out += to_dec(a) + "," + to_dec(s.u) + "," + to_dec(s.v) + "\n";
  return out;
}

template <Integer I>
Json fundsols_json(
    const std::vector<std::pair<I, std::vector<FundamentalSolution<I>>>>& per_a) {
  Json arr = Json::array();
  for (const auto& [a, sols] : per_a) {
    Json entry;
    entry["a"] = to_dec(a);
    Json list = Json::array();
    for (const FundamentalSolution<I>& s : sols)
      list.push_back({{"u", to_dec(s.u)}, {"v", to_dec(s.v)}});
    entry["solutions"] = std::move(list);
    arr.push_back(std::move(entry));
  }
  return arr;
}

// ---- survey records ---------------------------------------------------------

inline std::string survey_csv(const std::vector<SurveyRecord>& records) {
  std::string out =
      "m,total,n1,n2,n3,n_improper,is_sum2sq,is_9m4_prime,all_first_is_1,"
      "count_1bc\n";
  for (const SurveyRecord& r : records) {
    out += std::to_string(r.m) + "," + std::to_string(r.total) + "," +
           std::to_string(r.n1) + "," + std::to_string(r.n2) + "," +
           std::to_string(r.n3) + "," + std::to_string(r.n_improper) + "," +
           (r.is_sum2sq ? "1" : "0") + "," + (r.is_9m4_prime ? "1" : "0") +
           "," + (r.all_first_is_1 ? "1" : "0") + "," +
           std::to_string(r.count_1bc_formula) + "\n";
  }
  return out;
}

inline Json survey_json(const std::vector<SurveyRecord>& records) {
  Json arr = Json::array();
  for (const SurveyRecord& r : records) {
    arr.push_back({{"m", std::to_string(r.m)},
                   {"total", std::to_string(r.total)},
                   {"n1", std::to_string(r.n1)},
                   {"n2", std::to_string(r.n2)},
                   {"n3", std::to_string(r.n3)},
                   {"n_improper", std::to_string(r.n_improper)},
                   {"is_sum2sq", r.is_sum2sq},
                   {"is_9m4_prime", r.is_9m4_prime},
                   {"all_first_is_1", r.all_first_is_1},
                   {"count_1bc", std::to_string(r.count_1bc_formula)}});
  }
  return arr;
}

// ---- figure series ----------------------------------------------------------

enum class SeriesKind {
  kOrderCounts,               // m,count over the whole range
  kCumulativeUnique,          // m,f: f = #{k <= m with exactly one triple}
  kCumulativeUniquePrime1Mod4,
  kMod3With9m4Prime,          // m,count where 9m-4 prime and m not sum2sq
  kMod3Distribution,          // m,count_mod3 where count != 0
  kCumulativeAll1bc,          // m,f_unique,f_multi over all-(1,b,c) m
};

// Overload with an explicit range contract: the records must cover [lo, hi]
// contiguously, one record per m.
inline std::string series_csv(const std::vector<SurveyRecord>& records,
                              SeriesKind kind, long long lo, long long hi);

inline std::string series_csv(const std::vector<SurveyRecord>& records,
                              SeriesKind kind) {
  std::string out;
  long long acc = 0, acc2 = 0;
  switch (kind) {
    case SeriesKind::kOrderCounts:
      out = "m,count\n";
      for (const auto& r : records)
        out += std::to_string(r.m) + "," + std::to_string(r.total) + "\n";
      break;
    case SeriesKind::kCumulativeUnique:
      out = "m,f\n";
      for (const auto& r : records) {
        if (r.unique_minimal) ++acc;
        out += std::to_string(r.m) + "," + std::to_string(acc) + "\n";
      }
      break;
    case SeriesKind::kCumulativeUniquePrime1Mod4:
      out = "m,f\n";
      for (const auto& r : records) {
        if (r.unique_minimal && r.m % 4 == 1 && is_prime(r.m).prime) ++acc;
        out += std::to_string(r.m) + "," + std::to_string(acc) + "\n";
      }
      break;
    case SeriesKind::kMod3With9m4Prime:
      out = "m,count\n";
      for (const auto& r : records)
        if (r.is_9m4_prime && !r.is_sum2sq)
          out += std::to_string(r.m) + "," + std::to_string(r.total) + "\n";
      break;
    case SeriesKind::kMod3Distribution:
      out = "m,count_mod3\n";
      for (const auto& r : records)
        if (r.total != 0)
          out += std::to_string(r.m) + "," + std::to_string(r.total % 3) + "\n";
      break;
    case SeriesKind::kCumulativeAll1bc:
      out = "m,f_unique,f_multi\n";
      for (const auto& r : records) {
        if (r.all_first_is_1 && r.total == 1) ++acc;
        if (r.all_first_is_1 && r.total > 1) ++acc2;
        out += std::to_string(r.m) + "," + std::to_string(acc) + "," +
               std::to_string(acc2) + "\n";
      }
      break;
  }
  return out;
}

inline std::string series_csv(const std::vector<SurveyRecord>& records,
                              SeriesKind kind, long long lo, long long hi) {
  if (lo < 2 || hi < lo) throw domain_error("series range must satisfy 2 <= lo <= hi");
  long long expect = lo;
  for (const SurveyRecord& r : records) {
    if (r.m == expect) ++expect;
  }
  if (expect <= hi)
    throw domain_error("records do not cover the requested range at m=" +
                       std::to_string(expect));
  return series_csv(records, kind);
}

// ---- trees ------------------------------------------------------------------

inline Json tree_json(const SolutionTree& tree) {
  Json obj;
  obj["m"] = to_dec(tree.m);
  obj["root"] = {to_dec(tree.root.a()), to_dec(tree.root.b()),
                 to_dec(tree.root.c())};
  Json nodes = Json::array();
  for (const TreeNode& n : tree.nodes) {
    nodes.push_back({{"t", {to_dec(n.triple.a()), to_dec(n.triple.b()),
                            to_dec(n.triple.c())}},
                     {"path", n.path},
                     {"depth", std::to_string(n.depth)}});
  }
  obj["nodes"] = std::move(nodes);
  return obj;
}

inline std::string tree_csv(const SolutionTree& tree) {
  std::string out = "path,depth,a,b,c\n";
  for (const TreeNode& n : tree.nodes)
    out += n.path + "," + std::to_string(n.depth) + "," + to_dec(n.triple.a()) +
           "," + to_dec(n.triple.b()) + "," + to_dec(n.triple.c()) + "\n";
  return out;
}

// ---- (1,b,c) counting -------------------------------------------------------

template <Integer I>
Json count1bc_json(const Count1bcResult<I>& r, bool with_terms = false) {
  Json obj;
  obj["exists"] = r.exists;
  obj["count"] = to_dec(r.count);
  obj["l"] = std::to_string(r.l);
  if (with_terms) {
    Json terms = Json::array();
    for (const auto& [d, contribution] : r.terms)
      terms.push_back(
          {{"d", to_dec(d)}, {"contribution", to_dec(contribution)}});
    obj["terms"] = std::move(terms);
  }
  return obj;
}

}  // namespace markoff
