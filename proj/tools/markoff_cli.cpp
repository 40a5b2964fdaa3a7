// Command-line front end. Every subcommand prints deterministic CSV or JSON
// on stdout. Exit codes: 0 success, 1 domain/usage error, 2 internal
// invariant violation (a bug: some mathematical law the library re-checks at
// runtime failed).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "markoff/markoff.hpp"

namespace {

using namespace markoff;

struct RangeArg {
  long long lo = 0, hi = 0;
};

RangeArg parse_range(const std::string& s) {
  auto pos = s.find("..");
  if (pos == std::string::npos)
    throw domain_error("range must look like LO..HI, got '" + s + "'");
  RangeArg r;
  r.lo = parse_dec<long long>(s.substr(0, pos));
  r.hi = parse_dec<long long>(s.substr(pos + 2));
  return r;
}

std::vector<Int> parse_triple(const std::string& s) {
  std::vector<Int> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    parts.push_back(parse_dec<Int>(
        s.substr(start, comma == std::string::npos ? comma : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3)
    throw domain_error("triple must look like A,B,C, got '" + s + "'");
  return parts;
}

Method parse_method(const std::string& s) {
  if (s == "brute") return Method::kBrute;
  if (s == "forms") return Method::kForms;
  if (s == "both") return Method::kBoth;
  if (s == "auto") return Method::kAuto;
  throw domain_error("unknown method '" + s + "'");
}

SeriesKind parse_series(const std::string& s) {
  if (s == "order_counts") return SeriesKind::kOrderCounts;
  if (s == "cumulative_unique") return SeriesKind::kCumulativeUnique;
  if (s == "cumulative_unique_prime1mod4")
    return SeriesKind::kCumulativeUniquePrime1Mod4;
  if (s == "mod3_with_9m4_prime") return SeriesKind::kMod3With9m4Prime;
  if (s == "mod3_distribution") return SeriesKind::kMod3Distribution;
  if (s == "cumulative_all_1bc") return SeriesKind::kCumulativeAll1bc;
  throw domain_error("unknown series '" + s + "'");
}

bool fits_fast(const Int& m) { return fits_ll(m) && to_ll(m) <= kFastMLimit; }

template <Integer I>
MinimalSet<I> enumerate_with(const I& m, Method method) {
  switch (method) {
    case Method::kBrute:
      return enumerate_minimal_bruteforce<I>(m);
    case Method::kForms:
      return enumerate_minimal_via_forms<I>(m);
    case Method::kAuto:
      return enumerate_with(m, m <= I(10000) ? Method::kBoth : Method::kForms);
    default: {
      MinimalSet<I> brute = enumerate_minimal_bruteforce<I>(m);
      MinimalSet<I> forms = enumerate_minimal_via_forms<I>(m);
      if (!(brute == forms))
        throw invariant_error("enumerators disagree at m=" + to_dec(m));
      return brute;
    }
  }
}

template <Integer I>
void run_minimal(const std::vector<I>& ms, Method method,
                 const std::string& format) {
  std::vector<MinimalSet<I>> sets;
  for (const I& m : ms) sets.push_back(enumerate_with(m, method));
  if (format == "json")
    std::cout << minimal_json(sets).dump(2) << "\n";
  else
    std::cout << minimal_csv(sets);
}

template <Integer I>
void run_fundsols(const I& m, const std::string& a_arg,
                  const std::string& format) {
  std::vector<std::pair<I, std::vector<FundamentalSolution<I>>>> per_a;
  if (!a_arg.empty()) {
    I a = parse_dec<I>(a_arg);
    per_a.emplace_back(a, fundamental_solutions(FormContext<I>::make(m, a)));
  } else {
    for (I a(1); a * a < m; a = a + I(1))
      per_a.emplace_back(a, fundamental_solutions(FormContext<I>::make(m, a)));
  }
  if (format == "json")
    std::cout << fundsols_json(per_a).dump(2) << "\n";
  else
    std::cout << fundsols_csv(per_a);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal triples, solution trees and fundamental solutions of "
               "a^2+b^2+c^2 = 3abc+m"};
  app.require_subcommand(1);

  std::string m_arg, range_arg, a_arg, triple_arg, root_arg, bound_arg;
  std::string method_arg = "auto", format_arg = "csv", series_arg;
  int depth = 3, workers = 0;
  bool with_terms = false;

  auto* cmd_minimal = app.add_subcommand("minimal", "enumerate minimal triples");
  cmd_minimal->add_option("--m", m_arg, "single parameter m");
  cmd_minimal->add_option("--range", range_arg, "range LO..HI of m");
  cmd_minimal->add_option("--method", method_arg, "brute|forms|both|auto");
  cmd_minimal->add_option("--format", format_arg, "csv|json");

  auto* cmd_fundsols =
      app.add_subcommand("fundsols", "fundamental solutions of x^2-3axy+y^2 = m-a^2");
  cmd_fundsols->add_option("--m", m_arg)->required();
  cmd_fundsols->add_option("--a", a_arg, "restrict to one a (default: all a^2 < m)");
  cmd_fundsols->add_option("--format", format_arg, "csv|json");

  auto* cmd_tree = app.add_subcommand("tree", "expand solution trees");
  cmd_tree->add_option("--m", m_arg)->required();
  cmd_tree->add_option("--root", root_arg, "root triple A,B,C (default: every root)");
  cmd_tree->add_option("--depth", depth, "expansion depth (default 3)");
  cmd_tree->add_option("--bound", bound_arg, "max component magnitude (default 10^300)");
  std::string tree_format = "json";
  cmd_tree->add_option("--format", tree_format, "json|csv");

  auto* cmd_descend = app.add_subcommand("descend", "descend a triple to its minimal triple");
  cmd_descend->add_option("--m", m_arg)->required();
  cmd_descend->add_option("--triple", triple_arg, "triple A,B,C")->required();

  auto* cmd_locate = app.add_subcommand("locate", "find the tree and path containing a triple");
  cmd_locate->add_option("--m", m_arg)->required();
  cmd_locate->add_option("--triple", triple_arg, "triple A,B,C")->required();

  auto* cmd_count = app.add_subcommand("count1bc", "closed-form count of minimal (1,b,c)");
  cmd_count->add_option("--m", m_arg)->required();
  cmd_count->add_flag("--terms", with_terms, "include per-divisor terms");

  auto* cmd_exists = app.add_subcommand("exists1bc", "existence of a triple (1,b,c)");
  cmd_exists->add_option("--m", m_arg)->required();

  auto* cmd_survey = app.add_subcommand("survey", "per-m aggregate records over a range");
  cmd_survey->add_option("--range", range_arg, "range LO..HI")->required();
  cmd_survey->add_option("--method", method_arg, "brute|forms|both|auto");
  cmd_survey->add_option("--format", format_arg, "csv|json");
  cmd_survey->add_option("--series", series_arg,
                         "order_counts|cumulative_unique|cumulative_unique_prime1mod4|"
                         "mod3_with_9m4_prime|mod3_distribution|cumulative_all_1bc");
  cmd_survey->add_option("--workers", workers, "worker threads (default: MARKOFF_WORKERS or hardware)");

  auto* cmd_verify = app.add_subcommand("verify", "run the invariant battery over a range");
  cmd_verify->add_option("--range", range_arg, "range LO..HI")->required();
  cmd_verify->add_option("--workers", workers);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_minimal->parsed()) {
      if (m_arg.empty() == range_arg.empty())
        throw domain_error("minimal: pass exactly one of --m or --range");
      Method method = parse_method(method_arg);
      if (!m_arg.empty()) {
        Int m = parse_dec<Int>(m_arg);
        if (fits_fast(m))
          run_minimal<long long>({to_ll(m)}, method, format_arg);
        else
          run_minimal<Int>({m}, method, format_arg);
      } else {
        RangeArg r = parse_range(range_arg);
        check_scan_range(r.lo, r.hi);
        std::vector<long long> ms;
        for (long long m = r.lo; m <= r.hi; ++m) ms.push_back(m);
        run_minimal<long long>(ms, method, format_arg);
      }
    } else if (cmd_fundsols->parsed()) {
      Int m = parse_dec<Int>(m_arg);
      if (fits_fast(m))
        run_fundsols<long long>(to_ll(m), a_arg, format_arg);
      else
        run_fundsols<Int>(m, a_arg, format_arg);
    } else if (cmd_tree->parsed()) {
      Int m = parse_dec<Int>(m_arg);
      Int bound = bound_arg.empty() ? default_node_bound() : parse_dec<Int>(bound_arg);
      std::vector<OrderedTriple<Int>> tree_roots;
      if (!root_arg.empty()) {
        auto t = parse_triple(root_arg);
        tree_roots.push_back(OrderedTriple<Int>::make(m, t[0], t[1], t[2]));
      } else {
        tree_roots = roots(m);
      }
      if (tree_format == "csv") {
        if (tree_roots.size() != 1)
          throw domain_error("tree --format csv needs a single root; pass --root");
        std::cout << tree_csv(expand(m, tree_roots[0], depth, bound));
      } else {
        Json arr = Json::array();
        for (const auto& r : tree_roots)
          arr.push_back(tree_json(expand(m, r, depth, bound)));
        std::cout << (tree_roots.size() == 1 ? arr[0] : arr).dump(2) << "\n";
      }
    } else if (cmd_descend->parsed()) {
      Int m = parse_dec<Int>(m_arg);
      auto t = parse_triple(triple_arg);
      DescentResult<Int> d = descend(OrderedTriple<Int>::make(m, t[0], t[1], t[2]));
      Json obj;
      obj["minimal"] = {to_dec(d.minimal.a()), to_dec(d.minimal.b()),
                        to_dec(d.minimal.c())};
      obj["phi"] = to_dec(d.minimal.phi());
      obj["order"] = std::to_string(ord_of(d.minimal));
      Json path = Json::array();
      for (const auto& step : d.path)
        path.push_back({to_dec(step.a()), to_dec(step.b()), to_dec(step.c())});
      obj["path"] = std::move(path);
      std::cout << obj.dump(2) << "\n";
    } else if (cmd_locate->parsed()) {
      Int m = parse_dec<Int>(m_arg);
      auto t = parse_triple(triple_arg);
      Location loc = locate(m, OrderedTriple<Int>::make(m, t[0], t[1], t[2]));
      Json obj;
      obj["root"] = {to_dec(loc.root.a()), to_dec(loc.root.b()),
                     to_dec(loc.root.c())};
      obj["minimal"] = {to_dec(loc.minimal.a()), to_dec(loc.minimal.b()),
                        to_dec(loc.minimal.c())};
      obj["path"] = loc.path;
      obj["pre_root"] = loc.pre_root;
      std::cout << obj.dump(2) << "\n";
    } else if (cmd_count->parsed()) {
      Int m = parse_dec<Int>(m_arg);
      if (fits_fast(m))
        std::cout << count1bc_json(count_1bc<long long>(to_ll(m)), with_terms).dump() << "\n";
      else
        std::cout << count1bc_json(count_1bc<Int>(m), with_terms).dump() << "\n";
    } else if (cmd_exists->parsed()) {
      Int m = parse_dec<Int>(m_arg);
      Json obj;
      obj["exists"] = fits_fast(m) ? exists_1bc<long long>(to_ll(m)) : exists_1bc<Int>(m);
      std::cout << obj.dump() << "\n";
    } else if (cmd_survey->parsed()) {
      RangeArg r = parse_range(range_arg);
      auto records = scan(r.lo, r.hi, parse_method(method_arg), workers);
      if (!series_arg.empty())
        std::cout << series_csv(records, parse_series(series_arg));
      else if (format_arg == "json")
        std::cout << survey_json(records).dump(2) << "\n";
      else
        std::cout << survey_csv(records);
    } else if (cmd_verify->parsed()) {
      RangeArg r = parse_range(range_arg);
      // Method::kBoth hard-checks per m: dual enumerators equal, order
      // partition laws, the cardinality identity, and the (1,b,c) count.
      scan(r.lo, r.hi, Method::kBoth, workers);
      std::printf("verify [%lld,%lld]: dual enumerators agree on every m\n", r.lo, r.hi);
      std::printf("verify [%lld,%lld]: order partition laws hold (#O2 even, 3 | #O3)\n", r.lo, r.hi);
      std::printf("verify [%lld,%lld]: sum_a #S_a = 2*#minimal - #improper holds\n", r.lo, r.hi);
      std::printf("verify [%lld,%lld]: closed-form (1,b,c) count matches enumeration\n", r.lo, r.hi);
      auto bad = verify_prop_9m4(r.lo, r.hi, workers);
      if (!bad.empty())
        throw invariant_error("9m-4 divisibility law violated at m=" + std::to_string(bad.front()));
      std::printf("verify [%lld,%lld]: no 9m-4 divisibility violations\n", r.lo, r.hi);
      std::printf("OK\n");
    }
  } catch (const invariant_error& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
