#include <doctest.h>

#include <set>

#include "markoff/emit.hpp"
#include "markoff/integers.hpp"
#include "markoff/tree.hpp"
#include "reference_data.hpp"

using namespace markoff;

namespace {

OrderedTriple<Int> ot(long long m, long long a, long long b, long long c) {
  return OrderedTriple<Int>::make(make_int(m), make_int(a), make_int(b), make_int(c));
}

}  // namespace

TEST_CASE("children") {
  auto [l1, r1] = children(ot(5, 1, 2, 6));
  CHECK(l1 == ot(5, 1, 6, 16));
  CHECK(r1 == ot(5, 2, 6, 35));
  auto [l2, r2] = children(ot(5, 2, 6, 35));
  CHECK(l2 == ot(5, 2, 35, 204));
  CHECK(r2 == ot(5, 6, 35, 628));
  auto [l3, r3] = children(ot(12, 1, 5, 14));
  CHECK(l3 == ot(12, 1, 14, 37));
  CHECK(r3 == ot(12, 5, 14, 209));
}

TEST_CASE("roots") {
  auto r5 = roots(Int(5));
  REQUIRE(r5.size() == 1);
  CHECK(r5[0] == ot(5, 1, 2, 6));

  auto r12 = roots(Int(12));
  REQUIRE(r12.size() == 2);
  CHECK(std::count(r12.begin(), r12.end(), ot(12, 1, 5, 14)) == 1);
  CHECK(std::count(r12.begin(), r12.end(), ot(12, 1, 2, 7)) == 1);

  CHECK(roots(Int(4)).empty());
}

TEST_CASE("expand reproduces the depth-3 tree for m = 5") {
  SolutionTree tree = expand(Int(5), ot(5, 1, 2, 6), 3);
  REQUIRE(tree.nodes.size() == 15);
  const auto& levels = refdata::tree_m5_depth3_levels();
  for (int depth = 0; depth <= 3; ++depth) {
    std::set<std::array<long long, 3>> got, expected;
    for (const TreeNode& n : tree.nodes)
      if (n.depth == depth)
        got.insert({to_ll(n.triple.a()), to_ll(n.triple.b()),
                    to_ll(n.triple.c())});
    for (const auto& t : levels[static_cast<std::size_t>(depth)]) {
      // frozen rows must themselves solve the equation
      REQUIRE(t[0] * t[0] + t[1] * t[1] + t[2] * t[2] ==
              3 * t[0] * t[1] * t[2] + 5);
      expected.insert(t);
    }
    CHECK(got == expected);
  }
}

TEST_CASE("expand validates the root and depth") {
  CHECK(expand(Int(5), ot(5, 1, 2, 6), 0).nodes.size() == 1);
  CHECK_THROWS_AS(expand(Int(5), ot(5, 1, 6, 16), 2), domain_error);
  CHECK_THROWS_AS(expand(Int(12), ot(12, 1, 1, 5), 2), domain_error);
  CHECK_THROWS_AS(expand(Int(5), ot(5, 1, 2, 6), -1), domain_error);
}

TEST_CASE("expand respects the magnitude bound") {
  SolutionTree tree = expand(Int(5), ot(5, 1, 2, 6), 5, Int(1000));
  for (const TreeNode& n : tree.nodes) CHECK(n.triple.c() <= Int(1000));
  CHECK(tree.nodes.size() < 15u);
}

TEST_CASE("max component strictly increases along every path") {
  for (long long mv : {5, 12, 20}) {
    for (const auto& root : roots(make_int(mv))) {
      SolutionTree tree = expand(make_int(mv), root, 4);
      for (const TreeNode& n : tree.nodes) {
        if (n.path.empty()) continue;
        // parent sits earlier in BFS order with path = prefix
        for (const TreeNode& p : tree.nodes)
          if (p.path == n.path.substr(0, n.path.size() - 1))
            CHECK(p.triple.c() < n.triple.c());
      }
    }
  }
}

TEST_CASE("locate examples") {
  Location loc = locate(Int(5), ot(5, 6, 16, 287));
  CHECK(loc.root == ot(5, 1, 2, 6));
  CHECK(loc.path == "LR");
  CHECK(!loc.pre_root);

  Location at_root = locate(Int(12), ot(12, 1, 5, 14));
  CHECK(at_root.root == ot(12, 1, 5, 14));
  CHECK(at_root.path.empty());
  CHECK(!at_root.pre_root);

  Location deep = locate(Int(5), ot(5, 2, 204, 1189));
  CHECK(deep.root == ot(5, 1, 2, 6));
  CHECK(deep.path.size() == 3);

  // improper minimal triple: V3 pre-image of its root
  Location pre = locate(Int(12), ot(12, 1, 1, 5));
  CHECK(pre.root == ot(12, 1, 5, 14));
  CHECK(pre.path.empty());
  CHECK(pre.pre_root);
}

TEST_CASE("every node locates back to its own root and path, m <= 60") {
  for (long long mv = 2; mv <= 60; ++mv) {
    std::set<std::string> all_nodes;  // across trees: must stay disjoint
    for (const auto& root : roots(make_int(mv))) {
      SolutionTree tree = expand(make_int(mv), root, 4);
      for (const TreeNode& n : tree.nodes) {
        std::string key = to_dec(n.triple.a()) + "," + to_dec(n.triple.b()) +
                          "," + to_dec(n.triple.c());
        REQUIRE(all_nodes.insert(key).second);
        Location loc = locate(make_int(mv), n.triple);
        CHECK(loc.root == root);
        CHECK(loc.path == n.path);
      }
    }
  }
}

TEST_CASE("tree JSON uses decimal strings") {
  SolutionTree tree = expand(Int(5), ot(5, 1, 2, 6), 1);
  Json j = tree_json(tree);
  CHECK(j["m"] == "5");
  CHECK(j["root"][2] == "6");
  CHECK(j["nodes"].size() == 3);
  CHECK(j["nodes"][1]["t"][2] == "16");
  CHECK(j["nodes"][1]["path"] == "L");
  CHECK(j["nodes"][2]["depth"] == "1");

  // deep components exceed 64 bits and still serialize exactly
  SolutionTree deep = expand(Int(5), ot(5, 1, 2, 6), 12);
  const TreeNode& last = deep.nodes.back();
  CHECK(to_dec(last.triple.c()).size() > 20u);
  Json dj = tree_json(deep);
  CHECK(dj["nodes"][dj["nodes"].size() - 1]["t"][2] ==
        to_dec(last.triple.c()));
}

TEST_CASE("descent from a deep node with multi-hundred-digit components") {
  SolutionTree deep = expand(make_int(5), ot(5, 1, 2, 6), 14);
  const TreeNode& last = deep.nodes.back();
  CHECK(to_dec(last.triple.c()).size() > 80u);
  DescentResult<Int> d = descend(last.triple);
  CHECK(d.minimal.triple() == ot(5, 1, 2, 6));
  CHECK(d.path.size() == 14);
}

TEST_CASE("expanded nodes never have repeated components") {
  // an ordered solution with a repeated component is minimal and improper,
  // hence the pre-image of a root, never a child-reachable node
  for (long long mv = 2; mv <= 120; ++mv) {
    for (const auto& root : roots(make_int(mv)))
      for (const TreeNode& n : expand(make_int(mv), root, 4).nodes)
        CHECK(!n.triple.improper());
  }
}
