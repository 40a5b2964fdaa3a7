#pragma once

// Solution trees: every positive solution triple lies in exactly one binary
// tree grown from a root by the child rule
//     (x, y, z)  ->  (x, z, 3xz - y)   and   (y, z, 3yz - x).
// Components grow doubly exponentially with depth, so this module works on
// unbounded integers and expansion takes a magnitude cutoff.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "markoff/enumerate.hpp"
#include "markoff/forms.hpp"
#include "markoff/integers.hpp"
#include "markoff/triple.hpp"

namespace markoff {

inline Int default_node_bound() {
  Int b;
  mpz_ui_pow_ui(b.get_mpz_t(), 10, 300);
  return b;
}

inline std::pair<OrderedTriple<Int>, OrderedTriple<Int>> children(
    const OrderedTriple<Int>& t) {
  const Int &x = t.a(), &y = t.b(), &z = t.c();
  return {OrderedTriple<Int>::make(t.m(), x, z, Int(3 * x * z - y)),
          OrderedTriple<Int>::make(t.m(), y, z, Int(3 * y * z - x))};
}

// Roots of all solution trees for m: root_of over the minimal set. Distinct
// minimal triples must give distinct roots.
inline std::vector<OrderedTriple<Int>> roots(const Int& m) {
  std::vector<OrderedTriple<Int>> out;
  std::set<std::string> seen;
  MinimalSet<Int> set = enumerate_minimal_via_forms(m);
  for (const MinimalTriple<Int>& t : set.triples) {
    OrderedTriple<Int> r = root_of(t);
    std::string key = to_dec(r.a()) + "," + to_dec(r.b()) + "," + to_dec(r.c());
    if (!seen.insert(key).second)
      throw invariant_error("two minimal triples share a root for m=" +
                            to_dec(m));
    out.push_back(std::move(r));
  }
  return out;
}

struct TreeNode {
  OrderedTriple<Int> triple;
  std::string path;  // moves from the root, e.g. "LRL"
  int depth = 0;
};

struct SolutionTree {
  Int m;
  OrderedTriple<Int> root;
  std::vector<TreeNode> nodes;  // breadth-first
};

// Breadth-first expansion to `depth`, skipping children whose largest
// component exceeds `bound`. The starting triple must be a root.
inline SolutionTree expand(const Int& m, const OrderedTriple<Int>& root,
                           int depth, const Int& bound = default_node_bound()) {
  if (depth < 0) throw domain_error("expand: depth must be >= 0");
  if (!(root.m() == m)) throw domain_error("expand: root has a different m");
  if (!(root_of(descend(root).minimal) == root))
    throw domain_error("expand: (" + to_dec(root.a()) + "," + to_dec(root.b()) +
                       "," + to_dec(root.c()) + ") is not a root for m=" +
                       to_dec(m));
  SolutionTree tree{m, root, {}};
  std::set<std::string> seen;
  auto add = [&tree, &seen](TreeNode node) {
    std::string key = to_dec(node.triple.a()) + "," + to_dec(node.triple.b()) +
                      "," + to_dec(node.triple.c());
    if (!seen.insert(key).second)
      throw invariant_error("duplicate node in one solution tree, m=" +
                            to_dec(tree.m));
    tree.nodes.push_back(std::move(node));
  };
  add({root, "", 0});
  std::size_t level_begin = 0;
  for (int d = 0; d < depth; ++d) {
    std::size_t level_end = tree.nodes.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      TreeNode parent = tree.nodes[i];  // copy; push_back may reallocate
      auto [left, right] = children(parent.triple);
      if (left.c() <= bound) add({left, parent.path + "L", d + 1});
      if (right.c() <= bound) add({right, parent.path + "R", d + 1});
    }
    level_begin = level_end;
  }
  return tree;
}

struct Location {
  OrderedTriple<Int> root;
  MinimalTriple<Int> minimal;
  std::string path;  // replaying from root reaches the input triple
  // An improper minimal triple is the V3 pre-image of its root rather than a
  // node reachable by child moves; locate reports it with pre_root = true
  // and an empty path.
  bool pre_root = false;
};

// Finds the unique tree containing t: descend to the minimal triple, take
// its root, then read the L/R moves off the reversed descent chain. The
// reconstructed path is replayed and must land on t.
inline Location locate(const Int& m, const OrderedTriple<Int>& t) {
  if (!(t.m() == m)) throw domain_error("locate: triple has a different m");
  DescentResult<Int> d = descend(t);
  OrderedTriple<Int> root = root_of(d.minimal);
  // chain from t down: t, path[0], ..., path[last] (= minimal triple)
  std::vector<const OrderedTriple<Int>*> chain{&t};
  for (const OrderedTriple<Int>& step : d.path) chain.push_back(&step);

  if (chain.size() == 1 && !(root == t)) {
    // t is already minimal but improper; the root is its V3 successor
    return {std::move(root), std::move(d.minimal), "", true};
  }
  // walk the chain upward from the root's position
  std::size_t pos = chain.size();
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (*chain[i] == root) pos = i;
  if (pos == chain.size())
    throw invariant_error("descent chain does not pass through the root, m=" +
                          to_dec(m));
  std::string path;
  OrderedTriple<Int> cur = root;
  for (std::size_t i = pos; i > 0; --i) {
    auto [left, right] = children(cur);
    if (left == *chain[i - 1]) {
      path += 'L';
      cur = left;
    } else if (right == *chain[i - 1]) {
      path += 'R';
      cur = right;
    } else {
      throw invariant_error("descent step is not a child of its successor, "
                            "m=" + to_dec(m));
    }
  }
  if (!(cur == t))
    throw invariant_error("replayed path does not reach the located triple, "
                          "m=" + to_dec(m));
  return {std::move(root), std::move(d.minimal), std::move(path), false};
}

}  // namespace markoff
