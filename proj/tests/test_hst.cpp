#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "uassoc/hst.hpp"
#include "uassoc/rng.hpp"

using namespace uassoc;

namespace {

LabelMetric random_euclidean_metric(int n, uint64_t seed) {
  SplitMix64 rng = SplitMix64::stream(seed, 3);
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(0.0, 100.0), rng.uniform(0.0, 100.0)});
  return LabelMetric::euclidean(pts);
}

}  // namespace

TEST_CASE("single label builds a lone leaf") {
  const HSTree t = build_hst(LabelMetric::unit(1), 42);
  CHECK(t.nodes.size() == 1);
  CHECK(t.nodes[0].label == 0);
  CHECK(enumerate_subtrees(t).empty());
  CHECK(tree_distance(t, 0, 0) == 0.0);
  const EmbeddingReport rep = verify_embedding(t, LabelMetric::unit(1));
  CHECK(rep.dominance_ok);
  CHECK(rep.max_stretch == 1.0);
}

TEST_CASE("two unit-distance labels split at the root") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const HSTree t = build_hst(LabelMetric::unit(2), seed);
    CHECK(t.nodes[0].children.size() == 2);
    const double d = tree_distance(t, 0, 1);
    CHECK(d >= 1.0);
    CHECK(d <= 4.0);
  }
}

TEST_CASE("unit metrics separate everyone at once: equal pairwise distances") {
  for (int n : {3, 4, 7}) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      const HSTree t = build_hst(LabelMetric::unit(n), seed);
      const double first = tree_distance(t, 0, 1);
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) CHECK(tree_distance(t, a, b) == first);
    }
  }
}

TEST_CASE("2-HST structure: sibling edges equal, halving per level") {
  const LabelMetric m = random_euclidean_metric(9, 4);
  const HSTree t = build_hst(m, 11);
  for (const HstNode& node : t.nodes) {
    if (node.children.empty()) {
      CHECK(node.label >= 0);
      continue;
    }
    const double expected = t.top_length * std::exp2(-node.depth);
    for (int c : node.children) {
      CHECK(t.nodes[c].parent_edge == expected);
      CHECK(t.nodes[c].depth == node.depth + 1);
    }
  }
  // Leaf sets of children partition the parent's leaf set.
  for (const HstNode& node : t.nodes) {
    if (node.children.empty()) continue;
    size_t total = 0;
    for (int c : node.children) total += t.nodes[c].leaves.size();
    CHECK(total == node.leaves.size());
  }
}

TEST_CASE("dominance holds on random Euclidean metrics") {
  for (int n : {2, 5, 8, 12}) {
    for (uint64_t seed = 0; seed < 50; ++seed) {
      const LabelMetric m = random_euclidean_metric(n, seed * 131 + n);
      const HSTree t = build_hst(m, seed);
      const EmbeddingReport rep = verify_embedding(t, m);
      CHECK(rep.dominance_ok);
    }
  }
}

TEST_CASE("coincident points are still separated with zero distance") {
  // Two labels at distance zero plus one far label.
  std::vector<double> d = {0, 0, 5, 0, 0, 5, 5, 5, 0};
  const LabelMetric m = LabelMetric::from_distances(3, d);
  const HSTree t = build_hst(m, 9);
  CHECK(t.leaf_of_label[0] != t.leaf_of_label[1]);
  CHECK(tree_distance(t, 0, 1) >= 0.0);
  CHECK(verify_embedding(t, m).dominance_ok);
}

TEST_CASE("build is deterministic per seed") {
  const LabelMetric m = random_euclidean_metric(8, 77);
  const HSTree a = build_hst(m, 5);
  const HSTree b = build_hst(m, 5);
  REQUIRE(a.nodes.size() == b.nodes.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) CHECK(tree_distance(a, i, j) == tree_distance(b, i, j));
}

TEST_CASE("tree_distance basics") {
  const HSTree t = build_hst(LabelMetric::unit(4), 3);
  CHECK(tree_distance(t, 2, 2) == 0.0);
  CHECK(tree_distance(t, 0, 1) == tree_distance(t, 1, 0));
  CHECK_THROWS_AS(tree_distance(t, 0, 9), std::invalid_argument);

  // Siblings below the root of a unit-metric tree: both edges have the top length.
  CHECK(tree_distance(t, 0, 1) == 2.0 * t.top_length);
}

TEST_CASE("enumerate_subtrees indexes every non-root node consistently") {
  const HSTree t = build_hst(LabelMetric::unit(2), 8);
  const auto subtrees = enumerate_subtrees(t);
  REQUIRE(subtrees.size() == 2);
  CHECK(subtrees[0].leaves.size() == 1);
  CHECK(subtrees[1].leaves.size() == 1);
  CHECK(subtrees[0].length == subtrees[1].length);
}

TEST_CASE("subtree indicator identity reproduces tree distance exactly") {
  for (uint64_t seed : {1, 2, 3}) {
    const LabelMetric m = random_euclidean_metric(7, seed + 50);
    const HSTree t = build_hst(m, seed);
    const auto subtrees = enumerate_subtrees(t);
    for (int a = 0; a < m.size(); ++a) {
      for (int b = a + 1; b < m.size(); ++b) {
        double sum = 0.0;
        for (const Subtree& st : subtrees) {
          bool has_a = false, has_b = false;
          for (int leaf : st.leaves) {
            has_a |= leaf == a;
            has_b |= leaf == b;
          }
          if (has_a != has_b) sum += st.length;
        }
        CHECK(sum == tree_distance(t, a, b));
      }
    }
  }
}

TEST_CASE("unit metric embedding quality") {
  for (int n : {2, 4, 9, 16}) {
    for (uint64_t seed = 0; seed < 50; ++seed) {
      const LabelMetric m = LabelMetric::unit(n);
      const HSTree t = build_hst(m, seed);
      const EmbeddingReport rep = verify_embedding(t, m);
      CHECK(rep.dominance_ok);
      CHECK(rep.max_stretch <= 4.0);
    }
  }
}

TEST_CASE("metric validation rejects broken inputs") {
  CHECK_THROWS_AS(LabelMetric::from_distances(2, {0, 1, 2, 0}), std::invalid_argument);  // asymmetric
  CHECK_THROWS_AS(LabelMetric::from_distances(2, {1, 1, 1, 0}), std::invalid_argument);  // diagonal
  // Triangle violation: d(0,2) = 10 > d(0,1) + d(1,2) = 2.
  CHECK_THROWS_AS(LabelMetric::from_distances(3, {0, 1, 10, 1, 0, 1, 10, 1, 0}),
                  std::invalid_argument);
}
