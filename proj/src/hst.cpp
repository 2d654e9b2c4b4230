#include "uassoc/hst.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uassoc/rng.hpp"

namespace uassoc {

LabelMetric LabelMetric::unit(int n) {
  if (n < 1) throw std::invalid_argument("LabelMetric: n must be >= 1");
  std::vector<double> d(static_cast<size_t>(n) * n, 1.0);
  for (int i = 0; i < n; ++i) d[static_cast<size_t>(i) * n + i] = 0.0;
  return LabelMetric(n, std::move(d));
}

LabelMetric LabelMetric::from_distances(int n, std::vector<double> dist) {
  if (n < 1) throw std::invalid_argument("LabelMetric: n must be >= 1");
  if (dist.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("LabelMetric: distance matrix must be n*n");
  auto at = [&](int a, int b) { return dist[static_cast<size_t>(a) * n + b]; };
  for (int a = 0; a < n; ++a) {
    if (at(a, a) != 0.0) throw std::invalid_argument("LabelMetric: diagonal must be zero");
    for (int b = 0; b < n; ++b) {
      if (!(at(a, b) >= 0.0) || !std::isfinite(at(a, b)))
        throw std::invalid_argument("LabelMetric: distances must be finite and nonnegative");
      if (at(a, b) != at(b, a)) throw std::invalid_argument("LabelMetric: matrix must be symmetric");
    }
  }
  const double slack = 1e-12;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(a, b) > at(a, c) + at(c, b) + slack * (1.0 + at(a, b)))
          throw std::invalid_argument("LabelMetric: triangle inequality violated at (" + std::to_string(a) +
                                      "," + std::to_string(b) + "," + std::to_string(c) + ")");
  return LabelMetric(n, std::move(dist));
}

LabelMetric LabelMetric::euclidean(const std::vector<Point>& points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw std::invalid_argument("LabelMetric: need at least one point");
  std::vector<double> d(static_cast<size_t>(n) * n, 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) d[static_cast<size_t>(a) * n + b] = distance(points[a], points[b]);
  return LabelMetric(n, std::move(d));
}

double LabelMetric::diameter() const {
  double diam = 0.0;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) diam = std::max(diam, dist(a, b));
  return diam;
}

namespace {

// Smallest power of two >= x (x > 0), allowing negative exponents.
double pow2_ceil(double x) {
  double p = std::exp2(std::ceil(std::log2(x)));
  while (p < x) p *= 2.0;     // guard against log2 rounding down
  while (p / 2.0 >= x) p /= 2.0;
  return p;
}

struct Builder {
  const LabelMetric& metric;
  const std::vector<int>& order;  // random permutation of labels, cut priority
  double beta;                    // radius scale in [1,2)
  double delta;                   // top scale
  HSTree tree;
  static constexpr int kMaxDepth = 1024;

  double cluster_diameter(const std::vector<int>& members) const {
    double diam = 0.0;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        diam = std::max(diam, metric.dist(members[i], members[j]));
    return diam;
  }

  // Creates the node for `members` at `depth` and recursively cuts it.
  int build(std::vector<int> members, int parent, int depth) {
    const int id = static_cast<int>(tree.nodes.size());
    tree.nodes.emplace_back();
    HstNode& node = tree.nodes[id];
    node.parent = parent;
    node.depth = depth;
    node.parent_edge = parent < 0 ? 0.0 : delta * std::exp2(-(depth - 1));
    node.leaves = members;

    if (members.size() == 1) {
      node.label = members[0];
      tree.leaf_of_label[members[0]] = id;
      return id;
    }
    if (depth >= kMaxDepth) throw std::runtime_error("build_hst: depth limit exceeded");

    std::vector<std::vector<int>> parts;
    if (cluster_diameter(members) == 0.0) {
      // Coincident labels can never be separated by ball cutting; split them
      // into singletons here.
      for (int v : members) parts.push_back({v});
    } else {
      const double radius = beta * delta * std::exp2(-(depth + 2));
      std::vector<char> assigned(members.size(), 0);
      size_t remaining = members.size();
      for (int center : order) {
        if (remaining == 0) break;
        std::vector<int> part;
        for (size_t i = 0; i < members.size(); ++i) {
          if (assigned[i]) continue;
          if (metric.dist(center, members[i]) <= radius) {
            part.push_back(members[i]);
            assigned[i] = 1;
            --remaining;
          }
        }
        if (!part.empty()) parts.push_back(std::move(part));
      }
    }

    // nodes vector may reallocate during recursion; don't hold the reference.
    std::vector<int> child_ids;
    child_ids.reserve(parts.size());
    for (auto& part : parts) child_ids.push_back(build(std::move(part), id, depth + 1));
    tree.nodes[id].children = std::move(child_ids);
    return id;
  }
};

}  // namespace

HSTree build_hst(const LabelMetric& m, uint64_t seed) {
  const int n = m.size();
  HSTree tree;
  tree.leaf_of_label.assign(n, -1);

  if (n == 1) {
    HstNode root;
    root.label = 0;
    root.leaves = {0};
    tree.nodes.push_back(root);
    tree.leaf_of_label[0] = 0;
    tree.top_length = 0.0;
    return tree;
  }

  SplitMix64 rng = SplitMix64::stream(seed, 0);
  const std::vector<int> order = rng.permutation(n);
  const double beta = 1.0 + rng.next_double();  // [1, 2)
  const double diam = m.diameter();
  const double delta = diam > 0.0 ? pow2_ceil(diam) : 1.0;

  Builder builder{m, order, beta, delta, std::move(tree)};
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  builder.build(std::move(all), -1, 0);
  builder.tree.top_length = delta;
  return std::move(builder.tree);
}

double tree_distance(const HSTree& t, int a, int b) {
  const int n = t.num_labels();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw std::invalid_argument("tree_distance: unknown label " + std::to_string(a < 0 || a >= n ? a : b));
  if (a == b) return 0.0;
  int u = t.leaf_of_label[a];
  int v = t.leaf_of_label[b];
  double total = 0.0;
  while (u != v) {
    // Walk the deeper side up; on equal depth advance both.
    if (t.nodes[u].depth >= t.nodes[v].depth) {
      total += t.nodes[u].parent_edge;
      u = t.nodes[u].parent;
    } else {
      total += t.nodes[v].parent_edge;
      v = t.nodes[v].parent;
    }
  }
  return total;
}

std::vector<Subtree> enumerate_subtrees(const HSTree& t) {
  std::vector<Subtree> out;
  for (size_t id = 1; id < t.nodes.size(); ++id)  // skip the root; pre-order by construction
    out.push_back({t.nodes[id].parent_edge, t.nodes[id].leaves});
  return out;
}

EmbeddingReport verify_embedding(const HSTree& t, const LabelMetric& m) {
  if (t.num_labels() != m.size()) throw std::invalid_argument("verify_embedding: label count mismatch");
  EmbeddingReport rep;
  rep.dominance_ok = true;
  rep.max_stretch = 1.0;
  for (int a = 0; a < m.size(); ++a) {
    for (int b = a + 1; b < m.size(); ++b) {
      const double dt = tree_distance(t, a, b);
      const double d = m.dist(a, b);
      if (dt < d) rep.dominance_ok = false;
      if (d > 0.0) rep.max_stretch = std::max(rep.max_stretch, dt / d);
    }
  }
  return rep;
}

}  // namespace uassoc
