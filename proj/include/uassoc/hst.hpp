#pragma once

#include <cstdint>
#include <vector>

#include "uassoc/netmodel.hpp"

namespace uassoc {

/// Finite metric over labels {0, ..., n-1}. Construction validates symmetry,
/// zero diagonal, nonnegativity and the triangle inequality.
class LabelMetric {
 public:
  /// d(a,b) = 1 for a != b.
  static LabelMetric unit(int n);

  /// From a row-major n*n distance matrix.
  static LabelMetric from_distances(int n, std::vector<double> dist);

  /// Euclidean distances between points.
  static LabelMetric euclidean(const std::vector<Point>& points);

  int size() const { return n_; }
  double dist(int a, int b) const { return dist_[static_cast<size_t>(a) * n_ + b]; }
  double diameter() const;

 private:
  LabelMetric(int n, std::vector<double> dist) : n_(n), dist_(std::move(dist)) {}
  int n_ = 0;
  std::vector<double> dist_;
};

struct HstNode {
  int parent = -1;
  double parent_edge = 0.0;   ///< edge length to the parent; 0 for the root
  int depth = 0;
  int label = -1;             ///< leaf label, or -1 for internal nodes
  std::vector<int> children;  ///< node ids
  std::vector<int> leaves;    ///< labels under this node, ascending
};

/// 2-hierarchically-well-separated tree over a label metric. A node at depth k
/// hangs its children by edges of length top_length * 2^-k, so edge lengths
/// halve per level, and tree distances dominate the source metric.
struct HSTree {
  std::vector<HstNode> nodes;  ///< nodes[0] is the root; stored in pre-order
  double top_length = 0.0;     ///< child-edge length at the root
  std::vector<int> leaf_of_label;

  int root() const { return 0; }
  int num_labels() const { return static_cast<int>(leaf_of_label.size()); }
};

/// One entry per non-root node: parent-edge length and the leaf set under it.
struct Subtree {
  double length = 0.0;
  std::vector<int> leaves;
};

struct EmbeddingReport {
  bool dominance_ok = false;
  double max_stretch = 1.0;  ///< max over pairs of d_T/d; 1 when no positive pair exists
};

/// Randomized ball-cutting construction: a random label permutation and a
/// random radius scale in [1,2) drive a hierarchical decomposition whose cut
/// radii halve per level. Deterministic for a fixed seed.
HSTree build_hst(const LabelMetric& m, uint64_t seed);

/// Sum of edge lengths on the unique a-b path. Throws on unknown labels.
double tree_distance(const HSTree& t, int a, int b);

/// All (l_T, L(T)) pairs in deterministic pre-order.
std::vector<Subtree> enumerate_subtrees(const HSTree& t);

/// Checks d_T >= d for all pairs and reports the worst stretch ratio.
EmbeddingReport verify_embedding(const HSTree& t, const LabelMetric& m);

}  // namespace uassoc
