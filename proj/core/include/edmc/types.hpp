#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edmc/matrix.hpp"

namespace edmc {

/// Hollow symmetric nonnegative matrix of squared dissimilarities.
/// Off-diagonal entries may be missing (NaN), mirrored across the diagonal.
class SquaredDistanceMatrix {
 public:
  explicit SquaredDistanceMatrix(Matrix values);

  int order() const { return m_.rows(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& values() const { return m_; }

  bool complete() const { return missing_pairs_ == 0; }
  int missing_pairs() const { return missing_pairs_; }

 private:
  Matrix m_;
  int missing_pairs_ = 0;
};

/// Symmetric matrix of inner products. Positive semidefiniteness and zero
/// row sums are properties of how the matrix was produced, checked by the
/// operations that rely on them.
class GramMatrix {
 public:
  explicit GramMatrix(Matrix values);

  int order() const { return m_.rows(); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Matrix& values() const { return m_; }

 private:
  Matrix m_;
};

/// n points in R^p, one per row. All entries finite, n >= 1, p >= 1.
class PointConfiguration {
 public:
  explicit PointConfiguration(Matrix coords);

  int count() const { return m_.rows(); }
  int dim() const { return m_.cols(); }
  double operator()(int i, int k) const { return m_(i, k); }
  const Matrix& coords() const { return m_; }

 private:
  Matrix m_;
};

/// Symmetric hollow 0/1 matrix marking known entries. The induced graph is
/// validated to be connected on construction.
class AdjacencyMask {
 public:
  static AdjacencyMask complete(int n);
  static AdjacencyMask from_matrix(const Matrix& zero_one);
  static AdjacencyMask from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int order() const { return n_; }
  bool operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * n_ + j] != 0;
  }
  int known_pairs() const { return known_pairs_; }
  bool is_complete_graph() const { return known_pairs_ == n_ * (n_ - 1) / 2; }

 private:
  AdjacencyMask(int n, std::vector<uint8_t> a, int known_pairs)
      : n_(n), a_(std::move(a)), known_pairs_(known_pairs) {}
  static void check_connected(int n, const std::vector<uint8_t>& a);

  int n_ = 0;
  std::vector<uint8_t> a_;
  int known_pairs_ = 0;
};

struct TreeEdge {
  int i = 0;  // always i < j
  int j = 0;
  double weight = 0.0;  // squared-dissimilarity units
};

inline bool operator==(const TreeEdge& a, const TreeEdge& b) {
  return a.i == b.i && a.j == b.j && a.weight == b.weight;
}

/// Tree spanning vertices {0, ..., n-1}: exactly n-1 edges, connected,
/// acyclic, nonnegative weights. Edges are stored with i < j, sorted.
class SpanningTree {
 public:
  SpanningTree(int order, std::vector<TreeEdge> edges);

  int order() const { return n_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;
  /// Weight of edge (i, j); throws if the edge is not in the tree.
  double weight(int i, int j) const;
  double total_weight() const;
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  /// Neighbor list per vertex as (neighbor, weight) pairs.
  const std::vector<std::vector<std::pair<int, double>>>& adjacency() const {
    return adj_;
  }
  /// True when both trees span the same vertices with the same edge pairs,
  /// ignoring weights.
  bool same_edge_set(const SpanningTree& other) const;

 private:
  int n_ = 0;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::pair<int, double>>> adj_;
};

/// A tree over a subset of vertices of some larger graph; used when a
/// spanning tree is recursively split.
struct Subtree {
  std::vector<int> vertices;
  std::vector<TreeEdge> edges;
};

Subtree as_subtree(const SpanningTree& t);

/// Known squared dissimilarities on the edges of a connected mask graph.
/// Values are NaN exactly where the mask is zero.
class PartialDissimilarity {
 public:
  PartialDissimilarity(AdjacencyMask mask, Matrix values);

  static PartialDissimilarity from_tree(const SpanningTree& t);
  /// Full mask over a completely observed matrix.
  static PartialDissimilarity from_complete(const SquaredDistanceMatrix& d);
  /// Mask derived from the present entries of a possibly incomplete matrix.
  static PartialDissimilarity from_incomplete(const SquaredDistanceMatrix& d);

  int order() const { return mask_.order(); }
  const AdjacencyMask& mask() const { return mask_; }
  const Matrix& values() const { return values_; }
  /// Value of a known entry; throws if (i, j) is not in the mask.
  double known(int i, int j) const;
  bool complete() const { return mask_.is_complete_graph(); }

 private:
  AdjacencyMask mask_;
  Matrix values_;
};

/// Elementwise box [lower, upper] on squared dissimilarities. Upper entries
/// may be +infinity; arithmetic never saturates through it.
struct BoundsPair {
  Matrix lower;
  Matrix upper;
};

/// Validates 0 <= lower <= upper, hollow and symmetric, finite lower.
BoundsPair make_bounds(Matrix lower, Matrix upper);

/// Known entries pinned, unknown entries free in [0, +inf).
BoundsPair default_bounds(const PartialDissimilarity& p);

/// Throws unless bounds pin every known entry of p and form a valid box.
void check_bounds_consistent(const PartialDissimilarity& p, const BoundsPair& b);

}  // namespace edmc
