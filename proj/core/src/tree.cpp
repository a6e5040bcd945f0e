#include "edmc/tree.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace edmc {
namespace {

bool tied(double a, double b) {
  return std::abs(a - b) <= kMstTieTolerance * std::max(std::abs(a), std::abs(b));
}

// (min, max) normalized pair order.
bool edge_less(int ai, int aj, int bi, int bj) {
  if (ai > aj) std::swap(ai, aj);
  if (bi > bj) std::swap(bi, bj);
  return ai != bi ? ai < bi : aj < bj;
}

}  // namespace

SpanningTree mst(const Matrix& delta, const AdjacencyMask& mask, bool* ties) {
  const int n = mask.order();
  if (delta.rows() != n || delta.cols() != n)
    throw std::invalid_argument("mst: delta shape must match the mask");
  if (ties) *ties = false;

  std::vector<char> in_tree(n, 0);
  std::vector<double> key(n, 0.0);
  std::vector<int> from(n, -1);
  in_tree[0] = 1;
  for (int v = 1; v < n; ++v)
    if (mask(0, v)) {
      key[v] = delta(0, v);
      from[v] = 0;
    }

  std::vector<TreeEdge> edges;
  edges.reserve(n - 1);
  for (int step = 1; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[v] || from[v] < 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      if (tied(key[v], key[best])) {
        if (ties) *ties = true;
        if (edge_less(from[v], v, from[best], best)) best = v;
      } else if (key[v] < key[best]) {
        best = v;
      }
    }
    if (best < 0) throw std::invalid_argument("mst: graph is disconnected");

    edges.push_back(TreeEdge{std::min(from[best], best),
                             std::max(from[best], best), key[best]});
    in_tree[best] = 1;
    for (int v = 0; v < n; ++v) {
      if (in_tree[v] || !mask(best, v)) continue;
      const double w = delta(best, v);
      if (from[v] < 0) {
        key[v] = w;
        from[v] = best;
        continue;
      }
      if (tied(w, key[v])) {
        if (ties) *ties = true;
        if (edge_less(best, v, from[v], v)) {
          key[v] = w;
          from[v] = best;
        }
      } else if (w < key[v]) {
        key[v] = w;
        from[v] = best;
      }
    }
  }
  return SpanningTree(n, std::move(edges));
}

SpanningTree mst(const SquaredDistanceMatrix& delta, bool* ties) {
  if (!delta.complete())
    throw std::invalid_argument("mst: matrix has missing entries");
  return mst(delta.values(), AdjacencyMask::complete(delta.order()), ties);
}

bool is_mst_preserving(const SquaredDistanceMatrix& delta, const SpanningTree& t) {
  if (delta.order() != t.order())
    throw std::invalid_argument("is_mst_preserving: order mismatch");
  if (!delta.complete())
    throw std::invalid_argument("is_mst_preserving: matrix has missing entries");
  for (const auto& e : t.edges()) {
    const double d = delta(e.i, e.j);
    if (std::abs(d - e.weight) > 1e-9 * std::max(std::abs(d), std::abs(e.weight)))
      throw std::invalid_argument(
          "is_mst_preserving: matrix disagrees with tree-edge weights");
  }
  return mst(delta).same_edge_set(t);
}

std::pair<Subtree, Subtree> split_tree(const Subtree& t, const TreeEdge& edge) {
  const int a = std::min(edge.i, edge.j);
  const int b = std::max(edge.i, edge.j);
  size_t found = t.edges.size();
  for (size_t k = 0; k < t.edges.size(); ++k)
    if (t.edges[k].i == a && t.edges[k].j == b) {
      found = k;
      break;
    }
  if (found == t.edges.size())
    throw std::invalid_argument("split_tree: edge not in tree");

  // Flood from endpoint `a` over the remaining edges.
  std::vector<int> side_a{a};
  std::vector<char> in_a_set;
  int max_vertex = 0;
  for (int v : t.vertices) max_vertex = std::max(max_vertex, v);
  in_a_set.assign(max_vertex + 1, 0);
  in_a_set[a] = 1;
  bool grew = true;
  std::vector<char> used(t.edges.size(), 0);
  used[found] = 1;
  while (grew) {
    grew = false;
    for (size_t k = 0; k < t.edges.size(); ++k) {
      if (used[k]) continue;
      const auto& e = t.edges[k];
      if (in_a_set[e.i] || in_a_set[e.j]) {
        const int other = in_a_set[e.i] ? e.j : e.i;
        if (!in_a_set[other]) {
          in_a_set[other] = 1;
          side_a.push_back(other);
        }
        used[k] = 1;
        grew = true;
      }
    }
  }

  Subtree ta, tb;
  for (int v : t.vertices)
    (in_a_set[v] ? ta : tb).vertices.push_back(v);
  for (size_t k = 0; k < t.edges.size(); ++k) {
    if (k == found) continue;
    const auto& e = t.edges[k];
    (in_a_set[e.i] ? ta : tb).edges.push_back(e);
  }
  std::sort(ta.vertices.begin(), ta.vertices.end());
  std::sort(tb.vertices.begin(), tb.vertices.end());
  return {std::move(ta), std::move(tb)};
}

std::pair<Subtree, Subtree> split_tree(const SpanningTree& t, const TreeEdge& edge) {
  return split_tree(as_subtree(t), edge);
}

}  // namespace edmc
