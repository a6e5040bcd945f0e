#include "edmc/bounds.hpp"

#include "edmc/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace edmc {
namespace {

// Largest edge, ties on exact weight equality resolved to the
// lexicographically first (i, j).
size_t largest_edge(const std::vector<TreeEdge>& edges) {
  size_t arg = 0;
  for (size_t k = 1; k < edges.size(); ++k) {
    const auto& e = edges[k];
    const auto& b = edges[arg];
    if (e.weight > b.weight ||
        (e.weight == b.weight && (e.i != b.i ? e.i < b.i : e.j < b.j)))
      arg = k;
  }
  return arg;
}

// Dense Dijkstra from one source over root-space weights.
std::vector<double> dijkstra(const PartialDissimilarity& p,
                             const Matrix& root_weights, int source) {
  const int n = p.order();
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, inf);
  std::vector<char> done(n, 0);
  dist[source] = 0.0;
  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!done[v] && (u < 0 || dist[v] < dist[u])) u = v;
    if (u < 0 || dist[u] == inf) break;
    done[u] = 1;
    for (int v = 0; v < n; ++v) {
      if (done[v] || !p.mask()(u, v)) continue;
      const double cand = dist[u] + root_weights(u, v);
      if (cand < dist[v]) dist[v] = cand;
    }
  }
  for (double d : dist)
    if (d == inf) throw std::invalid_argument("shortest paths: graph disconnected");
  return dist;
}

Matrix root_space_weights(const PartialDissimilarity& p) {
  const int n = p.order();
  Matrix w(n, n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.mask()(i, j)) w(i, j) = w(j, i) = std::sqrt(p.values()(i, j));
  return w;
}

}  // namespace

Matrix mst_lower_bounds(const SpanningTree& t) {
  const int n = t.order();
  Matrix lb(n, n, 0.0);
  std::vector<Subtree> stack;
  stack.push_back(as_subtree(t));
  while (!stack.empty()) {
    Subtree cur = std::move(stack.back());
    stack.pop_back();
    if (cur.edges.empty()) continue;
    const TreeEdge max_edge = cur.edges[largest_edge(cur.edges)];
    auto [t1, t2] = split_tree(cur, max_edge);
    for (int v1 : t1.vertices)
      for (int v2 : t2.vertices)
        lb(v1, v2) = lb(v2, v1) = max_edge.weight;
    stack.push_back(std::move(t1));
    stack.push_back(std::move(t2));
  }
  return lb;
}

Matrix shortest_path_upper_bounds(const PartialDissimilarity& p) {
  const int n = p.order();
  const Matrix w = root_space_weights(p);
  Matrix ub(n, n, 0.0);
  for (int s = 0; s < n; ++s) {
    const std::vector<double> dist = dijkstra(p, w, s);
    for (int v = 0; v < n; ++v) {
      if (v == s) continue;
      ub(s, v) = p.mask()(s, v) ? p.values()(s, v) : dist[v] * dist[v];
    }
  }
  // Symmetrize bitwise; opposite-direction runs can differ in the last ulp.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) ub(j, i) = ub(i, j);
  return ub;
}

ShortestPathTable shortest_paths(const PartialDissimilarity& p) {
  const int n = p.order();
  const Matrix w = root_space_weights(p);
  std::vector<std::vector<double>> dist_to(n);
  for (int s = 0; s < n; ++s) dist_to[s] = dijkstra(p, w, s);

  ShortestPathTable table;
  table.order = n;
  table.squared_length = Matrix(n, n, 0.0);
  table.segment_counts.assign(static_cast<size_t>(n) * n, 0);

  // Depth-first walk in neighbor-index order with backtracking; the first
  // complete simple path found is the lexicographically smallest shortest
  // path. Backtracking only triggers around zero-weight detours (duplicate
  // points), where a greedy walk can enter a dead end.
  std::vector<char> visited(n, 0);
  std::vector<int> path;
  std::vector<int> candidate;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double d = dist_to[j][i];
      table.squared_length(i, j) = table.squared_length(j, i) = d * d;

      std::fill(visited.begin(), visited.end(), 0);
      path.assign(1, i);
      candidate.assign(1, 0);
      visited[i] = 1;
      long steps = 0;
      const long step_cap = 4L * n * n + 16;
      while (path.back() != j) {
        if (++steps > step_cap)
          throw std::runtime_error("shortest paths: path reconstruction failed");
        const int cur = path.back();
        const double remaining = dist_to[j][cur];
        const double tol = 1e-12 * std::max(1.0, remaining);
        int next = -1;
        for (int u = candidate.back(); u < n; ++u) {
          if (visited[u] || !p.mask()(cur, u)) continue;
          if (std::abs(w(cur, u) + dist_to[j][u] - remaining) <= tol) {
            next = u;
            break;
          }
        }
        if (next < 0) {
          if (path.size() == 1)
            throw std::runtime_error("shortest paths: path reconstruction failed");
          visited[cur] = 0;
          path.pop_back();
          candidate.pop_back();
          candidate.back() = cur + 1;  // resume after the abandoned branch
          continue;
        }
        visited[next] = 1;
        path.push_back(next);
        candidate.push_back(0);
      }
      const int hops = static_cast<int>(path.size()) - 1;
      table.segment_counts[static_cast<size_t>(i) * n + j] = hops;
      table.segment_counts[static_cast<size_t>(j) * n + i] = hops;
    }
  }
  return table;
}

}  // namespace edmc
