#pragma once

// Test-only oracles and generators, kept independent of the library code
// paths they check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "edmc/matrix.hpp"
#include "edmc/random.hpp"
#include "edmc/types.hpp"

namespace edmc::testing {

// Pairwise squared distances through the Gram identity
// g_ii + g_jj - 2 g_ij rather than the direct difference norm.
inline Matrix oracle_edm(const PointConfiguration& x) {
  const int n = x.count(), p = x.dim();
  std::vector<double> sq(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < p; ++k) sq[i] += x(i, k) * x(i, k);
  Matrix d(n, n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double dot = 0.0;
      for (int k = 0; k < p; ++k) dot += x(i, k) * x(j, k);
      d(i, j) = sq[i] + sq[j] - 2.0 * dot;
    }
  return d;
}

// Largest edge weight on the unique tree path, by brute-force DFS per pair.
inline Matrix oracle_max_edge_on_path(const SpanningTree& t) {
  const int n = t.order();
  Matrix out(n, n, 0.0);
  for (int s = 0; s < n; ++s) {
    std::vector<char> seen(n, 0);
    std::function<void(int, double)> dfs = [&](int v, double best) {
      seen[v] = 1;
      out(s, v) = best;
      for (const auto& [nb, w] : t.adjacency()[v])
        if (!seen[nb]) dfs(nb, std::max(best, w));
    };
    dfs(s, 0.0);
  }
  return out;
}

struct WeightedEdge {
  int i, j;
  double w;
};

// Every spanning tree by enumerating (n-1)-subsets of the edge list.
// Returns the minimum total weight. Feasible for n <= 7 complete graphs.
inline double oracle_min_spanning_weight(int n, const std::vector<WeightedEdge>& edges) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> pick(n - 1);
  std::iota(pick.begin(), pick.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  auto acyclic_weight = [&]() {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    double total = 0.0;
    for (int k : pick) {
      const int ra = find(edges[k].i), rb = find(edges[k].j);
      if (ra == rb) return std::numeric_limits<double>::infinity();
      parent[rb] = ra;
      total += edges[k].w;
    }
    return total;
  };
  for (;;) {
    best = std::min(best, acyclic_weight());
    int pos = n - 2;
    while (pos >= 0 && pick[pos] == m - (n - 1) + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int q = pos + 1; q < n - 1; ++q) pick[q] = pick[q - 1] + 1;
  }
  return best;
}

// Exhaustive simple-path search on sparse graphs: shortest root-space
// length and the segment count of the lexicographically smallest shortest
// path. Lengths compare with a relative slack for summation-order noise.
struct OraclePath {
  double length = std::numeric_limits<double>::infinity();  // root space
  std::vector<int> vertices;
};

inline OraclePath oracle_shortest_path(const PartialDissimilarity& p, int from,
                                       int to) {
  const int n = p.order();
  OraclePath best;
  std::vector<int> path{from};
  std::vector<char> seen(n, 0);
  seen[from] = 1;
  std::function<void(int, double)> dfs = [&](int v, double len) {
    if (len > best.length * (1.0 + 1e-12) && !best.vertices.empty()) return;
    if (v == to) {
      const bool shorter = len < best.length * (1.0 - 1e-12);
      const bool tied = std::abs(len - best.length) <=
                        1e-12 * std::max(len, best.length);
      if (best.vertices.empty() || shorter ||
          (tied && path < best.vertices)) {
        best.length = std::min(len, best.length);
        best.vertices = path;
      }
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (seen[u] || !p.mask()(v, u)) continue;
      seen[u] = 1;
      path.push_back(u);
      dfs(u, len + std::sqrt(p.values()(v, u)));
      path.pop_back();
      seen[u] = 0;
    }
  };
  dfs(from, 0.0);
  return best;
}

// ---- generators ----------------------------------------------------------

inline PointConfiguration random_points(int n, int p, Rng& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix x(n, p);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < p; ++k) x(i, k) = u(rng);
  return PointConfiguration(std::move(x));
}

inline Matrix random_symmetric(int n, Rng& rng, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) s(i, j) = s(j, i) = u(rng);
  return s;
}

// Random attachment tree with Uniform(lo, hi) weights.
inline SpanningTree random_tree(int n, Rng& rng, double lo = 0.5, double hi = 2.0) {
  std::vector<TreeEdge> edges;
  std::uniform_real_distribution<double> w(lo, hi);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> attach(0, v - 1);
    edges.push_back(TreeEdge{attach(rng), v, w(rng)});
  }
  return SpanningTree(n, std::move(edges));
}

// Random orthogonal matrix by Gram-Schmidt on a Gaussian matrix.
inline Matrix random_orthogonal(int p, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix q(p, p);
  for (int c = 0; c < p; ++c) {
    std::vector<double> v(p);
    for (;;) {
      for (int r = 0; r < p; ++r) v[r] = g(rng);
      for (int prev = 0; prev < c; ++prev) {
        double dot = 0.0;
        for (int r = 0; r < p; ++r) dot += v[r] * q(r, prev);
        for (int r = 0; r < p; ++r) v[r] -= dot * q(r, prev);
      }
      double norm = 0.0;
      for (double t : v) norm += t * t;
      if (norm > 1e-12) {
        norm = std::sqrt(norm);
        for (int r = 0; r < p; ++r) q(r, c) = v[r] / norm;
        break;
      }
    }
  }
  return q;
}

inline double relative_frobenius_error(const Matrix& got, const Matrix& want) {
  const double denom = frobenius_norm(want);
  if (denom == 0.0) return frobenius_norm(got);
  return frobenius_distance(got, want) / denom;
}

}  // namespace edmc::testing
