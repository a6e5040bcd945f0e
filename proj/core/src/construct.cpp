#include "edmc/construct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "edmc/tree.hpp"

namespace edmc {
namespace {

// Off-tree distances must clear the deciding tree edge by this relative
// margin; exact ties (forced by coincident points) are handled separately.
constexpr double kMargin = 1e-9;

// MST of the placed subgraph under the deterministic tie rule, compared
// against the placed subtree. Only consulted when exact ties exist.
bool placed_mst_matches(const GrowthState& st, int bud, int grow,
                        const std::vector<double>& cand) {
  const int k = st.placed_count() + 1;
  std::vector<int> verts = st.order;
  verts.push_back(bud);
  Matrix d(k, k, 0.0);
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      const int va = verts[a], vb = verts[b];
      double w;
      if (vb == bud)
        w = cand[va];
      else
        w = st.dist2(va, vb);
      d(a, b) = d(b, a) = w;
      pairs.emplace_back(a, b);
    }
  // Local indices must preserve the global vertex order so the
  // lexicographic tie rule resolves identically; placement order does not,
  // so remap through a sorted copy.
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> rank(st.target->order(), -1);
  for (int r = 0; r < k; ++r) rank[sorted[r]] = r;
  Matrix dr(k, k, 0.0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) dr(rank[verts[a]], rank[verts[b]]) = d(a, b);

  const SpanningTree local = mst(dr, AdjacencyMask::complete(k));
  // Expected edges: the placed subtree edges plus (grow, bud).
  std::vector<std::pair<int, int>> expected;
  for (const auto& e : st.target->edges())
    if ((st.placed[e.i] && st.placed[e.j]))
      expected.emplace_back(std::min(rank[e.i], rank[e.j]),
                            std::max(rank[e.i], rank[e.j]));
  expected.emplace_back(std::min(rank[grow], rank[bud]),
                        std::max(rank[grow], rank[bud]));
  std::sort(expected.begin(), expected.end());
  if (static_cast<int>(expected.size()) != k - 1) return false;
  for (int e = 0; e < k - 1; ++e) {
    const auto& le = local.edges()[e];
    if (le.i != expected[e].first || le.j != expected[e].second) return false;
  }
  return true;
}

}  // namespace

std::vector<double> sample_sphere(int p, Rng& rng) {
  if (p < 1) throw std::invalid_argument("sample_sphere: dimension must be >= 1");
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> z(p);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (int k = 0; k < p; ++k) {
      z[k] = normal(rng);
      norm2 += z[k] * z[k];
    }
  } while (norm2 == 0.0);
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& v : z) v *= inv;
  return z;
}

BudSelection get_buds(const SpanningTree& target, const std::vector<uint8_t>& placed) {
  const int n = target.order();
  if (static_cast<int>(placed.size()) != n)
    throw std::invalid_argument("get_buds: placed flags size mismatch");
  bool any_placed = false, any_unplaced = false;
  for (int v = 0; v < n; ++v)
    (placed[v] ? any_placed : any_unplaced) = true;
  if (!any_placed) throw std::invalid_argument("get_buds: nothing placed yet");
  if (!any_unplaced) throw std::invalid_argument("get_buds: no unplaced vertices");

  BudSelection sel;
  int best_count = -1;
  for (int v = 0; v < n; ++v) {
    if (!placed[v]) continue;
    int count = 0;
    for (const auto& [nb, w] : target.adjacency()[v])
      if (!placed[nb]) ++count;
    if (count > best_count) {
      best_count = count;
      sel.grow = v;
    }
  }
  for (const auto& [nb, w] : target.adjacency()[sel.grow])
    if (!placed[nb]) sel.buds.push_back(nb);
  std::sort(sel.buds.begin(), sel.buds.end(), [&](int a, int b) {
    const int da = target.degree(a), db = target.degree(b);
    return da != db ? da > db : a < b;
  });
  return sel;
}

GrowthState::GrowthState(const SpanningTree& target_tree, int dim)
    : target(&target_tree),
      p(dim),
      coords(target_tree.order(), dim, 0.0),
      dist2(target_tree.order(), target_tree.order(), 0.0),
      path_bound(target_tree.order(), target_tree.order(), 0.0),
      placed(target_tree.order(), 0) {
  if (dim < 1) throw std::invalid_argument("construction dimension must be >= 1");
}

void GrowthState::place_root(int v) {
  if (placed_count() != 0) throw std::logic_error("root already placed");
  placed[v] = 1;
  order.push_back(v);
}

GrowVerdict grow_tree(GrowthState& state, int grow, int bud, int max_in, Rng& rng) {
  if (!state.placed[grow] || state.placed[bud])
    throw std::invalid_argument("grow_tree: grow must be placed, bud unplaced");
  const double w = state.target->weight(grow, bud);
  const double radius = std::sqrt(w);
  const int p = state.p;
  const int n = state.target->order();

  std::vector<double> xb(p);
  std::vector<double> cand(n, 0.0);
  for (int attempt = 0; attempt < max_in; ++attempt) {
    const std::vector<double> z = sample_sphere(p, rng);
    const double* xg = state.coords.row(grow);
    for (int k = 0; k < p; ++k) xb[k] = xg[k] + z[k] * radius;

    bool ok = true;
    bool tie = false;
    for (int v : state.order) {
      const double* xv = state.coords.row(v);
      double s = 0.0;
      for (int k = 0; k < p; ++k) {
        const double t = xb[k] - xv[k];
        s += t * t;
      }
      cand[v] = s;
    }
    const double edge = cand[grow];
    for (int v : state.order) {
      if (v == grow) continue;
      const double deciding = std::max(edge, state.path_bound(grow, v));
      if (cand[v] > deciding * (1.0 + kMargin)) continue;
      if (cand[v] == deciding) {
        tie = true;  // forced by coincident geometry; resolve below
        continue;
      }
      ok = false;
      break;
    }
    if (ok && (tie || state.exact_ties))
      ok = placed_mst_matches(state, bud, grow, cand);
    if (!ok) {
      ++state.rejections;
      continue;
    }

    for (int k = 0; k < p; ++k) state.coords(bud, k) = xb[k];
    for (int v : state.order) {
      state.dist2(bud, v) = state.dist2(v, bud) = cand[v];
      const double bound = v == grow ? edge : std::max(edge, state.path_bound(grow, v));
      state.path_bound(bud, v) = state.path_bound(v, bud) = bound;
    }
    state.placed[bud] = 1;
    state.order.push_back(bud);
    if (tie) state.exact_ties = true;
    return GrowVerdict::Placed;
  }
  return GrowVerdict::Exhausted;
}

ConstructionResult mst_configure(const SpanningTree& target,
                                 const ConstructiveConfig& cfg) {
  if (cfg.dim < 1 || cfg.max_in < 1 || cfg.max_out < 1)
    throw std::invalid_argument("mst_configure: invalid configuration");
  const int n = target.order();

  // Root at a maximal-degree vertex, smallest index under ties.
  int root = 0;
  for (int v = 1; v < n; ++v)
    if (target.degree(v) > target.degree(root)) root = v;

  long rejections = 0;
  Matrix last_partial(n, cfg.dim, 0.0);
  for (int attempt = 0; attempt < cfg.max_out; ++attempt) {
    Rng rng = make_rng(mix_seed(cfg.seed, {static_cast<uint64_t>(attempt)}));
    GrowthState state(target, cfg.dim);
    state.place_root(root);
    bool failed = false;
    while (state.placed_count() < n && !failed) {
      const BudSelection sel = get_buds(target, state.placed);
      for (int bud : sel.buds) {
        if (grow_tree(state, sel.grow, bud, cfg.max_in, rng) ==
            GrowVerdict::Exhausted) {
          failed = true;
          break;
        }
      }
    }
    rejections += state.rejections;
    if (!failed)
      return ConstructionResult{PointConfiguration(std::move(state.coords)),
                                true, rejections, attempt};
    last_partial = std::move(state.coords);
  }
  return ConstructionResult{PointConfiguration(std::move(last_partial)), false,
                            rejections, cfg.max_out};
}

}  // namespace edmc
