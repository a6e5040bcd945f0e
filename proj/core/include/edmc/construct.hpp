#pragma once

#include <cstdint>
#include <vector>

#include "edmc/random.hpp"
#include "edmc/types.hpp"

namespace edmc {

struct ConstructiveConfig {
  int dim = 2;
  int max_in = 100;   // proposals per node before the attempt fails
  int max_out = 100;  // full restarts before giving up
  uint64_t seed = 0;
};

struct ConstructionResult {
  PointConfiguration points;
  bool converged = false;
  long inner_rejections = 0;
  int outer_restarts = 0;
};

/// Uniform draw from the unit sphere S^(p-1): standard normal vector,
/// normalized.
std::vector<double> sample_sphere(int p, Rng& rng);

struct BudSelection {
  int grow = -1;            // placed vertex with the most frontier edges
  std::vector<int> buds;    // its unplaced neighbors, by decreasing degree
};

/// Frontier of the partially placed tree. Throws when nothing is unplaced.
BudSelection get_buds(const SpanningTree& target, const std::vector<uint8_t>& placed);

/// Incremental state of one construction attempt. `dist2` holds squared
/// distances between placed vertices, `path_bound` the largest placed-tree
/// edge on the path between them.
struct GrowthState {
  explicit GrowthState(const SpanningTree& target_tree, int dim);

  void place_root(int v);
  int placed_count() const { return static_cast<int>(order.size()); }

  const SpanningTree* target = nullptr;
  int p = 0;
  Matrix coords;
  Matrix dist2;
  Matrix path_bound;
  std::vector<uint8_t> placed;
  std::vector<int> order;       // placement order
  long rejections = 0;
  bool exact_ties = false;      // a zero-margin placement was accepted
};

enum class GrowVerdict { Placed, Exhausted };

/// Proposes positions for bud b on the sphere of radius sqrt(w(g, b))
/// around g until the placed points' minimal spanning tree still lies in
/// the target tree, up to max_in attempts.
GrowVerdict grow_tree(GrowthState& state, int grow, int bud, int max_in, Rng& rng);

/// Guided random search: grows a point configuration node by node so that
/// the distances of the result have exactly the target minimal spanning
/// tree. Deterministic for a fixed seed.
ConstructionResult mst_configure(const SpanningTree& target,
                                 const ConstructiveConfig& cfg);

}  // namespace edmc
