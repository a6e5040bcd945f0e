#pragma once

#include <vector>

#include "edmc/types.hpp"

namespace edmc {

/// Lower-bound matrix that preserves the minimal spanning tree: entry (i, j)
/// is the largest edge weight on the tree path between i and j, found by
/// recursively splitting on the largest edge. Diagonal is zero.
Matrix mst_lower_bounds(const SpanningTree& t);

/// Triangle-inequality upper bounds: for unknown (i, j) the squared length
/// of the shortest path in root-dissimilarity space; known entries copied.
Matrix shortest_path_upper_bounds(const PartialDissimilarity& p);

/// All-pairs shortest paths over the known graph, lengths accumulated in
/// root-dissimilarity space and reported squared, with the edge count of
/// the (lexicographically smallest) shortest path.
struct ShortestPathTable {
  Matrix squared_length;
  std::vector<int> segment_counts;  // row-major n*n
  int order = 0;

  int segments(int i, int j) const {
    return segment_counts[static_cast<size_t>(i) * order + j];
  }
};

ShortestPathTable shortest_paths(const PartialDissimilarity& p);

}  // namespace edmc
