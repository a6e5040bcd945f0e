#pragma once

#include <utility>

#include "edmc/types.hpp"

namespace edmc {

/// Relative tolerance under which two edge weights count as tied.
inline constexpr double kMstTieTolerance = 1e-12;

/// Minimal spanning tree of the graph (mask, delta) by Prim's method.
/// Tied candidate edges (within kMstTieTolerance relative) resolve to the
/// lexicographically smaller (i, j) pair; `ties`, when given, reports
/// whether any tie was encountered.
SpanningTree mst(const Matrix& delta, const AdjacencyMask& mask,
                 bool* ties = nullptr);

/// MST over the complete graph of a fully observed matrix.
SpanningTree mst(const SquaredDistanceMatrix& delta, bool* ties = nullptr);

/// True iff the MST of the fully observed delta has exactly t's edge set.
/// Precondition (checked): delta matches t's weights on tree edges within
/// 1e-9 relative.
bool is_mst_preserving(const SquaredDistanceMatrix& delta, const SpanningTree& t);

/// Removes `edge` and returns the two trees it separated, each containing
/// one endpoint. Throws if the edge is not in the tree.
std::pair<Subtree, Subtree> split_tree(const Subtree& t, const TreeEdge& edge);
std::pair<Subtree, Subtree> split_tree(const SpanningTree& t, const TreeEdge& edge);

}  // namespace edmc
