#pragma once

#include <cstdint>

#include "edmc/types.hpp"

namespace edmc {

/// n independent draws from U[0,1]^p, deterministic per seed. Coordinates
/// are drawn column by column, so generate_uniform(n, q, seed) equals the
/// first q columns of generate_uniform(n, p, seed) for any q <= p.
PointConfiguration generate_uniform(int n, int p, uint64_t seed);

/// First q coordinate columns of a configuration.
PointConfiguration first_columns(const PointConfiguration& x, int q);

enum class MaskMode { Mst, RandomFraction };

const char* mask_mode_name(MaskMode m);

/// Keeps exactly the n-1 entries of the minimal spanning tree.
PartialDissimilarity mask_mst(const SquaredDistanceMatrix& d);

/// Removes floor(q * n(n-1)/2) off-diagonal pairs uniformly at random,
/// resampling (up to a cap) until the retained graph is connected.
PartialDissimilarity mask_random(const SquaredDistanceMatrix& d, double q,
                                 uint64_t seed);

}  // namespace edmc
