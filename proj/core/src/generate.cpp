#include "edmc/generate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "edmc/random.hpp"
#include "edmc/tree.hpp"

namespace edmc {

PointConfiguration generate_uniform(int n, int p, uint64_t seed) {
  if (n < 1 || p < 1)
    throw std::invalid_argument("generate_uniform: n and p must be >= 1");
  Rng rng = make_rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Matrix x(n, p);
  for (int k = 0; k < p; ++k)
    for (int i = 0; i < n; ++i) x(i, k) = unit(rng);
  return PointConfiguration(std::move(x));
}

PointConfiguration first_columns(const PointConfiguration& x, int q) {
  if (q < 1 || q > x.dim())
    throw std::invalid_argument("first_columns: q must be in [1, p]");
  Matrix out(x.count(), q);
  for (int i = 0; i < x.count(); ++i)
    for (int k = 0; k < q; ++k) out(i, k) = x(i, k);
  return PointConfiguration(std::move(out));
}

const char* mask_mode_name(MaskMode m) {
  return m == MaskMode::Mst ? "mst" : "random";
}

PartialDissimilarity mask_mst(const SquaredDistanceMatrix& d) {
  if (!d.complete())
    throw std::invalid_argument("mask_mst: matrix has missing entries");
  return PartialDissimilarity::from_tree(mst(d));
}

PartialDissimilarity mask_random(const SquaredDistanceMatrix& d, double q,
                                 uint64_t seed) {
  if (!d.complete())
    throw std::invalid_argument("mask_random: matrix has missing entries");
  if (!(q >= 0.0 && q < 1.0))
    throw std::invalid_argument("mask_random: fraction must be in [0, 1)");
  const int n = d.order();
  const int total = n * (n - 1) / 2;
  const int removed = static_cast<int>(q * total);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(total);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  constexpr int kResampleCap = 100;
  Rng rng = make_rng(seed);
  for (int attempt = 0; attempt < kResampleCap; ++attempt) {
    std::vector<int> idx(total);
    std::iota(idx.begin(), idx.end(), 0);
    // Partial Fisher-Yates: the first `removed` slots are the removed pairs.
    for (int k = 0; k < removed; ++k) {
      std::uniform_int_distribution<int> pick(k, total - 1);
      std::swap(idx[k], idx[pick(rng)]);
    }
    std::vector<std::pair<int, int>> kept;
    kept.reserve(total - removed);
    for (int k = removed; k < total; ++k) kept.push_back(pairs[idx[k]]);

    try {
      AdjacencyMask mask = AdjacencyMask::from_pairs(n, kept);
      Matrix values(n, n, missing_value());
      for (int i = 0; i < n; ++i) values(i, i) = 0.0;
      for (auto [i, j] : kept) values(i, j) = values(j, i) = d(i, j);
      return PartialDissimilarity(std::move(mask), std::move(values));
    } catch (const std::invalid_argument&) {
      // disconnected draw; resample
    }
  }
  throw std::runtime_error(
      "mask_random: could not draw a connected mask within the resample cap");
}

}  // namespace edmc
