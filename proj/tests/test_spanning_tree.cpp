#include <doctest.h>

#include <cmath>

#include "edmc/bounds.hpp"
#include "edmc/operators.hpp"
#include "edmc/tree.hpp"
#include "test_support.hpp"

using namespace edmc;
using namespace edmc::testing;

namespace {

SquaredDistanceMatrix dist3(double d01, double d02, double d12) {
  Matrix m(3, 3, 0.0);
  m(0, 1) = m(1, 0) = d01;
  m(0, 2) = m(2, 0) = d02;
  m(1, 2) = m(2, 1) = d12;
  return SquaredDistanceMatrix(std::move(m));
}

// Produces a complete matrix that matches the tree on its edges and sits a
// given factor above the minimax lower bounds elsewhere.
SquaredDistanceMatrix complete_above_bounds(const SpanningTree& t, Rng& rng,
                                            double min_factor = 1.001,
                                            double max_factor = 3.0) {
  const int n = t.order();
  const Matrix lb = oracle_max_edge_on_path(t);
  std::uniform_real_distribution<double> f(min_factor, max_factor);
  Matrix m(n, n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = m(j, i) = lb(i, j) * f(rng);
  for (const auto& e : t.edges()) m(e.i, e.j) = m(e.j, e.i) = e.weight;
  return SquaredDistanceMatrix(std::move(m));
}

}  // namespace

TEST_CASE("mst: 3-node hand case by exhaustive enumeration") {
  const SquaredDistanceMatrix d = dist3(1, 4, 2);
  const SpanningTree t = mst(d);
  CHECK(t.edges().size() == 2);
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(1, 2));
  CHECK(t.weight(0, 1) == 1.0);
  CHECK(t.weight(1, 2) == 2.0);
}

TEST_CASE("mst: a tree mask returns that tree") {
  Rng rng = make_rng(11);
  const SpanningTree t = random_tree(8, rng);
  const PartialDissimilarity p = PartialDissimilarity::from_tree(t);
  Matrix values = p.values();
  // NaNs are outside the mask; replace with zeros the call must ignore.
  for (double& v : values.data())
    if (is_missing(v)) v = 0.0;
  const SpanningTree got = mst(values, p.mask());
  CHECK(got.same_edge_set(t));
  for (const auto& e : t.edges()) CHECK(got.weight(e.i, e.j) == e.weight);
}

TEST_CASE("mst matches brute-force enumeration on complete graphs") {
  Rng rng = make_rng(19);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);  // up to 7
    const SquaredDistanceMatrix d = edm(random_points(n, 2, rng));
    std::vector<WeightedEdge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edges.push_back({i, j, d(i, j)});
    const double best = oracle_min_spanning_weight(n, edges);
    CHECK(mst(d).total_weight() == doctest::Approx(best).epsilon(1e-12));
  }
}

TEST_CASE("mst reports ties") {
  Matrix m(3, 3, 0.0);
  m(0, 1) = m(1, 0) = 1.0;
  m(0, 2) = m(2, 0) = 1.0;
  m(1, 2) = m(2, 1) = 5.0;
  bool ties = false;
  const SpanningTree t = mst(SquaredDistanceMatrix(m), &ties);
  CHECK(ties);
  CHECK(t.has_edge(0, 1));  // lexicographic preference
  CHECK(t.has_edge(0, 2));

  Rng rng = make_rng(4);
  ties = true;
  mst(edm(random_points(9, 3, rng)), &ties);
  CHECK_FALSE(ties);
}

TEST_CASE("mst rejects disconnected graphs") {
  // A mask cannot even be built disconnected; simulate via from_pairs.
  CHECK_THROWS_AS(AdjacencyMask::from_pairs(4, {{0, 1}, {2, 3}}),
                  std::invalid_argument);
}

TEST_CASE("is_mst_preserving: self-consistency and the 3-node shortcut") {
  Rng rng = make_rng(23);
  const SquaredDistanceMatrix d = edm(random_points(10, 3, rng));
  CHECK(is_mst_preserving(d, mst(d)));

  const SpanningTree path(3, {TreeEdge{0, 1, 1.0}, TreeEdge{1, 2, 4.0}});
  CHECK_FALSE(is_mst_preserving(dist3(1, 2, 4), path));  // shortcut below 4
  CHECK(is_mst_preserving(dist3(1, 5, 4), path));        // shortcut above 4
}

TEST_CASE("is_mst_preserving rejects weight mismatch on tree edges") {
  const SpanningTree path(3, {TreeEdge{0, 1, 1.0}, TreeEdge{1, 2, 4.0}});
  CHECK_THROWS_AS(is_mst_preserving(dist3(1.5, 5, 4), path),
                  std::invalid_argument);
}

TEST_CASE("split_tree: leaf split, star split, and partitions") {
  const SpanningTree path(3, {TreeEdge{0, 1, 1.0}, TreeEdge{1, 2, 4.0}});
  auto [a, b] = split_tree(path, TreeEdge{1, 2, 4.0});
  CHECK(a.vertices == std::vector<int>{0, 1});
  CHECK(a.edges.size() == 1);
  CHECK(b.vertices == std::vector<int>{2});
  CHECK(b.edges.empty());

  const SpanningTree star(
      4, {TreeEdge{0, 1, 1.0}, TreeEdge{0, 2, 1.0}, TreeEdge{0, 3, 1.0}});
  auto [s1, s2] = split_tree(star, TreeEdge{0, 1, 1.0});
  CHECK(s1.vertices == std::vector<int>{0, 2, 3});
  CHECK(s2.vertices == std::vector<int>{1});

  CHECK_THROWS_AS(split_tree(star, TreeEdge{1, 2, 1.0}), std::invalid_argument);

  Rng rng = make_rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const SpanningTree t = random_tree(10, rng);
    const TreeEdge e = t.edges()[rng() % t.edges().size()];
    auto [t1, t2] = split_tree(t, e);
    CHECK(t1.vertices.size() + t2.vertices.size() == 10);
    CHECK(t1.edges.size() == t1.vertices.size() - 1);  // connected subtrees
    CHECK(t2.edges.size() == t2.vertices.size() - 1);
  }
}

TEST_CASE("mst_lower_bounds: hand trace and the n=2 case") {
  const SpanningTree path(3, {TreeEdge{0, 1, 1.0}, TreeEdge{1, 2, 4.0}});
  const Matrix lb = mst_lower_bounds(path);
  CHECK(lb(0, 1) == 1.0);
  CHECK(lb(0, 2) == 4.0);
  CHECK(lb(1, 2) == 4.0);
  CHECK(lb(0, 0) == 0.0);

  const SpanningTree pair(2, {TreeEdge{0, 1, 2.5}});
  const Matrix lb2 = mst_lower_bounds(pair);
  CHECK(lb2(0, 1) == 2.5);
}

TEST_CASE("mst_lower_bounds equals the path-maximum oracle") {
  Rng rng = make_rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);  // up to 12
    const SpanningTree t = random_tree(n, rng);
    const Matrix lb = mst_lower_bounds(t);
    const Matrix ref = oracle_max_edge_on_path(t);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(lb(i, j) == ref(i, j));
  }
}

TEST_CASE("lower-bound soundness: completions above the bounds preserve the tree") {
  Rng rng = make_rng(41);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const SpanningTree t = random_tree(n, rng);
    const SquaredDistanceMatrix d = complete_above_bounds(t, rng);
    CHECK(is_mst_preserving(d, t));
  }
}

TEST_CASE("original-data consistency: a true EDM dominates its MST bounds") {
  Rng rng = make_rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const SquaredDistanceMatrix d = edm(random_points(12, 3, rng));
    const SpanningTree t = mst(d);
    const Matrix lb = mst_lower_bounds(t);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        CHECK(d(i, j) >= lb(i, j) * (1.0 - 1e-12));
  }
}

TEST_CASE("shortest_path_upper_bounds: hand case and known entries") {
  // Path 0-1-2 with squared weights 4 and 9: bound (2+3)^2 = 25.
  const SpanningTree path(3, {TreeEdge{0, 1, 4.0}, TreeEdge{1, 2, 9.0}});
  const PartialDissimilarity p = PartialDissimilarity::from_tree(path);
  const Matrix ub = shortest_path_upper_bounds(p);
  CHECK(ub(0, 2) == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(ub(0, 1) == 4.0);
  CHECK(ub(1, 2) == 9.0);
}

TEST_CASE("shortest_path_upper_bounds matches the exhaustive oracle on trees") {
  Rng rng = make_rng(47);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 10);
    const SpanningTree t = random_tree(n, rng);
    const PartialDissimilarity p = PartialDissimilarity::from_tree(t);
    const Matrix ub = shortest_path_upper_bounds(p);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (p.mask()(i, j)) continue;
        const OraclePath ref = oracle_shortest_path(p, i, j);
        CHECK(ub(i, j) ==
              doctest::Approx(ref.length * ref.length).epsilon(1e-10));
      }
  }
}

TEST_CASE("shortest_paths: adjacency, two-hop, and sparse-graph oracle") {
  const SpanningTree path(3, {TreeEdge{0, 1, 4.0}, TreeEdge{1, 2, 9.0}});
  const PartialDissimilarity p = PartialDissimilarity::from_tree(path);
  const ShortestPathTable table = shortest_paths(p);
  CHECK(table.squared_length(0, 1) == doctest::Approx(4.0));
  CHECK(table.segments(0, 1) == 1);
  CHECK(table.squared_length(0, 2) == doctest::Approx(25.0));
  CHECK(table.segments(0, 2) == 2);

  Rng rng = make_rng(53);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const SpanningTree t = random_tree(n, rng);
    // Sparse graph: the tree plus a few chords.
    std::vector<std::pair<int, int>> pairs;
    Matrix values(n, n, missing_value());
    for (int i = 0; i < n; ++i) values(i, i) = 0.0;
    for (const auto& e : t.edges()) {
      pairs.emplace_back(e.i, e.j);
      values(e.i, e.j) = values(e.j, e.i) = e.weight;
    }
    std::uniform_real_distribution<double> w(0.5, 2.0);
    for (int extra = 0; extra < n / 3; ++extra) {
      const int i = static_cast<int>(rng() % n);
      const int j = static_cast<int>(rng() % n);
      if (i == j || !is_missing(values(i, j))) continue;
      pairs.emplace_back(i, j);
      values(i, j) = values(j, i) = w(rng);
    }
    const PartialDissimilarity sparse(AdjacencyMask::from_pairs(n, pairs),
                                      std::move(values));
    const ShortestPathTable got = shortest_paths(sparse);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const OraclePath ref = oracle_shortest_path(sparse, i, j);
        CHECK(got.squared_length(i, j) ==
              doctest::Approx(ref.length * ref.length).epsilon(1e-10));
        CHECK(got.segments(i, j) == static_cast<int>(ref.vertices.size()) - 1);
      }
  }
}

TEST_CASE("mst-preserving completions form a convex cone") {
  Rng rng = make_rng(59);
  std::uniform_real_distribution<double> coef(0.1, 5.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 13);  // up to 15
    const SpanningTree t = random_tree(n, rng);
    const SquaredDistanceMatrix a = complete_above_bounds(t, rng);
    const SquaredDistanceMatrix b = complete_above_bounds(t, rng);
    REQUIRE(is_mst_preserving(a, t));
    REQUIRE(is_mst_preserving(b, t));

    const double alpha = coef(rng), beta = coef(rng);
    Matrix mix(n, n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) mix(i, j) = alpha * a(i, j) + beta * b(i, j);
    const SquaredDistanceMatrix gamma(std::move(mix));
    const SpanningTree scaled_tree = mst(gamma);
    // Same adjacency as the target tree.
    CHECK(scaled_tree.same_edge_set(t));
  }
}

TEST_CASE("mst is invariant to scaling and to square roots of the weights") {
  Rng rng = make_rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const SquaredDistanceMatrix d = edm(random_points(n, 3, rng));
    const SpanningTree base = mst(d);

    std::uniform_real_distribution<double> a(0.1, 10.0);
    const double alpha = a(rng);
    Matrix scaled(n, n, 0.0);
    Matrix rooted(n, n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        scaled(i, j) = alpha * d(i, j);
        rooted(i, j) = std::sqrt(d(i, j));
      }
    CHECK(mst(SquaredDistanceMatrix(std::move(scaled))).same_edge_set(base));
    CHECK(mst(SquaredDistanceMatrix(std::move(rooted))).same_edge_set(base));
  }
}
