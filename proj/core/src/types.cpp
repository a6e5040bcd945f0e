#include "edmc/types.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edmc {
namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Union-find over {0..n-1}.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

SquaredDistanceMatrix::SquaredDistanceMatrix(Matrix values) : m_(std::move(values)) {
  require(m_.rows() == m_.cols() && m_.rows() >= 1,
          "distance matrix must be square and nonempty");
  const int n = m_.rows();
  for (int i = 0; i < n; ++i)
    require(m_(i, i) == 0.0, "distance matrix must be hollow");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double x = m_(i, j), y = m_(j, i);
      if (is_missing(x) || is_missing(y)) {
        require(is_missing(x) && is_missing(y),
                "missing markers must be symmetric");
        ++missing_pairs_;
        continue;
      }
      require(x == y, "distance matrix must be symmetric");
      require(x >= 0.0, "squared distances must be nonnegative");
      require(std::isfinite(x), "squared distances must be finite");
    }
}

GramMatrix::GramMatrix(Matrix values) : m_(std::move(values)) {
  require(m_.rows() == m_.cols() && m_.rows() >= 1,
          "Gram matrix must be square and nonempty");
  require(is_symmetric(m_), "Gram matrix must be symmetric");
  for (double v : m_.data())
    require(std::isfinite(v), "Gram matrix entries must be finite");
}

PointConfiguration::PointConfiguration(Matrix coords) : m_(std::move(coords)) {
  require(m_.rows() >= 1 && m_.cols() >= 1,
          "point configuration needs n >= 1 and p >= 1");
  for (double v : m_.data())
    require(std::isfinite(v), "point coordinates must be finite");
}

void AdjacencyMask::check_connected(int n, const std::vector<uint8_t>& a) {
  Dsu dsu(n);
  int components = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a[static_cast<size_t>(i) * n + j] && dsu.unite(i, j)) --components;
  require(components == 1, "mask graph must be connected");
}

AdjacencyMask AdjacencyMask::complete(int n) {
  require(n >= 1, "mask order must be >= 1");
  std::vector<uint8_t> a(static_cast<size_t>(n) * n, 1);
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = 0;
  return AdjacencyMask(n, std::move(a), n * (n - 1) / 2);
}

AdjacencyMask AdjacencyMask::from_matrix(const Matrix& zero_one) {
  const int n = zero_one.rows();
  require(n == zero_one.cols() && n >= 1, "mask must be square and nonempty");
  std::vector<uint8_t> a(static_cast<size_t>(n) * n, 0);
  int pairs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double v = zero_one(i, j);
      require(v == 0.0 || v == 1.0, "mask entries must be 0 or 1");
      if (i == j) require(v == 0.0, "mask must be hollow");
      require(v == zero_one(j, i), "mask must be symmetric");
      a[static_cast<size_t>(i) * n + j] = v != 0.0;
      if (i < j && v != 0.0) ++pairs;
    }
  check_connected(n, a);
  return AdjacencyMask(n, std::move(a), pairs);
}

AdjacencyMask AdjacencyMask::from_pairs(int n,
                                        const std::vector<std::pair<int, int>>& pairs) {
  require(n >= 1, "mask order must be >= 1");
  std::vector<uint8_t> a(static_cast<size_t>(n) * n, 0);
  int count = 0;
  for (auto [i, j] : pairs) {
    require(i >= 0 && j >= 0 && i < n && j < n && i != j,
            "mask pair out of range");
    if (!a[static_cast<size_t>(i) * n + j]) ++count;
    a[static_cast<size_t>(i) * n + j] = 1;
    a[static_cast<size_t>(j) * n + i] = 1;
  }
  check_connected(n, a);
  return AdjacencyMask(n, std::move(a), count);
}

SpanningTree::SpanningTree(int order, std::vector<TreeEdge> edges)
    : n_(order), edges_(std::move(edges)) {
  require(n_ >= 1, "tree order must be >= 1");
  require(static_cast<int>(edges_.size()) == n_ - 1,
          "spanning tree must have exactly n-1 edges");
  for (auto& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    require(e.i >= 0 && e.j < n_ && e.i != e.j, "tree edge out of range");
    require(e.weight >= 0.0 && std::isfinite(e.weight),
            "tree edge weights must be finite and nonnegative");
  }
  std::sort(edges_.begin(), edges_.end(), [](const TreeEdge& a, const TreeEdge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  Dsu dsu(n_);
  for (const auto& e : edges_)
    require(dsu.unite(e.i, e.j), "tree edges must be acyclic");
  adj_.resize(n_);
  for (const auto& e : edges_) {
    adj_[e.i].emplace_back(e.j, e.weight);
    adj_[e.j].emplace_back(e.i, e.weight);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SpanningTree::has_edge(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) return false;
  for (const auto& [nb, w] : adj_[i])
    if (nb == j) return true;
  return false;
}

double SpanningTree::weight(int i, int j) const {
  for (const auto& [nb, w] : adj_[i])
    if (nb == j) return w;
  throw std::invalid_argument("edge not in tree");
}

double SpanningTree::total_weight() const {
  double s = 0.0;
  for (const auto& e : edges_) s += e.weight;
  return s;
}

bool SpanningTree::same_edge_set(const SpanningTree& other) const {
  if (n_ != other.n_) return false;
  for (size_t k = 0; k < edges_.size(); ++k)
    if (edges_[k].i != other.edges_[k].i || edges_[k].j != other.edges_[k].j)
      return false;
  return true;
}

Subtree as_subtree(const SpanningTree& t) {
  Subtree s;
  s.vertices.resize(t.order());
  std::iota(s.vertices.begin(), s.vertices.end(), 0);
  s.edges = t.edges();
  return s;
}

PartialDissimilarity::PartialDissimilarity(AdjacencyMask mask, Matrix values)
    : mask_(std::move(mask)), values_(std::move(values)) {
  const int n = mask_.order();
  require(values_.rows() == n && values_.cols() == n,
          "values shape must match the mask");
  for (int i = 0; i < n; ++i) {
    require(values_(i, i) == 0.0, "partial dissimilarity must be hollow");
    for (int j = i + 1; j < n; ++j) {
      const double v = values_(i, j);
      if (mask_(i, j)) {
        require(!is_missing(v), "masked-in entry is missing");
        require(v == values_(j, i), "values must be symmetric");
        require(v >= 0.0 && std::isfinite(v),
                "dissimilarities must be finite and nonnegative");
      } else {
        require(is_missing(v) && is_missing(values_(j, i)),
                "masked-out entry must be NaN");
      }
    }
  }
}

PartialDissimilarity PartialDissimilarity::from_tree(const SpanningTree& t) {
  const int n = t.order();
  if (n == 1)
    throw std::invalid_argument("partial dissimilarity needs at least 2 points");
  std::vector<std::pair<int, int>> pairs;
  Matrix v(n, n, missing_value());
  for (int i = 0; i < n; ++i) v(i, i) = 0.0;
  for (const auto& e : t.edges()) {
    pairs.emplace_back(e.i, e.j);
    v(e.i, e.j) = v(e.j, e.i) = e.weight;
  }
  return PartialDissimilarity(AdjacencyMask::from_pairs(n, pairs), std::move(v));
}

PartialDissimilarity PartialDissimilarity::from_complete(const SquaredDistanceMatrix& d) {
  if (!d.complete())
    throw std::invalid_argument("matrix has missing entries");
  return PartialDissimilarity(AdjacencyMask::complete(d.order()), d.values());
}

PartialDissimilarity PartialDissimilarity::from_incomplete(const SquaredDistanceMatrix& d) {
  const int n = d.order();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!is_missing(d(i, j))) pairs.emplace_back(i, j);
  return PartialDissimilarity(AdjacencyMask::from_pairs(n, pairs), d.values());
}

double PartialDissimilarity::known(int i, int j) const {
  if (!mask_(i, j)) throw std::invalid_argument("entry is not known");
  return values_(i, j);
}

BoundsPair make_bounds(Matrix lower, Matrix upper) {
  const int n = lower.rows();
  if (n != lower.cols() || !upper.same_shape(lower) || n < 1)
    throw std::invalid_argument("bounds must be square matrices of equal order");
  for (int i = 0; i < n; ++i) {
    if (lower(i, i) != 0.0 || upper(i, i) != 0.0)
      throw std::invalid_argument("bounds must be hollow");
    for (int j = i + 1; j < n; ++j) {
      const double lo = lower(i, j), hi = upper(i, j);
      if (lo != lower(j, i) || hi != upper(j, i))
        throw std::invalid_argument("bounds must be symmetric");
      if (!(lo >= 0.0) || !std::isfinite(lo))
        throw std::invalid_argument("lower bounds must be finite and nonnegative");
      if (std::isnan(hi) || hi < lo)
        throw std::invalid_argument("bounds must satisfy lower <= upper");
    }
  }
  return BoundsPair{std::move(lower), std::move(upper)};
}

BoundsPair default_bounds(const PartialDissimilarity& p) {
  const int n = p.order();
  Matrix lo(n, n, 0.0);
  Matrix hi(n, n, std::numeric_limits<double>::infinity());
  for (int i = 0; i < n; ++i) hi(i, i) = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.mask()(i, j)) {
        lo(i, j) = lo(j, i) = p.values()(i, j);
        hi(i, j) = hi(j, i) = p.values()(i, j);
      }
  return BoundsPair{std::move(lo), std::move(hi)};
}

void check_bounds_consistent(const PartialDissimilarity& p, const BoundsPair& b) {
  const int n = p.order();
  if (b.lower.rows() != n || b.lower.cols() != n || !b.upper.same_shape(b.lower))
    throw std::invalid_argument("bounds order must match the instance");
  make_bounds(b.lower, b.upper);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.mask()(i, j)) {
        const double v = p.values()(i, j);
        if (b.lower(i, j) != v || b.upper(i, j) != v)
          throw std::invalid_argument("bounds must pin known entries");
      }
}

}  // namespace edmc
