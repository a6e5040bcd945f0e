#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "edmc/random.hpp"
#include "edmc/types.hpp"

namespace edmc {

enum class FpForm {
  /// Squared Frobenius distance to the nearest PSD matrix of rank <= p:
  /// sum over the top p of min(lambda, 0)^2 plus the tail lambda^2.
  /// Zero exactly on rank-<=p Gram matrices.
  Projection,
  /// As printed in the source formulation: (lambda_i - lambda_max)^2 over
  /// the top p plus the tail lambda^2. Nonzero even for exact rank-p Gram
  /// matrices; kept selectable for comparison.
  Literal,
};

double fp_objective(const Matrix& s, int p, FpForm form = FpForm::Projection);
double fp_objective(std::span<const double> eigenvalues_descending, int p,
                    FpForm form = FpForm::Projection);

struct DpfConfig {
  int dim = 2;
  int max_iterations = 5000;
  /// Converged when the relative objective decrease over `window`
  /// iterations falls below this.
  double tolerance = 1e-10;
  int window = 10;
  // Backtracking line search: Barzilai-Borwein initial step, then shrink
  // until the sufficient-decrease condition holds.
  double armijo_shrink = 0.5;
  double armijo_slope = 1e-4;
  uint64_t seed = 0;
  FpForm form = FpForm::Projection;
  /// Test hook, called once per accepted iterate.
  std::function<void(int iteration, const Matrix& delta, double objective)> observer;
};

struct NpfConfig {
  int dim = 2;
  int candidates = 30;      // random initial matrices B
  int max_iterations = 2000;  // per start
  double gradient_tolerance = 1e-12;  // relative to the initial gradient
  int restarts = 5;         // starts attempted before giving up
  double tolerance = 1e-10;
  int window = 10;
  double armijo_shrink = 0.5;
  double armijo_slope = 1e-4;
  uint64_t seed = 0;
};

struct CompletionResult {
  SquaredDistanceMatrix completed;
  PointConfiguration points;
  double objective = 0.0;
  int iterations = 0;
  bool converged = false;
  double seconds = 0.0;
};

/// Projected-gradient minimization of F_p(tau(Delta)) over the box
/// [lower, upper], entries clipped each step. Known entries are pinned by
/// the bounds and never move.
CompletionResult dpf_complete(const PartialDissimilarity& p, const BoundsPair& bounds,
                              const DpfConfig& cfg);

/// DPF with minimal-spanning-tree lower bounds and triangle-inequality
/// upper bounds; the mask of `p` must be exactly the tree's edges. The
/// result preserves the tree's MST by construction of the bounds.
CompletionResult dpflb_complete(const PartialDissimilarity& p, const SpanningTree& t,
                                const DpfConfig& cfg);

/// Builds the bounds dpflb_complete uses: tree entries pinned, lower bounds
/// from the largest tree edge on each path (inflated by a strictness
/// margin), upper bounds from shortest paths.
BoundsPair dpflb_bounds(const PartialDissimilarity& p, const SpanningTree& t);

/// Masked squared-distance misfit sum a_ij (d_ij - |x_i - x_j|^2)^2 over
/// both index orders.
double npf_objective(const PointConfiguration& x, const PartialDissimilarity& p);

/// Gradient of npf_objective: row i is sum_j 8 a_ij (|x_i - x_j|^2 - d_ij)
/// (x_i - x_j).
Matrix npf_gradient(const PointConfiguration& x, const PartialDissimilarity& p);

/// Candidate completions for initialization: known entries copied; unknown
/// b_ij = f_ij / s_ij with f_ij the squared shortest-path bound and s_ij
/// drawn from N(1.5, 0.009) truncated to (0, k_ij].
std::vector<Matrix> npf_init(const PartialDissimilarity& p, int count, Rng& rng);

/// Gradient descent on point positions from the best-ranked candidate
/// starts; a zero objective identifies a global optimum.
CompletionResult npf_complete(const PartialDissimilarity& p, const NpfConfig& cfg);

}  // namespace edmc
