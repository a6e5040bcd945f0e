#include "edmc/optimize.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

#include "edmc/bounds.hpp"
#include "edmc/eigensolver.hpp"
#include "edmc/mds.hpp"
#include "edmc/operators.hpp"

namespace edmc {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_fp_args(int n, int p) {
  if (p < 1 || p > n)
    throw std::invalid_argument("fp_objective: dimension must be in [1, n]");
}

// d F_p / d lambda_i for the chosen form.
std::vector<double> fp_eigen_gradient(const std::vector<double>& lam, int p,
                                      FpForm form) {
  const int n = static_cast<int>(lam.size());
  std::vector<double> g(n, 0.0);
  if (form == FpForm::Projection) {
    for (int i = 0; i < n; ++i)
      g[i] = i < p ? 2.0 * std::min(lam[i], 0.0) : 2.0 * lam[i];
  } else {
    const double lmax = lam[0];
    double head = 0.0;
    for (int i = 1; i < p; ++i) {
      g[i] = 2.0 * (lam[i] - lmax);
      head += lmax - lam[i];
    }
    g[0] = 2.0 * head;
    for (int i = p; i < n; ++i) g[i] = 2.0 * lam[i];
  }
  return g;
}

// U diag(g) U'; terms with g_i == 0 are skipped.
Matrix assemble_spectral(const EigenDecomposition& e, const std::vector<double>& g) {
  const int n = static_cast<int>(g.size());
  Matrix out(n, n, 0.0);
  for (int i = 0; i < n; ++i) {
    if (g[i] == 0.0) continue;
    for (int r = 0; r < n; ++r) {
      const double gr = g[i] * e.vectors(r, i);
      if (gr == 0.0) continue;
      double* orow = out.row(r);
      for (int c = 0; c < n; ++c) orow[c] += gr * e.vectors(c, i);
    }
  }
  return out;
}

Matrix clip_to_box(const Matrix& x, const BoundsPair& b) {
  Matrix out = x;
  for (size_t k = 0; k < out.data().size(); ++k) {
    double v = out.data()[k];
    const double lo = b.lower.data()[k];
    const double hi = b.upper.data()[k];
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    out.data()[k] = v;
  }
  return out;
}

struct DescentHistory {
  std::deque<double> values;
  int window;
  explicit DescentHistory(int w) : window(w) {}
  // True once the relative decrease across the window drops below tol.
  bool stalled(double f, double tol) {
    values.push_back(f);
    if (static_cast<int>(values.size()) <= window) return false;
    const double past = values.front();
    values.pop_front();
    const double scale = std::max({std::abs(past), std::abs(f), 1e-300});
    return (past - f) <= tol * scale;
  }
};

}  // namespace

double fp_objective(std::span<const double> lam, int p, FpForm form) {
  const int n = static_cast<int>(lam.size());
  check_fp_args(n, p);
  double acc = 0.0;
  if (form == FpForm::Projection) {
    for (int i = 0; i < p; ++i) {
      const double v = std::min(lam[i], 0.0);
      acc += v * v;
    }
  } else {
    const double lmax = lam[0];
    for (int i = 0; i < p; ++i) {
      const double v = lam[i] - lmax;
      acc += v * v;
    }
  }
  for (int i = p; i < n; ++i) acc += lam[i] * lam[i];
  return acc;
}

double fp_objective(const Matrix& s, int p, FpForm form) {
  check_fp_args(s.rows(), p);
  const std::vector<double> lam = eig_sym_values(s);
  return fp_objective(std::span<const double>(lam), p, form);
}

CompletionResult dpf_complete(const PartialDissimilarity& p, const BoundsPair& bounds,
                              const DpfConfig& cfg) {
  const auto start = Clock::now();
  const int n = p.order();
  if (cfg.dim < 1 || cfg.dim > n)
    throw std::invalid_argument("dpf_complete: dimension must be in [1, n]");
  check_bounds_consistent(p, bounds);

  // Feasible start: triangle-inequality bounds projected into the box.
  Matrix delta = clip_to_box(shortest_path_upper_bounds(p), bounds);

  EigenDecomposition e = eig_sym(double_center(delta));
  double f = fp_objective(std::span<const double>(e.values), cfg.dim, cfg.form);
  if (cfg.observer) cfg.observer(0, delta, f);

  DescentHistory history(cfg.window);
  bool converged = f == 0.0;
  int iterations = 0;
  double step = 1.0;
  Matrix prev_delta, prev_grad;
  bool have_prev = false;

  while (!converged && iterations < cfg.max_iterations) {
    // Gradient of F_p(tau(.)) at delta: spectral gradient mapped back
    // through the (self-adjoint) double-centering operator.
    const std::vector<double> eg = fp_eigen_gradient(e.values, cfg.dim, cfg.form);
    Matrix grad = double_center(assemble_spectral(e, eg));

    if (have_prev) {
      // Barzilai-Borwein initial step, safeguarded.
      double ss = 0.0, sy = 0.0;
      for (size_t k = 0; k < grad.data().size(); ++k) {
        const double s = delta.data()[k] - prev_delta.data()[k];
        const double y = grad.data()[k] - prev_grad.data()[k];
        ss += s * s;
        sy += s * y;
      }
      if (sy > 0.0 && ss > 0.0) step = std::clamp(ss / sy, 1e-12, 1e12);
    }

    prev_delta = delta;
    prev_grad = grad;
    have_prev = true;

    bool accepted = false;
    double alpha = step;
    for (int bt = 0; bt < 60; ++bt) {
      Matrix trial = prev_delta;
      for (size_t k = 0; k < trial.data().size(); ++k)
        trial.data()[k] -= alpha * grad.data()[k];
      trial = clip_to_box(trial, bounds);

      double moved = 0.0;  // <grad, delta - trial>, nonnegative for a box
      for (size_t k = 0; k < trial.data().size(); ++k)
        moved += grad.data()[k] * (prev_delta.data()[k] - trial.data()[k]);
      if (moved <= 0.0) break;  // projected-stationary point

      EigenDecomposition et = eig_sym(double_center(trial));
      const double ft =
          fp_objective(std::span<const double>(et.values), cfg.dim, cfg.form);
      if (ft <= f - cfg.armijo_slope * moved) {
        delta = std::move(trial);
        e = std::move(et);
        f = ft;
        accepted = true;
        break;
      }
      alpha *= cfg.armijo_shrink;
    }
    if (!accepted) {
      converged = true;  // no productive step remains
      break;
    }
    ++iterations;
    if (cfg.observer) cfg.observer(iterations, delta, f);
    if (f == 0.0 || history.stalled(f, cfg.tolerance)) converged = true;
  }

  SquaredDistanceMatrix completed(std::move(delta));
  PointConfiguration points = classical_mds(completed, cfg.dim);
  return CompletionResult{std::move(completed), std::move(points), f,
                          iterations, converged, seconds_since(start)};
}

BoundsPair dpflb_bounds(const PartialDissimilarity& p, const SpanningTree& t) {
  const int n = p.order();
  if (t.order() != n) throw std::invalid_argument("dpflb: order mismatch");
  if (p.mask().known_pairs() != n - 1)
    throw std::invalid_argument("dpflb: mask must be exactly the tree's edges");
  for (const auto& e : t.edges())
    if (!p.mask()(e.i, e.j))
      throw std::invalid_argument("dpflb: mask must be exactly the tree's edges");

  Matrix lower = mst_lower_bounds(t);
  Matrix upper = shortest_path_upper_bounds(p);
  // Strict margin keeps off-tree distances clear of the deciding tree edge;
  // capped at the upper bound (duplicate points make the two coincide).
  constexpr double kStrict = 1.0 + 1e-9;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (p.mask()(i, j)) {
        lower(i, j) = lower(j, i) = p.values()(i, j);
        upper(i, j) = upper(j, i) = p.values()(i, j);
      } else {
        const double inflated = std::min(lower(i, j) * kStrict, upper(i, j));
        lower(i, j) = lower(j, i) = inflated;
      }
    }
  return make_bounds(std::move(lower), std::move(upper));
}

CompletionResult dpflb_complete(const PartialDissimilarity& p, const SpanningTree& t,
                                const DpfConfig& cfg) {
  return dpf_complete(p, dpflb_bounds(p, t), cfg);
}

double npf_objective(const PointConfiguration& x, const PartialDissimilarity& p) {
  const int n = p.order();
  if (x.count() != n)
    throw std::invalid_argument("npf_objective: size mismatch");
  const int dim = x.dim();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!p.mask()(i, j)) continue;
      double s = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double t = x(i, k) - x(j, k);
        s += t * t;
      }
      const double r = p.values()(i, j) - s;
      acc += 2.0 * r * r;  // both index orders of the double sum
    }
  return acc;
}

Matrix npf_gradient(const PointConfiguration& x, const PartialDissimilarity& p) {
  const int n = p.order();
  if (x.count() != n)
    throw std::invalid_argument("npf_gradient: size mismatch");
  const int dim = x.dim();
  Matrix g(n, dim, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!p.mask()(i, j)) continue;
      double s = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double t = x(i, k) - x(j, k);
        s += t * t;
      }
      const double coef = 8.0 * (s - p.values()(i, j));
      for (int k = 0; k < dim; ++k) {
        const double t = x(i, k) - x(j, k);
        g(i, k) += coef * t;
        g(j, k) -= coef * t;
      }
    }
  return g;
}

std::vector<Matrix> npf_init(const PartialDissimilarity& p, int count, Rng& rng) {
  if (count < 1) throw std::invalid_argument("npf_init: count must be >= 1");
  const int n = p.order();
  const Matrix f = shortest_path_upper_bounds(p);
  const ShortestPathTable paths = shortest_paths(p);
  std::normal_distribution<double> normal(1.5, std::sqrt(0.009));

  std::vector<Matrix> out;
  out.reserve(count);
  for (int c = 0; c < count; ++c) {
    Matrix b(n, n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        double v;
        if (p.mask()(i, j)) {
          v = p.values()(i, j);
        } else {
          const double cap = static_cast<double>(paths.segments(i, j));
          double s;
          long guard = 0;
          do {
            s = normal(rng);
            if (++guard > 1000000)
              throw std::runtime_error("npf_init: truncation rejection stuck");
          } while (!(s > 0.0 && s <= cap));
          v = f(i, j) / s;
        }
        b(i, j) = b(j, i) = v;
      }
    out.push_back(std::move(b));
  }
  return out;
}

CompletionResult npf_complete(const PartialDissimilarity& p, const NpfConfig& cfg) {
  const auto start = Clock::now();
  const int n = p.order();
  if (cfg.dim < 1 || cfg.dim > n)
    throw std::invalid_argument("npf_complete: dimension must be in [1, n]");
  if (cfg.candidates < 1 || cfg.restarts < 1 || cfg.max_iterations < 1)
    throw std::invalid_argument("npf_complete: counts must be >= 1");

  // A zero objective marks the global optimum; measured relative to the
  // squared scale of the known entries.
  double data_scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.mask()(i, j)) {
        const double d = p.values()(i, j);
        data_scale += 2.0 * d * d;
      }
  const double global_tolerance = 1e-16 * std::max(data_scale, 1e-300);

  Rng rng = make_rng(cfg.seed);
  std::vector<Matrix> candidates = npf_init(p, cfg.candidates, rng);
  struct Start {
    PointConfiguration x;
    double f;
  };
  std::vector<Start> starts;
  starts.reserve(candidates.size());
  for (Matrix& b : candidates) {
    PointConfiguration x =
        classical_mds(SquaredDistanceMatrix(std::move(b)), cfg.dim);
    const double f = npf_objective(x, p);
    starts.push_back(Start{std::move(x), f});
  }
  std::stable_sort(starts.begin(), starts.end(),
                   [](const Start& a, const Start& b) { return a.f < b.f; });

  Matrix best_x;
  double best_f = std::numeric_limits<double>::infinity();
  bool converged = false;
  int total_iterations = 0;
  const int tries = std::min<int>(cfg.restarts, static_cast<int>(starts.size()));

  for (int attempt = 0; attempt < tries && !converged; ++attempt) {
    Matrix x = starts[attempt].x.coords();
    double f = starts[attempt].f;
    double initial_grad_norm = -1.0;
    DescentHistory history(cfg.window);
    double step = 1.0;
    Matrix prev_x, prev_g;
    bool have_prev = false;

    for (int it = 0; it < cfg.max_iterations; ++it) {
      if (f <= global_tolerance) break;
      Matrix g = npf_gradient(PointConfiguration(x), p);
      const double gnorm = frobenius_norm(g);
      if (initial_grad_norm < 0.0) initial_grad_norm = gnorm;
      if (gnorm <= cfg.gradient_tolerance * std::max(initial_grad_norm, 1e-300))
        break;

      if (have_prev) {
        double ss = 0.0, sy = 0.0;
        for (size_t k = 0; k < g.data().size(); ++k) {
          const double s = x.data()[k] - prev_x.data()[k];
          const double y = g.data()[k] - prev_g.data()[k];
          ss += s * s;
          sy += s * y;
        }
        if (sy > 0.0 && ss > 0.0) step = std::clamp(ss / sy, 1e-14, 1e14);
      }
      prev_x = x;
      prev_g = g;
      have_prev = true;

      bool accepted = false;
      double alpha = step;
      for (int bt = 0; bt < 80; ++bt) {
        Matrix trial = prev_x;
        for (size_t k = 0; k < trial.data().size(); ++k)
          trial.data()[k] -= alpha * g.data()[k];
        const double ft = npf_objective(PointConfiguration(trial), p);
        if (ft <= f - cfg.armijo_slope * alpha * gnorm * gnorm) {
          x = std::move(trial);
          f = ft;
          accepted = true;
          break;
        }
        alpha *= cfg.armijo_shrink;
      }
      ++total_iterations;
      if (!accepted) break;
      if (history.stalled(f, cfg.tolerance)) break;
    }

    if (f < best_f) {
      best_f = f;
      best_x = x;
    }
    if (best_f <= global_tolerance) converged = true;
  }

  PointConfiguration points{std::move(best_x)};
  SquaredDistanceMatrix completed = edm(points);
  return CompletionResult{std::move(completed), std::move(points), best_f,
                          total_iterations, converged, seconds_since(start)};
}

}  // namespace edmc
