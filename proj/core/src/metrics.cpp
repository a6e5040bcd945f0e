#include "edmc/metrics.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "edmc/construct.hpp"
#include "edmc/operators.hpp"
#include "edmc/tree.hpp"

namespace edmc {

double rdd(const SquaredDistanceMatrix& d, const SquaredDistanceMatrix& dhat) {
  if (d.order() != dhat.order())
    throw std::invalid_argument("rdd: order mismatch");
  if (!d.complete() || !dhat.complete())
    throw std::invalid_argument("rdd: matrices must be fully observed");
  double num = 0.0, den = 0.0;
  for (int i = 0; i < d.order(); ++i)
    for (int j = 0; j < d.order(); ++j) {
      const double r = d(i, j) - dhat(i, j);
      num += r * r;
      den += d(i, j) * d(i, j);
    }
  if (den == 0.0) {
    if (num != 0.0)
      throw std::invalid_argument("rdd: zero reference with nonzero completion");
    return 0.0;
  }
  return num / den;
}

double mst_edge_retention(const SpanningTree& t, const SquaredDistanceMatrix& dhat) {
  if (t.order() != dhat.order())
    throw std::invalid_argument("mst_edge_retention: order mismatch");
  if (t.order() == 1) return 1.0;
  const SpanningTree that = mst(dhat);
  int shared = 0;
  for (const auto& e : t.edges())
    if (that.has_edge(e.i, e.j)) ++shared;
  return static_cast<double>(shared) / (t.order() - 1);
}

double mst_distance_ratio(const SpanningTree& t, const SquaredDistanceMatrix& dhat) {
  if (t.order() != dhat.order())
    throw std::invalid_argument("mst_distance_ratio: order mismatch");
  if (t.order() == 1) return 0.0;
  const SpanningTree that = mst(dhat);
  double sum = 0.0, sum_hat = 0.0, sum_sq = 0.0;
  for (const auto& e : t.edges()) {
    sum += e.weight;
    sum_sq += e.weight * e.weight;
  }
  for (const auto& e : that.edges()) sum_hat += e.weight;
  const double diff = sum - sum_hat;
  if (sum_sq == 0.0) return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return diff * diff / sum_sq;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::Constructive: return "c";
    case Method::Dpf: return "dpf";
    case Method::Dpflb: return "dpflb";
    case Method::Npf: return "npf";
    case Method::Identity: return "identity";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "c") return Method::Constructive;
  if (name == "dpf") return Method::Dpf;
  if (name == "dpflb") return Method::Dpflb;
  if (name == "npf") return Method::Npf;
  if (name == "identity") return Method::Identity;
  return std::nullopt;
}

EvalReport run_trial(Method method, const TrialInstance& instance, uint64_t seed,
                     const TrialOptions& options) {
  EvalReport report;
  report.method = method_name(method);
  report.instance = instance.descriptor;
  report.seed = seed;
  report.dim = options.dim;

  const auto start = std::chrono::steady_clock::now();
  try {
    SquaredDistanceMatrix completed(Matrix(1, 1, 0.0));
    switch (method) {
      case Method::Constructive: {
        ConstructiveConfig cfg;
        cfg.dim = options.dim;
        cfg.max_in = options.max_in;
        cfg.max_out = options.max_out;
        cfg.seed = seed;
        ConstructionResult r = mst_configure(instance.tree, cfg);
        report.converged = r.converged;
        if (!r.converged) throw std::runtime_error("construction did not converge");
        completed = edm(r.points);
        break;
      }
      case Method::Dpf: {
        DpfConfig cfg = options.dpf;
        cfg.dim = options.dim;
        cfg.seed = seed;
        CompletionResult r =
            dpf_complete(instance.partial, default_bounds(instance.partial), cfg);
        report.converged = r.converged;
        completed = std::move(r.completed);
        break;
      }
      case Method::Dpflb: {
        DpfConfig cfg = options.dpf;
        cfg.dim = options.dim;
        cfg.seed = seed;
        CompletionResult r = dpflb_complete(instance.partial, instance.tree, cfg);
        report.converged = r.converged;
        completed = std::move(r.completed);
        break;
      }
      case Method::Npf: {
        NpfConfig cfg = options.npf;
        cfg.dim = options.dim;
        cfg.seed = seed;
        CompletionResult r = npf_complete(instance.partial, cfg);
        report.converged = r.converged;
        completed = std::move(r.completed);
        break;
      }
      case Method::Identity: {
        if (!instance.partial.complete())
          throw std::invalid_argument("identity passthrough needs a complete matrix");
        completed = SquaredDistanceMatrix(instance.partial.values());
        report.converged = true;
        break;
      }
    }

    report.rdd = rdd(instance.truth, completed);
    bool ties = false;
    const SpanningTree that = mst(completed, &ties);
    report.mst_ties = ties;
    int shared = 0;
    for (const auto& e : instance.tree.edges())
      if (that.has_edge(e.i, e.j)) ++shared;
    report.mst_edge_retention =
        instance.tree.order() == 1
            ? 1.0
            : static_cast<double>(shared) / (instance.tree.order() - 1);
    report.mst_distance_ratio = mst_distance_ratio(instance.tree, completed);
  } catch (const std::exception& ex) {
    report.error = ex.what();
    report.rdd = report.mst_edge_retention = report.mst_distance_ratio =
        std::numeric_limits<double>::quiet_NaN();
  }
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

}  // namespace edmc
