#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "edmc/optimize.hpp"
#include "edmc/types.hpp"

namespace edmc {

/// Relative dissimilarity difference ||D - Dhat||_F^2 / ||D||_F^2.
double rdd(const SquaredDistanceMatrix& d, const SquaredDistanceMatrix& dhat);

/// Proportion of t's edges that also appear in the MST of dhat.
double mst_edge_retention(const SpanningTree& t, const SquaredDistanceMatrix& dhat);

/// Squared difference of total MST weights over the squared total of the
/// original tree's weights.
double mst_distance_ratio(const SpanningTree& t, const SquaredDistanceMatrix& dhat);

enum class Method { Constructive, Dpf, Dpflb, Npf, Identity };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

/// One completion problem with its ground truth.
struct TrialInstance {
  SquaredDistanceMatrix truth;
  SpanningTree tree;            // MST of the truth
  PartialDissimilarity partial; // the masked input handed to methods
  std::string descriptor;
};

struct TrialOptions {
  int dim = 2;
  int max_in = 100;
  int max_out = 100;
  DpfConfig dpf{};  // dim and seed are overridden per trial
  NpfConfig npf{};
};

struct EvalReport {
  std::string method;
  std::string instance;
  uint64_t seed = 0;
  int dim = 0;
  double rdd = 0.0;
  double mst_edge_retention = 0.0;
  double mst_distance_ratio = 0.0;
  double seconds = 0.0;
  bool converged = false;
  bool mst_ties = false;
  std::string error;  // method failures are recorded, not thrown
};

/// Runs a method on an instance, times it, and scores the completion
/// against the ground truth.
EvalReport run_trial(Method method, const TrialInstance& instance, uint64_t seed,
                     const TrialOptions& options = {});

}  // namespace edmc
