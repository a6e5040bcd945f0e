#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edmc/generate.hpp"
#include "edmc/metrics.hpp"

namespace edmc {

/// One bench invocation: a grid of methods x dimensions x repetitions over
/// either a points file or synthetic uniform data.
struct RunSpec {
  std::vector<Method> methods;
  std::vector<int> dims;
  MaskMode mode = MaskMode::Mst;
  double fraction = 0.0;  // random mode only
  int reps = 1;
  uint64_t master_seed = 0;
  std::string input;  // points CSV; empty selects synthetic uniform data
  int n = 100;        // synthetic point count
  int jobs = 1;
  int max_in = 100;
  int max_out = 100;
};

struct RunRecord {
  RunSpec spec;
  std::vector<EvalReport> trials;
  std::string version;
  std::string build;
  std::string timestamp;
};

/// Runs the grid; trials execute concurrently up to spec.jobs, each with a
/// seed derived from (master seed, method, dimension, repetition), so the
/// record's metric fields are independent of scheduling.
RunRecord run_bench(const RunSpec& spec);

std::string to_json_string(const RunRecord& record);
void save_run_record(const std::string& path, const RunRecord& record);

}  // namespace edmc
