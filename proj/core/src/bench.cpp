#include "edmc/bench.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "edmc/io.hpp"
#include "edmc/operators.hpp"
#include "edmc/tree.hpp"
#include "edmc/version.hpp"

namespace edmc {
namespace {

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

struct PreparedTrial {
  Method method;
  int dim = 0;
  int rep = 0;  // 1-based
  uint64_t seed = 0;
};

}  // namespace

const char* build_info() {
#if defined(__clang__)
  return "clang " __clang_version__;
#elif defined(__GNUC__)
  return "gcc " __VERSION__;
#else
  return "unknown compiler";
#endif
}

RunRecord run_bench(const RunSpec& spec) {
  if (spec.methods.empty() || spec.dims.empty())
    throw std::invalid_argument("bench: at least one method and dimension required");
  if (spec.reps < 1) throw std::invalid_argument("bench: reps must be >= 1");
  if (!(spec.fraction >= 0.0 && spec.fraction < 1.0))
    throw std::invalid_argument("bench: fraction must be in [0, 1)");
  const int jobs = std::max(1, spec.jobs);

  // Instances are shared across methods: one per (dim, rep), with the mask
  // drawn once so every method completes the same partial matrix. Synthetic
  // configurations are keyed by the repetition index alone ("matrix 1..k").
  struct InstanceKey {
    int dim, rep;
  };
  std::vector<InstanceKey> keys;
  for (int dim : spec.dims)
    for (int rep = 1; rep <= spec.reps; ++rep) keys.push_back({dim, rep});

  LabeledPoints file_points{PointConfiguration(Matrix(1, 1)), {}, {}};
  if (!spec.input.empty()) file_points = load_points(spec.input);

  std::vector<TrialInstance> instances;
  instances.reserve(keys.size());
  for (const auto& key : keys) {
    PointConfiguration x = spec.input.empty()
                               ? generate_uniform(spec.n, key.dim,
                                                  static_cast<uint64_t>(key.rep))
                               : file_points.points;
    SquaredDistanceMatrix truth = edm(x);
    SpanningTree tree = mst(truth);
    PartialDissimilarity partial =
        spec.mode == MaskMode::Mst
            ? PartialDissimilarity::from_tree(tree)
            : mask_random(truth, spec.fraction,
                          mix_seed(spec.master_seed,
                                   {0x6d61736bULL, static_cast<uint64_t>(key.dim),
                                    static_cast<uint64_t>(key.rep)}));
    std::ostringstream name;
    if (spec.input.empty())
      name << "uniform-n" << spec.n << "-p" << key.dim << "-m" << key.rep;
    else
      name << spec.input << "-rep" << key.rep;
    name << "-" << mask_mode_name(spec.mode);
    if (spec.mode == MaskMode::RandomFraction) name << spec.fraction;
    instances.push_back(TrialInstance{std::move(truth), std::move(tree),
                                      std::move(partial), name.str()});
  }

  std::vector<PreparedTrial> prepared;
  for (size_t mi = 0; mi < spec.methods.size(); ++mi)
    for (size_t ki = 0; ki < keys.size(); ++ki)
      prepared.push_back(PreparedTrial{
          spec.methods[mi], keys[ki].dim, keys[ki].rep,
          mix_seed(spec.master_seed,
                   {static_cast<uint64_t>(mi), static_cast<uint64_t>(keys[ki].dim),
                    static_cast<uint64_t>(keys[ki].rep)})});

  std::vector<EvalReport> reports(prepared.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= prepared.size()) return;
      const PreparedTrial& t = prepared[k];
      const size_t instance_index = k % keys.size();  // methods outermost
      TrialOptions options;
      options.dim = t.dim;
      options.max_in = spec.max_in;
      options.max_out = spec.max_out;
      reports[k] = run_trial(t.method, instances[instance_index], t.seed, options);
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  RunRecord record;
  record.spec = spec;
  record.trials = std::move(reports);
  record.version = kVersion;
  record.build = build_info();
  record.timestamp = iso_timestamp();
  return record;
}

std::string to_json_string(const RunRecord& record) {
  nlohmann::ordered_json doc;
  doc["format"] = "edmc-runrecord v1";

  nlohmann::ordered_json spec;
  std::vector<std::string> method_names;
  for (Method m : record.spec.methods) method_names.emplace_back(method_name(m));
  spec["methods"] = method_names;
  spec["dims"] = record.spec.dims;
  spec["mode"] = mask_mode_name(record.spec.mode);
  spec["fraction"] = record.spec.fraction;
  spec["reps"] = record.spec.reps;
  spec["seed"] = record.spec.master_seed;
  spec["input"] = record.spec.input;
  spec["n"] = record.spec.n;
  spec["jobs"] = record.spec.jobs;
  spec["max_in"] = record.spec.max_in;
  spec["max_out"] = record.spec.max_out;
  doc["spec"] = spec;

  nlohmann::ordered_json env;
  env["version"] = record.version;
  env["build"] = record.build;
  env["timestamp"] = record.timestamp;
  doc["environment"] = env;

  nlohmann::ordered_json trials = nlohmann::ordered_json::array();
  for (const EvalReport& r : record.trials) {
    nlohmann::ordered_json t;
    t["method"] = r.method;
    t["instance"] = r.instance;
    t["dim"] = r.dim;
    t["seed"] = r.seed;
    t["rdd"] = r.rdd;
    t["mst_edge_retention"] = r.mst_edge_retention;
    t["mst_distance_ratio"] = r.mst_distance_ratio;
    t["converged"] = r.converged;
    t["mst_ties"] = r.mst_ties;
    t["error"] = r.error;
    t["seconds"] = r.seconds;
    trials.push_back(std::move(t));
  }
  doc["trials"] = trials;
  return doc.dump(2) + "\n";
}

void save_run_record(const std::string& path, const RunRecord& record) {
  atomic_write(path, to_json_string(record));
}

}  // namespace edmc
