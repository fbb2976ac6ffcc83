#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tqlab {

// Seeded Monte-Carlo experiment specification. Flat key = value text files
// plus CLI overrides; every threshold that decides a pass flag lives here so
// that changing one is visible in the config hash.
struct ExperimentConfig {
  std::string experiment = "oracle";
  std::string arrival = "exp:1.0";
  std::string service = "exp:1.0";
  std::vector<long long> n_values = {1000, 10000, 100000};
  int replications = 0;  // 0 -> per-experiment default
  std::uint64_t seed = 20240601;
  double scaled_horizon = 5.0;
  std::vector<double> eval_times = {1.0, 2.0};
  double grid_step = 0.0;  // 0 -> scaled_horizon * 2^-10
  std::string output_dir;

  // pass thresholds (defaults match the shipped validation suite)
  std::vector<double> ks_thresholds = {0.08, 0.10};  // convergence, per eval time
  double cov_tolerance = 0.1;                        // fdd, entrywise
  double variance_band_lo = 0.9, variance_band_hi = 1.1;
  double control_band_lo = 0.5, control_band_hi = 2.0;
  double lln_threshold = 0.1;
  double littles_threshold = 0.25;
  double equivalence_ks_threshold = 0.033;
  double sigma_inflation = 1.2;  // equivalence negative control
  double identity_tol = 1e-9;    // oracle pathwise identities
  int oracle_instances = 1000;
  int oracle_max_n = 50;
  double alpha = 0.01;  // significance for auxiliary KS tests

  int effective_replications() const;
  double effective_grid_step() const { return grid_step > 0.0 ? grid_step : scaled_horizon / 1024.0; }

  // Canonical text form (fixed key order, output_dir excluded: it cannot
  // influence results). Hashed into the report metadata.
  std::string canonical() const;
  std::string hash() const;

  static ExperimentConfig load(const std::string& path);
  void apply_key(const std::string& key, const std::string& value);
};

struct ReportRow {
  std::string statistic;
  long long n = 0;   // 0 when not tied to a population size
  double t = 0.0;    // 0 when not tied to an eval time
  double value = 0.0;
  double threshold = 0.0;
  bool pass = true;
};

// Tabular experiment outcome; reproducible bit-for-bit from (config, seed).
// Wall time is recorded separately because it is not reproducible.
struct ExperimentReport {
  std::string experiment;
  std::string config_hash;
  std::uint64_t seed = 0;
  std::vector<ReportRow> rows;
  double wall_seconds = 0.0;

  bool overall_pass() const;
  void add(std::string statistic, long long n, double t, double value, double threshold,
           bool pass);

  std::string to_csv() const;
  std::string to_json() const;  // deterministic summary (no timing)
  // Writes <experiment>.csv, <experiment>_summary.json and a timing sidecar.
  void write(const std::string& dir) const;
  void print(std::ostream& out) const;
};

// Deterministic parallel map: fn(i) for i in [0, count); the worker count
// comes from TQLAB_THREADS (default: hardware concurrency) and never affects
// results because every index owns its RNG stream.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

// FNV-1a 64-bit, hex-encoded.
std::string fnv1a_hex(const std::string& data);

std::string format_double(double x);

}  // namespace tqlab
