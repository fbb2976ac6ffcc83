#include "tqlab/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace tqlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto c = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, c == std::string::npos ? c : c - pos)));
    if (c == std::string::npos) break;
    pos = c + 1;
  }
  return out;
}

std::vector<long long> parse_ll_list(const std::string& s) {
  std::vector<long long> out;
  for (const auto& tok : split(s, ','))
    if (!tok.empty()) out.push_back(std::stoll(tok));
  return out;
}

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& tok : split(s, ','))
    if (!tok.empty()) out.push_back(std::stod(tok));
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

int ExperimentConfig::effective_replications() const {
  if (replications > 0) return replications;
  if (experiment == "convergence") return 2000;
  if (experiment == "fdd") return 5000;
  if (experiment == "lln") return 200;
  if (experiment == "littles") return 500;
  if (experiment == "equivalence") return 10000;
  return oracle_instances;
}

std::string ExperimentConfig::canonical() const {
  std::ostringstream os;
  os << "experiment=" << experiment << "\narrival=" << arrival << "\nservice=" << service
     << "\nn_values=";
  for (std::size_t i = 0; i < n_values.size(); ++i) os << (i ? "," : "") << n_values[i];
  os << "\nreplications=" << effective_replications() << "\nseed=" << seed
     << "\nscaled_horizon=" << format_double(scaled_horizon) << "\neval_times=";
  for (std::size_t i = 0; i < eval_times.size(); ++i)
    os << (i ? "," : "") << format_double(eval_times[i]);
  os << "\ngrid_step=" << format_double(effective_grid_step()) << "\nks_thresholds=";
  for (std::size_t i = 0; i < ks_thresholds.size(); ++i)
    os << (i ? "," : "") << format_double(ks_thresholds[i]);
  os << "\ncov_tolerance=" << format_double(cov_tolerance)
     << "\nvariance_band=" << format_double(variance_band_lo) << ","
     << format_double(variance_band_hi) << "\ncontrol_band=" << format_double(control_band_lo)
     << "," << format_double(control_band_hi) << "\nlln_threshold=" << format_double(lln_threshold)
     << "\nlittles_threshold=" << format_double(littles_threshold)
     << "\nequivalence_ks_threshold=" << format_double(equivalence_ks_threshold)
     << "\nsigma_inflation=" << format_double(sigma_inflation)
     << "\nidentity_tol=" << format_double(identity_tol)
     << "\noracle_instances=" << oracle_instances << "\noracle_max_n=" << oracle_max_n
     << "\nalpha=" << format_double(alpha) << "\n";
  return os.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string ExperimentConfig::hash() const { return fnv1a_hex(canonical()); }

void ExperimentConfig::apply_key(const std::string& key, const std::string& value) {
  if (key == "experiment") experiment = value;
  else if (key == "arrival") arrival = value;
  else if (key == "service") service = value;
  else if (key == "n_values") n_values = parse_ll_list(value);
  else if (key == "replications") replications = std::stoi(value);
  else if (key == "seed") seed = std::stoull(value);
  else if (key == "scaled_horizon") scaled_horizon = std::stod(value);
  else if (key == "eval_times") eval_times = parse_double_list(value);
  else if (key == "grid_step") grid_step = std::stod(value);
  else if (key == "output_dir") output_dir = value;
  else if (key == "ks_thresholds") ks_thresholds = parse_double_list(value);
  else if (key == "cov_tolerance") cov_tolerance = std::stod(value);
  else if (key == "variance_band_lo") variance_band_lo = std::stod(value);
  else if (key == "variance_band_hi") variance_band_hi = std::stod(value);
  else if (key == "control_band_lo") control_band_lo = std::stod(value);
  else if (key == "control_band_hi") control_band_hi = std::stod(value);
  else if (key == "lln_threshold") lln_threshold = std::stod(value);
  else if (key == "littles_threshold") littles_threshold = std::stod(value);
  else if (key == "equivalence_ks_threshold") equivalence_ks_threshold = std::stod(value);
  else if (key == "sigma_inflation") sigma_inflation = std::stod(value);
  else if (key == "identity_tol") identity_tol = std::stod(value);
  else if (key == "oracle_instances") oracle_instances = std::stoi(value);
  else if (key == "oracle_max_n") oracle_max_n = std::stoi(value);
  else if (key == "alpha") alpha = std::stod(value);
  else throw std::invalid_argument("unknown config key: " + key);
}

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  ExperimentConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected key = value");
    cfg.apply_key(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return cfg;
}

bool ExperimentReport::overall_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

void ExperimentReport::add(std::string statistic, long long n, double t, double value,
                           double threshold, bool pass) {
  rows.push_back(ReportRow{std::move(statistic), n, t, value, threshold, pass});
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream os;
  os << "experiment,n,t,statistic,value,threshold,pass\n";
  for (const auto& r : rows) {
    os << experiment << ',' << r.n << ',' << format_double(r.t) << ',' << r.statistic << ','
       << format_double(r.value) << ',' << format_double(r.threshold) << ','
       << (r.pass ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["experiment"] = experiment;
  j["config_hash"] = config_hash;
  j["seed"] = std::to_string(seed);
  j["overall_pass"] = overall_pass();
  auto rows_json = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["statistic"] = r.statistic;
    row["n"] = r.n;
    row["t"] = format_double(r.t);
    row["value"] = format_double(r.value);
    row["threshold"] = format_double(r.threshold);
    row["pass"] = r.pass;
    rows_json.push_back(row);
  }
  j["rows"] = rows_json;
  return j.dump(2) + "\n";
}

void ExperimentReport::write(const std::string& dir) const {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  {
    std::ofstream csv(fs::path(dir) / (experiment + ".csv"), std::ios::binary);
    csv << to_csv();
  }
  {
    std::ofstream js(fs::path(dir) / (experiment + "_summary.json"), std::ios::binary);
    js << to_json();
  }
  {
    // timing is intentionally outside the deterministic summary
    std::ofstream tm(fs::path(dir) / (experiment + "_timing.json"), std::ios::binary);
    tm << "{\n  \"wall_seconds\": " << format_double(wall_seconds) << "\n}\n";
  }
}

void ExperimentReport::print(std::ostream& out) const {
  out << "experiment: " << experiment << "  (config " << config_hash << ", seed " << seed << ")\n";
  for (const auto& r : rows) {
    char buf[192];
    std::snprintf(buf, sizeof(buf), "  %-38s n=%-8lld t=%-6g value=%-14.6g thr=%-10.6g %s\n",
                  r.statistic.c_str(), r.n, r.t, r.value, r.threshold,
                  r.pass ? "pass" : "FAIL");
    out << buf;
  }
  out << (overall_pass() ? "ALL PASS" : "FAILURES PRESENT") << "  ("
      << format_double(wall_seconds) << " s)\n";
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  unsigned threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("TQLAB_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) threads = static_cast<unsigned>(v);
  }
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  threads = std::min<unsigned>(threads, static_cast<unsigned>(count));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mutex);
          if (!first_error) first_error = std::current_exception();
          failed.store(true);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace tqlab
