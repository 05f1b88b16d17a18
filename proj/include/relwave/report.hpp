#pragma once

// Suite orchestration: named verification checks with seeded randomness,
// machine-readable reports, and the grid-evolution runner behind the CLI.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace relwave {

inline constexpr const char* kToolVersion = "relwave 1.0.0";

struct Check {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  // "le": pass iff residual <= tolerance; "ge" marks negative controls that
  // must detect a deliberately broken input.
  std::string direction = "le";
  bool pass = false;
  bool skipped = false;
  std::string note;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<Check> checks;
  bool overall_pass = false;
  std::string tool_version = kToolVersion;
};

// Flat key=value configuration; '#' starts a comment line.
class Config {
 public:
  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::string get(const std::string& key, const std::string& def) const;
  double get_double(const std::string& key, double def) const;
  int get_int(const std::string& key, int def) const;
  // "seed" key, else RELWAVE_SEED from the environment, else 12345.
  std::uint64_t seed() const;

 private:
  std::map<std::string, std::string> values_;
};

Config load_config_file(const std::string& path);

const std::vector<std::string>& suite_names();  // algebra..evolve, all
bool is_suite_name(const std::string& name);

// Runs the named suite's checks. Throws std::invalid_argument on an unknown
// name; individual check failures are reported, not thrown.
SuiteReport run_suite(const std::string& name, const Config& cfg);

std::string report_to_json(const SuiteReport& r);

// Builds seeded lattice initial data for the configured kind, evolves it to
// time.t, writes the dump, and optionally appends commuting-diagram checks.
// Returns 0 on success, 1 on check failure, 3 on I/O failure.
int run_evolution(const Config& cfg, const std::string& out_path, SuiteReport* report_out);

}  // namespace relwave
