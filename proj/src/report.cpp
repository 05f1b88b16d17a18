#include "relwave/report.hpp"

#include "relwave/evolve.hpp"
#include "relwave/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace relwave {

std::string Config::get(const std::string& key, const std::string& def) const {
  const auto it = values_.find(key);
  return it == values_.end() ? def : it->second;
}

double Config::get_double(const std::string& key, double def) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return def;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw std::runtime_error("config: value of '" + key + "' is not a number: " + it->second);
  }
}

int Config::get_int(const std::string& key, int def) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return def;
  try {
    return std::stoi(it->second);
  } catch (const std::exception&) {
    throw std::runtime_error("config: value of '" + key + "' is not an integer: " + it->second);
  }
}

std::uint64_t Config::seed() const {
  const auto it = values_.find("seed");
  if (it != values_.end()) return std::stoull(it->second);
  if (const char* env = std::getenv("RELWAVE_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::runtime_error("RELWAVE_SEED is not an integer");
    }
  }
  return 12345;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  Config cfg;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: expected key=value, got: " + line);
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t\r");
      return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "modes",  "solutions",
                                                 "transforms", "evolve", "all"};
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string report_to_json(const SuiteReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["tolerance"] = r.tolerance;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["max_residual"] = c.max_residual;
    jc["tolerance"] = c.tolerance;
    jc["direction"] = c.direction;
    jc["pass"] = c.pass;
    jc["skipped"] = c.skipped;
    jc["note"] = c.note;
    j["checks"].push_back(jc);
  }
  j["overall_pass"] = r.overall_pass;
  j["tool_version"] = r.tool_version;
  return j.dump(2) + "\n";
}

}  // namespace relwave
