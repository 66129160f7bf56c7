#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "facetreg/homology.hpp"
#include "facetreg/monomial.hpp"

namespace facetreg {

struct SuiteConfig {
  std::uint64_t seed = 1;
  int jobs = 1;
  int s = 0;            // largest power; 0 picks the suite default
  int t = 0;            // path length where a suite takes one; 0 = suite default
  int count = 0;        // random instances; 0 = suite default
  int max_facets = 0;   // 0 = suite default
  std::size_t max_gens = kDefaultPowerCap;
  OracleLimits limits;
  FieldSpec field;
  bool timings = false;  // timings make reports differ run to run
};

struct InstanceResult {
  int id = 0;
  std::string descriptor;
  bool pass = true;
  bool error = false;  // resource cap or bad input, not a failed claim
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
  double seconds = 0;
};

struct SuiteResult {
  std::string name;
  std::vector<InstanceResult> instances;
  double seconds = 0;

  int failures() const;
  int errors() const;
  bool passed() const { return failures() == 0 && errors() == 0; }
  // 0 all pass, 1 some claim failed, 2 resource or input errors
  int exit_code() const;
};

std::vector<std::string> suite_names();
bool is_suite(const std::string& name);
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);

// Runs task(i) for i in [0, count) on `jobs` threads; results come back in
// index order whatever the completion order. Exceptions become error results.
std::vector<InstanceResult> run_instances(int count, int jobs, const std::function<InstanceResult(int)>& task);

nlohmann::json suite_json(const SuiteResult& r, const SuiteConfig& config);
std::string suite_tsv(const SuiteResult& r, const SuiteConfig& config);
nlohmann::json config_json(const SuiteConfig& config);

struct ConjectureScan {
  std::vector<InstanceResult> instances;  // data carries the slack table
  int findings = 0;
  int min_slack = 0;
  double seconds = 0;
};

// Seeded simplicial trees (connected forests). mode: "mixed" or "ip".
ConjectureScan run_conjecture_scan(const SuiteConfig& config, const std::string& mode);
nlohmann::json conjecture_json(const ConjectureScan& scan, const SuiteConfig& config, const std::string& mode);
std::string conjecture_tsv(const ConjectureScan& scan, const SuiteConfig& config, const std::string& mode);

// Fixture ideals in variables a..f.
MonomialIdeal terai_ideal();
std::vector<Monomial> sturmfels_generators();  // in the given order

}  // namespace facetreg
