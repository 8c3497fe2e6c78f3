#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ehftw/decomposer.hpp"

namespace ehftw {

struct SuiteConfig {
  std::uint64_t seed = 2024;
  int n_max = 14;                  // caps every generated graph; <= 6 runs the exhaustive criteria only
  std::vector<int> criteria;       // empty: all of 1..10
  int sampled_small = 200;         // criterion 1, n in {7, 8}
  int lean_graphs = 100;           // criteria 4 and 5
  int corpus_per_family = 15;      // criteria 6 to 9
  int random_corpus = 200;
  int dp_n_max = 12;               // criterion 9
  int menger_samples = 500;        // criterion 10, n <= 9
  Params params;
  std::vector<std::string> corpus_files;  // extra graph6 files, filtered into buckets
};

// Unknown keys, wrong types and missing corpus files throw ConfigError.
SuiteConfig suite_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SuiteConfig& c);

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string tolerance;
  bool passed = true;
  bool skipped = false;
  long cases = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::vector<CriterionResult> results;
  bool passed() const;
};

SuiteReport run_suite(const SuiteConfig& config,
                      const std::function<void(const CriterionResult&)>& on_result = {});
nlohmann::json to_json(const SuiteReport& r);
// One line per criterion: "criterion N PASS|FAIL|SKIP name (cases, seconds) detail".
std::string summary_line(const CriterionResult& r);

}  // namespace ehftw
