#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exq/json_io.hpp"

namespace exq {

struct SuiteConfig {
  std::uint64_t seed = 0;
  Caps caps;
  int gen_arrows = 10;                // generator size cap
  std::vector<std::string> suites;    // empty: all
  int instances = -1;                 // overrides every suite's default count when positive
  std::map<std::string, int> counts;  // per-suite overrides
  std::string format = "text";
};

const std::vector<std::string>& suite_names();
int default_instances(const std::string& suite);
std::optional<Error> check_config(const SuiteConfig& c);

enum class Verdict { Pass, Fail, Observed, Excluded };
const char* verdict_name(Verdict v);

struct CheckRecord {
  std::string check;
  std::string property;
  std::string digest;  // of the instance
  Verdict verdict = Verdict::Pass;
  json certificate;  // reproduction payload on failure
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRecord> records;  // stable-sorted by digest
  std::map<std::string, long> counts;
  long asserted() const;
  long passed() const;
  bool holds() const { return asserted() == passed(); }
};

struct Report {
  SuiteConfig config;
  std::vector<SuiteResult> suites;
  bool holds() const;
  long asserted() const;
  long passed() const;
};

SuiteResult run_named_suite(const std::string& name, const SuiteConfig& config);
// Throws InvalidConfig.
Report run_suite(const SuiteConfig& config);

json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace exq
