#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "exq/report.hpp"

using namespace exq;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Criterion {
  int id;
  std::string suite;
  long min_asserted;
  double limit_s;
  std::vector<std::string> required;  // checks that must appear and pass
  std::map<std::string, long> min_counts;
};

long passed_of(const SuiteResult& s, const std::string& check, long* seen) {
  long n = 0;
  *seen = 0;
  for (const auto& r : s.records)
    if (r.check == check) {
      ++*seen;
      n += r.verdict == Verdict::Pass;
    }
  return n;
}

}  // namespace

int main() {
  const std::vector<Criterion> crit = {
      {1, "five-way", 500, 120, {"agreement"}, {}},
      {2, "comma-exactness", 200, 30, {"exact"}, {}},
      {3, "pullback-exactness", 200, 60, {"pullback", "counterexample"}, {}},
      {4, "coend-pi0", 200, 60, {"bijection"}, {}},
      {5, "kan-products", 100, 120, {"lan-preserves-products"}, {}},
      {6, "monoidal", 50, 180, {"agrees-with-oracle", "unit-counterexample", "cartesian"}, {}},
      {7, "symmetric", 30, 180, {"pi0-agreement"}, {}},
      {8, "lax-coend", 100, 180, {"oracle", "universal-lax-wedge"}, {{"wedge_instances", 10}}},
      {9, "codescent", 1, 120, {"sq-recovers-C", "initiality"}, {}},
      {10, "hard-exactness", 100, 300, {"codescent-exact"}, {}},
      {11, "pi0-exactness", 200, 60, {"agreement"}, {}},
  };

  int failed = 0;
  for (const auto& c : crit) {
    SuiteConfig cfg;
    cfg.seed = kSeed;
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = run_named_suite(c.suite, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool ok = s.holds() && s.asserted() >= c.min_asserted && secs < c.limit_s;
    std::string detail;
    for (const auto& name : c.required) {
      long seen = 0;
      const long p = passed_of(s, name, &seen);
      ok = ok && seen > 0 && p == seen;
      detail += " " + name + "=" + std::to_string(p) + "/" + std::to_string(seen);
    }
    for (const auto& [k, v] : c.min_counts) {
      const auto it = s.counts.find(k);
      const long got = it == s.counts.end() ? 0 : it->second;
      ok = ok && got >= v;
      detail += " " + k + "=" + std::to_string(got);
    }
    if (c.id == 1) {
      const auto it = s.counts.find("size_capped_family_misses");
      detail += " size_capped_family_misses=" + std::to_string(it == s.counts.end() ? 0 : it->second);
    }
    if (c.id == 10) {
      long excl = 0;
      for (const auto& r : s.records) excl += r.verdict == Verdict::Excluded || r.verdict == Verdict::Observed;
      detail += " not_asserted=" + std::to_string(excl);
    }
    std::printf("%s criterion %d %s: %ld/%ld asserted (min %ld), %.2fs (limit %.0fs);%s\n", ok ? "PASS" : "FAIL", c.id,
                c.suite.c_str(), s.passed(), s.asserted(), c.min_asserted, secs, c.limit_s, detail.c_str());
    std::fflush(stdout);
    failed += !ok;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(crit.size()) - failed, crit.size());
  return failed == 0 ? 0 : 1;
}
