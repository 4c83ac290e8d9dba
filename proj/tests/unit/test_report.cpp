#include <doctest.h>

#include <omp.h>

#include "exq/report.hpp"

using namespace exq;

namespace {

SuiteConfig small_config(std::uint64_t seed) {
  SuiteConfig c;
  c.seed = seed;
  c.instances = 3;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  CHECK(!check_config(SuiteConfig{}));
  CHECK(suite_names().size() == 11);
  for (auto& n : suite_names()) CHECK(default_instances(n) > 0);

  auto c = small_config(0);
  c.suites = {"five-way", "no-such-suite"};
  CHECK(check_config(c)->kind() == ErrorKind::InvalidConfig);
  CHECK_THROWS_AS(run_suite(c), Error);
  c = small_config(0);
  c.gen_arrows = 0;
  CHECK(check_config(c));
  c = small_config(0);
  c.caps.max_arrows = 0;
  CHECK(check_config(c));
  c = small_config(0);
  c.format = "yaml";
  CHECK(check_config(c));
  c = small_config(0);
  c.counts["comma-exactness"] = -4;
  CHECK(check_config(c));
}

TEST_CASE("every suite passes on a minimal run") {
  auto r = run_suite(small_config(0));
  CHECK(r.suites.size() == 11);
  CHECK(r.holds());
  CHECK(r.asserted() > 0);
  for (auto& s : r.suites) {
    CHECK(s.asserted() > 0);
    CHECK(s.holds());
    for (std::size_t i = 1; i < s.records.size(); ++i) CHECK(s.records[i - 1].digest <= s.records[i].digest);
  }
  auto text = to_text(r);
  CHECK(text.find("five-way") != std::string::npos);
}

TEST_CASE("comma exactness at the default count") {
  SuiteConfig c;
  c.seed = 1;
  auto s = run_named_suite("comma-exactness", c);
  CHECK(s.asserted() == 200);
  CHECK(s.passed() == 200);
}

TEST_CASE("reports are deterministic") {
  auto c = small_config(5);
  c.suites = {"five-way", "coend-pi0", "lax-coend", "hard-exactness"};
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  auto a = to_json(run_suite(c)).dump();
  omp_set_num_threads(3);
  auto b = to_json(run_suite(c)).dump();
  omp_set_num_threads(threads);
  auto d = to_json(run_suite(c)).dump();
  CHECK(a == b);
  CHECK(a == d);

  auto other = c;
  other.seed = 6;
  CHECK(to_json(run_suite(other)).dump() != a);
}
