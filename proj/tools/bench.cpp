#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include <omp.h>

#include "exq/exact.hpp"
#include "exq/gen.hpp"
#include "exq/report.hpp"

using namespace exq;

namespace {

template <class Fn>
double seconds(Fn fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 300;
  const int arrows = argc > 2 ? std::atoi(argv[2]) : 16;
  if (n <= 0 || arrows <= 0) {
    std::fprintf(stderr, "usage: exq_bench [squares > 0] [max arrows > 0]\n");
    return 2;
  }
  std::vector<LaxSquare> squares;
  for (int i = 0; i < n; ++i) {
    Rng rng(instance_seed(42, i));
    squares.push_back(random_square(rng, arrows));
  }
  std::vector<char> serial(n), parallel(n);
  const double ts = seconds([&] {
    for (int i = 0; i < n; ++i) serial[i] = is_exact_serial(squares[i]).exact;
  });
  const double tp = seconds([&] {
    for (int i = 0; i < n; ++i) parallel[i] = is_exact(squares[i]).exact;
  });
  int exact = 0, mismatch = 0;
  for (int i = 0; i < n; ++i) {
    exact += serial[i];
    mismatch += serial[i] != parallel[i];
  }
  std::printf("threads %d, %d squares, categories <= %d arrows, %d exact\n", omp_get_max_threads(), n, arrows, exact);
  std::printf("is_exact serial   %8.3f s\n", ts);
  std::printf("is_exact parallel %8.3f s\n", tp);
  std::printf("verdict mismatches %d\n", mismatch);

  SuiteConfig c;
  c.suites = {"five-way", "pi0-exactness"};
  c.instances = n;
  Report r;
  const double tsuite = seconds([&] { r = run_suite(c); });
  std::printf("suites five-way + pi0-exactness, %d instances each: %.3f s, %ld/%ld passed\n", n, tsuite, r.passed(),
              r.asserted());
  return mismatch == 0 && r.holds() ? 0 : 1;
}
