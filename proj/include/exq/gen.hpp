#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "exq/square.hpp"

namespace exq {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng_); }  // inclusive
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
  std::uint64_t next() { return eng_(); }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[uniform(0, static_cast<int>(v.size()) - 1)]; }

 private:
  std::mt19937_64 eng_;
};

// Per-instance seed derived from the suite seed.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index + 0x9e3779b97f4a7c15ull));
}

std::vector<std::vector<bool>> random_order(Rng& rng, int n, double density = 0.4);
// Small lawful monoid tables with 0 as the unit.
std::vector<std::vector<std::vector<int>>> small_monoids();

Cat random_category(Rng& rng, int max_arrows);
// Uniform among the first `sample_limit` functors found; nullopt when there are none.
std::optional<FinFunctor> random_functor(Rng& rng, const Cat& a, const Cat& b, long sample_limit = 2000);
// Uniform among the first `sample_limit` set functors with values of size <= max_size.
SetFunctor random_set_functor(Rng& rng, const Cat& c, int max_size, long sample_limit = 500);
std::optional<NatTransform> random_nat(Rng& rng, const FinFunctor& from, const FinFunctor& to, long sample_limit = 500);

// A square with arbitrary legs and a random 2-cell, or one built from a comma, pullback, iso-comma
// or identity; every category has at most `max_arrows` arrows.
LaxSquare random_square(Rng& rng, int max_arrows);
LaxSquare random_comma_square(Rng& rng, int max_arrows);

}  // namespace exq
