#include "exq/gen.hpp"

#include "exq/kan.hpp"

namespace exq {

std::vector<std::vector<bool>> random_order(Rng& rng, int n, double density) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    leq[i][i] = true;
    for (int j = i + 1; j < n; ++j) leq[i][j] = rng.coin(density);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return leq;
}

std::vector<std::vector<std::vector<int>>> small_monoids() {
  return {
      {{0, 1}, {1, 0}},                    // Z/2
      {{0, 1}, {1, 1}},                    // {1, z}, z idempotent
      {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},   // Z/3
      {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}},   // two left zeros
      {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}},   // chain 1 > a > 0 under min
      {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}},   // truncated N at 2
  };
}

namespace {

Cat small_category(Rng& rng) {
  switch (rng.uniform(0, 6)) {
    case 0: return make_cat(poset_category(random_order(rng, rng.uniform(1, 4))));
    case 1: {
      const int n = rng.uniform(1, 4);
      std::vector<std::pair<int, int>> edges;
      const int m = rng.uniform(0, 4);
      for (int e = 0; e < m && n > 1; ++e) {
        int i = rng.uniform(0, n - 2);
        edges.push_back({i, rng.uniform(i + 1, n - 1)});
      }
      return make_cat(free_category(n, edges));
    }
    case 2: return make_cat(monoid_category(rng.pick(small_monoids())));
    case 3: return make_cat(discrete_category(rng.uniform(1, 3)));
    case 4: return make_cat(walking_arrow());
    case 5: return make_cat(terminal_category());
    default: return make_cat(chain_category(rng.uniform(2, 3)));
  }
}

}  // namespace

Cat random_category(Rng& rng, int max_arrows) {
  for (;;) {
    Cat c;
    switch (rng.uniform(0, 5)) {
      case 0: c = product(small_category(rng), small_category(rng)).cat; break;
      case 1: c = coproduct(small_category(rng), small_category(rng)).cat; break;
      case 2: c = make_cat(opposite(*small_category(rng))); break;
      default: c = small_category(rng);
    }
    if (c->num_arrows() <= max_arrows) return c;
  }
}

std::optional<FinFunctor> random_functor(Rng& rng, const Cat& a, const Cat& b, long sample_limit) {
  std::optional<FinFunctor> chosen;
  long seen = 0;
  for_each_functor(a, b, [&](const FinFunctor& f) {
    ++seen;
    if (rng.uniform(1, static_cast<int>(seen)) == 1) chosen = f;
    return seen < sample_limit;
  });
  return chosen;
}

SetFunctor random_set_functor(Rng& rng, const Cat& c, int max_size, long sample_limit) {
  std::optional<SetFunctor> chosen;
  long seen = 0;
  for_each_set_functor(c, max_size, [&](const SetFunctor& h) {
    ++seen;
    if (rng.uniform(1, static_cast<int>(seen)) == 1) chosen = h;
    return seen < sample_limit;
  });
  return chosen ? *chosen : constant_set_functor(c, 1);
}

std::optional<NatTransform> random_nat(Rng& rng, const FinFunctor& from, const FinFunctor& to, long sample_limit) {
  std::optional<NatTransform> chosen;
  long seen = 0;
  for_each_nat(from, to, [&](const NatTransform& t) {
    ++seen;
    if (rng.uniform(1, static_cast<int>(seen)) == 1) chosen = t;
    return seen < sample_limit;
  });
  return chosen;
}

namespace {

bool fits(const LaxSquare& sq, int max_arrows) {
  for (const auto* c : {&sq.P, &sq.A, &sq.B, &sq.C})
    if ((*c)->num_arrows() > max_arrows) return false;
  return true;
}

std::optional<LaxSquare> arbitrary_square(Rng& rng, int max_arrows) {
  auto C = random_category(rng, max_arrows);
  auto A = random_category(rng, max_arrows);
  auto B = random_category(rng, max_arrows);
  auto P = random_category(rng, max_arrows);
  auto f = random_functor(rng, A, C);
  auto g = random_functor(rng, B, C);
  if (!f || !g) return std::nullopt;
  auto p = random_functor(rng, P, A);
  auto q = random_functor(rng, P, B);
  if (!p || !q) return std::nullopt;
  auto phi = random_nat(rng, compose(*f, *p), compose(*g, *q));
  if (!phi) return std::nullopt;
  return LaxSquare{P, A, B, C, *p, *q, *f, *g, *phi};
}

std::optional<LaxSquare> built_square(Rng& rng, int max_arrows) {
  auto C = random_category(rng, max_arrows);
  auto A = random_category(rng, max_arrows);
  auto B = random_category(rng, max_arrows);
  auto f = random_functor(rng, A, C);
  auto g = random_functor(rng, B, C);
  if (!f || !g) return std::nullopt;
  LaxSquare sq;
  switch (rng.uniform(0, 3)) {
    case 0: sq = comma_square(*f, *g); break;
    case 1: sq = pullback_square(*f, *g); break;
    case 2: sq = iso_comma_square(*f, *g); break;
    default: sq = identity_square(C);
  }
  if (rng.coin(0.3)) sq = dual_square(sq);
  return sq;
}

}  // namespace

LaxSquare random_square(Rng& rng, int max_arrows) {
  for (;;) {
    auto sq = rng.coin() ? arbitrary_square(rng, max_arrows) : built_square(rng, max_arrows);
    if (sq && fits(*sq, max_arrows)) return *sq;
  }
}

LaxSquare random_comma_square(Rng& rng, int max_arrows) {
  for (;;) {
    auto C = random_category(rng, max_arrows);
    auto A = random_category(rng, max_arrows);
    auto B = random_category(rng, max_arrows);
    auto f = random_functor(rng, A, C);
    auto g = random_functor(rng, B, C);
    if (!f || !g) continue;
    auto sq = comma_square(*f, *g);
    if (fits(sq, max_arrows)) return sq;
  }
}

}  // namespace exq
