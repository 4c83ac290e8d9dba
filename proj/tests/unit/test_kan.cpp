#include <doctest.h>

#include <algorithm>

#include "exq/constructions.hpp"
#include "exq/gen.hpp"
#include "exq/kan.hpp"
#include "oracle.hpp"

using namespace exq;

namespace {

std::vector<std::vector<bool>> chain_leq(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = i <= j;
  return leq;
}

}  // namespace

TEST_CASE("left Kan extension examples") {
  Rng rng(1);
  for (int i = 0; i < 30; ++i) {
    auto a = random_category(rng, 10);
    auto h = random_set_functor(rng, a, 3);
    auto r = left_kan(identity_functor(a), h);
    CHECK(r.extension.size == h.size);
    for (int x = 0; x < a->num_objects(); ++x) {
      auto u = r.unit[x];
      std::sort(u.begin(), u.end());
      for (int s = 0; s < (int)u.size(); ++s) CHECK(u[s] == s);
    }
  }

  auto t = make_cat(terminal_category());
  for (int i = 0; i < 20; ++i) {
    auto b = random_category(rng, 10);
    if (b->num_objects() == 0) continue;
    const int b0 = rng.uniform(0, b->num_objects() - 1), k = rng.uniform(0, 3);
    auto r = left_kan(constant_functor(t, b, b0), constant_set_functor(t, k));
    for (int y = 0; y < b->num_objects(); ++y) CHECK(r.extension.size[y] == (int)b->hom(b0, y).size() * k);
  }

  for (int i = 0; i < 20; ++i) {
    auto a = random_category(rng, 10);
    if (!is_connected(*a)) continue;
    const int k = rng.uniform(1, 3);
    auto r = left_kan(constant_functor(a, t, 0), constant_set_functor(a, k));
    CHECK(r.extension.size[0] == k);
  }
}

TEST_CASE("left Kan extensions match colimits over comma categories") {
  for (int i = 0; i < 150; ++i) {
    Rng rng(instance_seed(91, i));
    auto a = random_category(rng, 8), b = random_category(rng, 8);
    auto f = random_functor(rng, a, b);
    if (!f) continue;
    auto h = random_set_functor(rng, a, 2);
    auto r = left_kan(*f, h);
    CHECK(!check_set_functor(r.extension, Caps{.max_set_size = 1 << 20}));
    for (int y = 0; y < b->num_objects(); ++y) CHECK(r.extension.size[y] == oracle::lan_size(*f, h, y));
    for (int u = 0; u < a->num_arrows(); ++u) {
      const int x = a->src(u), x2 = a->tgt(u);
      for (int s = 0; s < h.size[x]; ++s)
        CHECK(r.extension.map[f->arr[u]][r.unit[x][s]] == r.unit[x2][h.map[u][s]]);
    }
  }
}

TEST_CASE("colimits are invariant under final functors") {
  auto t = make_cat(terminal_category());
  int n = 0;
  for (int i = 0; i < 400 && n < 40; ++i) {
    Rng rng(instance_seed(92, i));
    auto a0 = random_category(rng, 6), a = random_category(rng, 8);
    auto u = random_functor(rng, a0, a);
    if (!u || !is_final_functor(*u)) continue;
    auto h = random_set_functor(rng, a, 2);
    auto direct = left_kan(constant_functor(a, t, 0), h);
    auto restricted = left_kan(constant_functor(a0, t, 0), compose(h, *u));
    CHECK(direct.extension.size == restricted.extension.size);
    ++n;
  }
  CHECK(n >= 10);
}

TEST_CASE("Kan extension along an opfibration commutes with pullback") {
  int n = 0;
  for (int i = 0; i < 600 && n < 40; ++i) {
    Rng rng(instance_seed(93, i));
    auto e = random_category(rng, 8), b = random_category(rng, 6), b1 = random_category(rng, 6);
    auto p = random_functor(rng, e, b);
    auto k = random_functor(rng, b1, b);
    if (!p || !k || !is_opfibration(*p)) continue;
    auto pb = pullback(*p, *k);
    auto h = random_set_functor(rng, e, 2);
    auto lhs = left_kan(pb.proj_right, compose(h, pb.proj_left));
    auto rhs = left_kan(*p, h);
    for (int y = 0; y < b1->num_objects(); ++y) CHECK(lhs.extension.size[y] == rhs.extension.size[k->obj[y]]);
    ++n;
  }
  CHECK(n >= 15);
}

TEST_CASE("set functor enumeration") {
  auto w = make_cat(walking_arrow());
  long n = 0;
  for_each_set_functor(w, 2, [&](const SetFunctor&) { return ++n, true; });
  // sizes (0,0) 1, (0,1) 1, (0,2) 1, (1,0) 0, (1,1) 1, (1,2) 2, (2,0) 0, (2,1) 1, (2,2) 4
  CHECK(n == 11);
  CHECK_THROWS_AS(for_each_set_functor(w, 2, [](const SetFunctor&) { return true; }, 3), Error);

  auto rep = representable(w, 0);
  CHECK(rep.size == std::vector<int>{1, 1});
  CHECK(is_connected_set_functor(rep));
  CHECK(!is_connected_set_functor(constant_set_functor(w, 2)));
  CHECK(!is_connected_set_functor(constant_set_functor(w, 0)));
}

TEST_CASE("finite products") {
  auto ps = meet_semilattice(chain_leq(3));
  CHECK(!check_product_structure(ps));
  CHECK(ps.terminal == 2);
  CHECK(preserves_finite_products(constant_set_functor(ps.cat, 1), ps));
  CHECK(!preserves_finite_products(constant_set_functor(ps.cat, 2), ps));
  for (int a = 0; a < 3; ++a) CHECK(preserves_finite_products(representable(ps.cat, a), ps));

  auto other = make_cat(chain_category(3));
  CHECK_THROWS_AS(preserves_finite_products(constant_set_functor(other, 1), ps), Error);
  CHECK(find_product_structure(other).has_value());
  CHECK(!find_product_structure(make_cat(discrete_category(2))).has_value());

  auto id = identity_functor(ps.cat);
  CHECK(preserves_finite_products(id, ps, ps));
}

TEST_CASE("Lan preserves products on a small run") {
  auto rep = kan_product_suite(17, 15);
  CHECK(rep.rows.size() == 15);
  CHECK(rep.holds());
  for (auto& r : rep.rows) {
    CHECK(r.g_preserves);
    CHECK(r.lan_preserves);
  }
}
