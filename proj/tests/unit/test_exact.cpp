#include <doctest.h>

#include "exq/constructions.hpp"
#include "exq/exact.hpp"
#include "exq/gen.hpp"
#include "oracle.hpp"

using namespace exq;

namespace {

Cat terminal() { return make_cat(terminal_category()); }

std::vector<LaxSquare> random_squares(std::uint64_t seed, int n, int arrows) {
  std::vector<LaxSquare> v;
  for (int i = 0; i < n; ++i) {
    Rng rng(instance_seed(seed, i));
    v.push_back(random_square(rng, arrows));
  }
  return v;
}

}  // namespace

TEST_CASE("fact categories") {
  auto c = make_cat(chain_category(3));
  auto sq = identity_square(c);
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      const int g = c->hom(a, b)[0];
      auto fc = fact_category(sq, a, g, b);
      CHECK(fc.objects.size() == (std::size_t)(b - a + 1));
      CHECK(pi0(*fc.cat).count == 1);
    }
  CHECK_THROWS_AS(fact_category(sq, 2, c->hom(0, 1)[0], 1), Error);

  auto e = make_cat(empty_category());
  auto w = make_cat(walking_arrow());
  auto t = terminal();
  FinFunctor none{e, w, {}, {}};
  auto empty_apex =
      commuting_square(FinFunctor{e, t, {}, {}}, none, constant_functor(t, w, 0), identity_functor(w));
  CHECK(fact_category(empty_apex, 0, w->id(0), 0).objects.empty());
  CHECK(!is_exact(empty_apex).exact);
}

TEST_CASE("exactness examples") {
  auto c = make_cat(chain_category(3));
  CHECK(is_exact(identity_square(c)).exact);
  Rng rng(2);
  for (int i = 0; i < 20; ++i) CHECK(is_exact(random_comma_square(rng, 12)).exact);

  auto cx = pullback_counterexample();
  auto r = is_exact(cx);
  REQUIRE(!r.exact);
  REQUIRE(r.witness);
  auto fc = fact_category(cx, r.witness->a, r.witness->gamma, r.witness->b);
  CHECK(pi0(*fc.cat).count == r.witness->components.count);
  CHECK(r.witness->components.count != 1);
  CHECK(oracle::fact_components(cx, r.witness->a, r.witness->gamma, r.witness->b) == r.witness->components.count);

  for (auto& sq : {identity_square(c), comma_square(constant_functor(terminal(), c, 0), identity_functor(c)), cx}) {
    auto m = all_methods(sq);
    CHECK(m.agree());
    CHECK(m.fact == is_exact(sq).exact);
  }
}

TEST_CASE("exactness agrees with the definition") {
  int exact = 0;
  for (auto& sq : random_squares(71, 300, 14)) {
    auto r = is_exact(sq);
    CHECK(r.exact == oracle::exact(sq));
    CHECK(is_exact_serial(sq).exact == r.exact);
    exact += r.exact;
    if (!r.exact) {
      REQUIRE(r.witness);
      CHECK(oracle::fact_components(sq, r.witness->a, r.witness->gamma, r.witness->b) != 1);
    }
    CHECK(is_exact(dual_square(sq)).exact == r.exact);
  }
  CHECK(exact > 30);
  CHECK(exact < 270);
}

TEST_CASE("witness is the least failing triple") {
  for (auto& sq : random_squares(72, 100, 10)) {
    auto r = is_exact(sq);
    if (r.exact) continue;
    const auto& w = *r.witness;
    for (int a = 0; a <= w.a; ++a)
      for (int b = 0; b < sq.B->num_objects(); ++b)
        for (int g : sq.C->hom(sq.f.obj[a], sq.g.obj[b])) {
          const bool before = a < w.a || (a == w.a && (b < w.b || (b == w.b && g < w.gamma)));
          if (before) CHECK(oracle::fact_components(sq, a, g, b) == 1);
        }
  }
}

TEST_CASE("decision methods agree") {
  int n = 0;
  for (auto& sq : random_squares(73, 80, 10)) {
    auto m = all_methods(sq);
    CHECK(m.agree());
    n += m.fact;
  }
  CHECK(n > 0);
}

TEST_CASE("profunctor method matches coends") {
  for (auto& sq : random_squares(74, 60, 10)) CHECK(is_exact_via_profunctor(sq) == oracle::exact(sq));
}

TEST_CASE("pullback suite") {
  auto cx = pullback_counterexample();
  CHECK(!is_exact(cx).exact);
  CHECK(!is_opfibration(cx.f));
  CHECK(!is_fibration(cx.g));
  auto rep = pullback_exactness_suite(5, 30);
  CHECK(rep.rows.size() == 30);
  CHECK(rep.holds());
  CHECK(rep.counterexample_non_exact);
  CHECK(rep.counterexample_legs_rejected);
  for (auto& row : rep.rows) {
    CHECK(row.exact);
    CHECK(row.iso_comma_exact);
  }
  auto a = pullback_row(123), b = pullback_row(123);
  CHECK(a.description == b.description);
  CHECK(a.transpose_exact == b.transpose_exact);
}

TEST_CASE("precomposing the apex with a functor that has a fully faithful adjoint") {
  auto c2 = make_cat(chain_category(2));
  int n = 0;
  for (auto& sq : random_squares(75, 120, 8)) {
    if (!is_exact(sq).exact || sq.P->num_arrows() > 8) continue;
    auto pr = product(sq.P, c2);
    auto adj = find_right_adjoint(pr.pi1);
    REQUIRE(adj);
    CHECK(is_full_and_faithful(adj->right));
    auto pre = precompose_apex(sq, pr.pi1);
    CHECK(!check_square(pre));
    CHECK(is_exact(pre).exact);
    CHECK(oracle::exact(pre));
    ++n;
  }
  CHECK(n > 10);
}
