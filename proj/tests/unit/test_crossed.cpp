#include <doctest.h>

#include "exq/constructions.hpp"
#include "exq/crossed.hpp"
#include "exq/exact.hpp"
#include "exq/gen.hpp"

using namespace exq;

namespace {

Crossed ht(const Cat& c) { return make_crossed_ptr(horizontally_trivial(c)); }
Crossed sq(const Cat& c) { return make_crossed_ptr(sq_double(c)); }

bool discrete(const FinCategory& c) { return c.num_arrows() == c.num_objects(); }

bool iso(const Cat& a, const Cat& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace

TEST_CASE("standard crossed double categories") {
  for (auto& c : small_category_corpus(4)) {
    CHECK(!validate_crossed(horizontally_trivial(c)));
    CHECK(is_s0_compatible(horizontally_trivial(c)));
    auto s = sq_double(c);
    CHECK(!validate_crossed(s, false));
    CHECK(is_s0_compatible(s) == discrete(*c));
    CHECK(!validate_crossed(vertically_trivial(make_cat2(locally_discrete(c)))));
  }
  auto z2 = make_cat(cyclic_group_category(2));
  auto y = sq_double(z2);
  CHECK(!is_s0_compatible(y));
  CHECK(validate_crossed(y, true)->kind() == ErrorKind::LawViolation);
  for (int i = 0; i < 20; ++i) {
    Rng rng(instance_seed(121, i));
    auto x = random_crossed(rng, 8);
    CHECK(!validate_crossed(*x, false));
    CHECK(!validate_double(x->dbl));
  }
}

TEST_CASE("corners") {
  for (auto& c : small_category_corpus(4)) {
    auto k = corners(horizontally_trivial(c));
    CHECK(k.cnr->num_cells() == c->num_arrows());
    CHECK(k.cnr->num_two_cells() == k.cnr->num_cells());
    CHECK(k.strict);
  }

  Rng rng(3);
  for (int i = 0; i < 10; ++i) {
    auto c = random_category(rng, 8);
    auto leq = compatible_preorder(*c, {});
    if (c->num_arrows() > 0) {
      const int f = rng.uniform(0, c->num_arrows() - 1);
      auto h = c->hom(c->src(f), c->tgt(f));
      leq = compatible_preorder(*c, {{f, h[rng.uniform(0, (int)h.size() - 1)]}});
    }
    auto h2 = make_cat2(locally_posetal(c, leq));
    auto k = corners(vertically_trivial(h2));
    CHECK(k.cnr->num_cells() == h2->num_cells());
    CHECK(k.cnr->num_two_cells() == h2->num_two_cells());
  }

  auto w = make_cat(walking_arrow());
  auto k = corners(sq_double(w));
  CHECK(!check_2category(*k.cnr, k.strict));
  auto p = pi0_star(*k.cnr);
  CHECK(iso(p.cat, w));
}

TEST_CASE("codescent examples") {
  for (auto& c : small_category_corpus(4)) {
    auto h = codescent(horizontally_trivial(c));
    CHECK(iso(h.cat(), c));
    CHECK(!cocone_error(horizontally_trivial(c).dbl, h.q0, h.q1));
    auto s = sq_double(c);
    auto d = codescent(s);
    CHECK(iso(d.cat(), c));
    CHECK(!cocone_error(s.dbl, d.q0, d.q1));
  }
  Rng rng(4);
  for (int i = 0; i < 10; ++i) {
    auto h2 = random_2category(rng, 3, 8);
    auto d = codescent(vertically_trivial(h2));
    CHECK(iso(d.cat(), pi0_star(*h2).cat));
  }
}

TEST_CASE("cocone equations and initiality") {
  auto vertices = small_category_corpus(4);
  int small = 0;
  for (int i = 0; i < 40; ++i) {
    Rng rng(instance_seed(122, i));
    auto x = random_crossed(rng, 6);
    auto d = codescent(*x);
    CHECK(!cocone_error(x->dbl, d.q0, d.q1));
    if (x->dbl.X0->num_objects() > 2 || x->dbl.X0->num_arrows() + x->dbl.X1->num_arrows() > 6) continue;
    auto r = check_codescent_initiality(*x, vertices);
    CHECK(r.bijection);
    CHECK(r.cocones == r.functors);
    ++small;
  }
  CHECK(small > 5);
}

TEST_CASE("codescent is functorial") {
  Rng rng(5);
  int n = 0;
  for (int i = 0; i < 40; ++i) {
    auto a = random_category(rng, 6), b = random_category(rng, 6);
    auto u = random_functor(rng, a, b);
    if (!u) continue;
    std::vector<CrossedDblFunctor> fs = {ht_functor(*u, ht(a), ht(b)), sq_functor(*u, sq(a), sq(b))};
    auto x = random_crossed(rng, 6);
    fs.push_back(identity_crossed_functor(x));
    auto pr = product_crossed(x, ht(a));
    fs.push_back(pr.pi1);
    fs.push_back(pr.pi2);
    for (auto& f : fs) {
      REQUIRE(!check_crossed_functor(f));
      auto s = codescent(*f.source), t = codescent(*f.target);
      auto cf = codescent(f, s, t);
      CHECK(!check_functor(cf));
      CHECK(compose(cf, s.q0) == compose(t.q0, f.f0));
      ++n;
    }
  }
  CHECK(n > 50);
}

TEST_CASE("discrete fibrations of crossed double categories") {
  auto w = make_cat(walking_arrow());
  auto x = sq(w);
  CHECK(is_discrete_fibration_dbl(identity_crossed_functor(x)));
  Rng rng(6);
  for (int i = 0; i < 10; ++i) {
    auto y = random_crossed(rng, 6);
    auto pr = product_crossed(y, ht(random_category(rng, 5)));
    CHECK(is_discrete_fibration_dbl(pr.pi1));
  }
  auto par = make_cat(free_category(2, {{0, 1}, {0, 1}}));
  FinFunctor collapse{par, w, {0, 1}, {}};
  for (int f = 0; f < par->num_arrows(); ++f) collapse.arr.push_back(par->is_identity(f) ? w->id(par->src(f)) : w->hom(0, 1)[0]);
  REQUIRE(!check_functor(collapse));
  auto cf = sq_functor(collapse, sq(par), x);
  REQUIRE(!check_crossed_functor(cf));
  CHECK(!is_discrete_fibration_dbl(cf));
}

TEST_CASE("objectwise opfibrations") {
  auto w = make_cat(walking_arrow());
  auto t = make_cat(terminal_category());
  CHECK(is_objectwise_opfibration(identity_crossed_functor(sq(w))));
  auto pr = product_crossed(ht(w), ht(make_cat(chain_category(3))));
  CHECK(is_objectwise_opfibration(pr.pi1));
  CHECK(!is_objectwise_opfibration(ht_functor(constant_functor(t, w, 0), ht(t), ht(w))));
}

TEST_CASE("componentwise pullbacks") {
  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    auto x = random_crossed(rng, 6);
    auto id = identity_crossed_functor(x);
    auto p = pullback_crossed(id, id);
    CHECK(iso(p.P->dbl.X0, x->dbl.X0));
    CHECK(iso(p.P->dbl.X1, x->dbl.X1));
    CHECK(!validate_crossed(*p.P, false));
  }
  for (int i = 0; i < 20; ++i) {
    auto a = random_category(rng, 6), b = random_category(rng, 6), c = random_category(rng, 6);
    auto f = random_functor(rng, a, c), g = random_functor(rng, b, c);
    if (!f || !g) continue;
    auto C = ht(c);
    auto p = pullback_crossed(ht_functor(*f, ht(a), C), ht_functor(*g, ht(b), C));
    CHECK(iso(p.P->dbl.X0, pullback(*f, *g).apex));
  }
  auto w = make_cat(walking_arrow());
  auto d = make_cat(discrete_category(2));
  CHECK_THROWS_AS(pullback_crossed(identity_crossed_functor(ht(w)), identity_crossed_functor(ht(d))), Error);
}

TEST_CASE("hard exactness harness") {
  auto x = ht(make_cat(cyclic_group_category(2)));
  HarnessInstance id{identity_crossed_functor(x), identity_crossed_functor(x), "identity"};
  auto row = evaluate_harness_instance(id);
  CHECK(row.discrete_fibration);
  CHECK(row.objectwise_opfibration);
  CHECK(row.asserted);
  CHECK(row.exact);

  for (int i = 0; i < 20; ++i) {
    Rng rng(instance_seed(123, i));
    auto inst = random_harness_instance(rng, true);
    auto r = evaluate_harness_instance(inst);
    if (r.note.empty()) {
      auto p = pullback_crossed(inst.f, inst.g);
      CHECK(!validate_crossed(*p.P, false));
    }
    if (r.asserted) CHECK(r.exact);
  }

  auto rep = hard_exactness_harness(3, 20);
  CHECK(rep.asserted == 20);
  CHECK(rep.holds());
  CHECK(rep.excluded > 0);
  for (auto& r : rep.rows)
    if (!r.asserted) CHECK(!(r.discrete_fibration && r.objectwise_opfibration && r.strict));
}
