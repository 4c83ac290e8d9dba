#include <doctest.h>

#include "exq/constructions.hpp"
#include "exq/crossed.hpp"
#include "exq/exact.hpp"
#include "exq/gen.hpp"
#include "exq/twocat.hpp"
#include "oracle.hpp"

using namespace exq;

namespace {

Fin2Functor compose2(const Fin2Functor& g, const Fin2Functor& f) {
  Fin2Functor r{f.source, g.target, {}, {}, {}};
  for (int x : f.obj) r.obj.push_back(g.obj[x]);
  for (int c : f.one) r.one.push_back(g.one[c]);
  for (int t : f.two) r.two.push_back(g.two[t]);
  return r;
}

// u on 1-cells between locally posetal 2-categories whose preorders u preserves.
Fin2Functor posetal_functor(const FinFunctor& u, const Cat2& x, const Cat2& y) {
  Fin2Functor r{x, y, u.obj, u.arr, {}};
  const auto& T = *y->two();
  for (int t = 0; t < x->num_two_cells(); ++t) {
    auto h = T.hom(u.arr[x->cell_src(t)], u.arr[x->cell_tgt(t)]);
    REQUIRE(h.size() == 1);
    r.two.push_back(h[0]);
  }
  return r;
}

std::vector<std::pair<int, int>> random_parallel_pairs(Rng& rng, const FinCategory& c, int n) {
  std::vector<std::pair<int, int>> r;
  for (int i = 0; i < n && c.num_arrows() > 0; ++i) {
    const int f = rng.uniform(0, c.num_arrows() - 1);
    auto h = c.hom(c.src(f), c.tgt(f));
    r.push_back({f, h[rng.uniform(0, (int)h.size() - 1)]});
  }
  return r;
}

// Set coend of S: C^op -> Set and T: C -> Set by direct quotient.
int set_coend(const FinCategory& c, const SetFunctor& s, const SetFunctor& t) {
  std::vector<int> base;
  int n = 0;
  for (int x = 0; x < c.num_objects(); ++x) base.push_back(n), n += s.size[x] * t.size[x];
  std::vector<std::pair<int, int>> e;
  for (int f = 0; f < c.num_arrows(); ++f) {
    const int x = c.src(f), x2 = c.tgt(f);
    for (int s2 = 0; s2 < s.size[x2]; ++s2)
      for (int t1 = 0; t1 < t.size[x]; ++t1)
        e.push_back({base[x] + s.map[f][s2] * t.size[x] + t1, base[x2] + s2 * t.size[x2] + t.map[f][t1]});
  }
  return oracle::components(n, e);
}

LaxSquare2 identity_square2(const Cat2& x) {
  auto id = identity_2functor(x);
  std::vector<int> phi;
  for (int o = 0; o < x->num_objects(); ++o) phi.push_back(x->one()->id(o));
  return LaxSquare2{x, x, x, x, id, id, id, id, phi};
}

}  // namespace

TEST_CASE("2-categories") {
  Rng rng(1);
  for (int i = 0; i < 20; ++i) {
    auto c = random_category(rng, 10);
    CHECK(!check_2category(locally_discrete(c)));
    auto leq = compatible_preorder(*c, random_parallel_pairs(rng, *c, 2));
    CHECK(!check_2category(locally_posetal(c, leq)));
    auto r = random_2category(rng, 4, 10);
    CHECK(!check_2category(*r));
    auto h = hom_category(*r, 0, 0);
    CHECK(!check_category_laws(*h.cat));
  }
}

TEST_CASE("pi0 star examples") {
  auto c = make_cat(chain_category(3));
  auto ld = locally_discrete(c);
  auto p = pi0_star(ld);
  CHECK(p.cat->num_arrows() == c->num_arrows());
  CHECK(find_isomorphism(p.cat, c).has_value());
  CHECK(obj_star(ld)->num_arrows() == c->num_arrows());

  auto par = make_cat(free_category(2, {{0, 1}, {0, 1}}));
  std::vector<int> edges;
  for (int f = 0; f < par->num_arrows(); ++f)
    if (!par->is_identity(f)) edges.push_back(f);
  REQUIRE(edges.size() == 2);
  auto x = locally_posetal(par, compatible_preorder(*par, {{edges[0], edges[1]}}));
  CHECK(x.num_two_cells() == 5);
  auto px = pi0_star(x);
  CHECK(px.cat->num_arrows() == 3);
  CHECK(px.cls[edges[0]] == px.cls[edges[1]]);
  auto cmp = pi0_comparison(x, px);
  CHECK(cmp.obj == std::vector<int>{0, 1});
  CHECK(inverted_by_pi0(cmp));
}

TEST_CASE("comparison to pi0 star is pi0-inverted") {
  for (int i = 0; i < 40; ++i) {
    Rng rng(instance_seed(111, i));
    auto x = random_2category(rng, 4, 12);
    auto p = pi0_star(*x);
    auto cmp = pi0_comparison(*x, p);
    CHECK(!check_functor(cmp));
    for (int o = 0; o < x->num_objects(); ++o) CHECK(cmp.obj[o] == o);
    CHECK(inverted_by_pi0(cmp));
    CHECK(pi0(*p.cat).count == pi0(*x->one()).count);
  }
}

TEST_CASE("pi0 star preserves composition") {
  int n = 0;
  for (int i = 0; i < 200 && n < 40; ++i) {
    Rng rng(instance_seed(112, i));
    auto c = random_category(rng, 8), d = random_category(rng, 8);
    auto u = random_functor(rng, c, d);
    if (!u) continue;
    auto pairs1 = random_parallel_pairs(rng, *c, 2);
    auto pairs2 = pairs1;
    for (auto pr : random_parallel_pairs(rng, *c, 1)) pairs2.push_back(pr);
    std::vector<std::pair<int, int>> pairs3;
    for (auto [f, g] : pairs2) pairs3.push_back({u->arr[f], u->arr[g]});
    for (auto pr : random_parallel_pairs(rng, *d, 1)) pairs3.push_back(pr);
    auto X = make_cat2(locally_posetal(c, compatible_preorder(*c, pairs1)));
    auto Y = make_cat2(locally_posetal(c, compatible_preorder(*c, pairs2)));
    auto Z = make_cat2(locally_posetal(d, compatible_preorder(*d, pairs3)));
    auto F = posetal_functor(identity_functor(c), X, Y);
    auto G = posetal_functor(*u, Y, Z);
    REQUIRE(!check_2functor(F));
    REQUIRE(!check_2functor(G));
    auto px = pi0_star(*X), py = pi0_star(*Y), pz = pi0_star(*Z);
    auto lhs = pi0_star(compose2(G, F), px, pz);
    auto rhs = compose(pi0_star(G, py, pz), pi0_star(F, px, py));
    CHECK(lhs.obj == rhs.obj);
    CHECK(lhs.arr == rhs.arr);
    ++n;
  }
  CHECK(n >= 20);
}

TEST_CASE("C functor on locally discrete squares") {
  for (int i = 0; i < 60; ++i) {
    Rng rng(instance_seed(113, i));
    auto sq = random_square(rng, 10);
    auto s2 = d_star(sq);
    CHECK(!check_square2(s2));
    for (int a = 0; a < sq.A->num_objects(); ++a)
      for (int b = 0; b < sq.B->num_objects(); ++b) {
        auto cf = c_functor(s2, a, b);
        std::size_t n = 0;
        for (int x = 0; x < sq.P->num_objects(); ++x)
          n += sq.B->hom(sq.q.obj[x], b).size() * sq.A->hom(a, sq.p.obj[x]).size();
        CHECK(cf.objects.size() == n);
        CHECK(pi0(*cf.F).count == oracle::coend_classes(sq, a, b));
        CHECK(!check_functor(cf.functor));
      }
    CHECK(is_pi0_exact(s2).exact == is_exact(sq).exact);
  }

  auto w = make_cat(walking_arrow());
  auto e = make_cat(empty_category());
  auto t = make_cat(terminal_category());
  auto sq = commuting_square(FinFunctor{e, t, {}, {}}, FinFunctor{e, w, {}, {}}, constant_functor(t, w, 0),
                             identity_functor(w));
  auto s2 = d_star(sq);
  CHECK(c_functor(s2, 0, 0).F->num_objects() == 0);
  CHECK(!is_pi0_exact(s2).exact);
}

TEST_CASE("pi0-exactness examples") {
  CHECK(is_pi0_exact(d_star(pullback_counterexample())).exact == false);
  for (int i = 0; i < 10; ++i) {
    Rng rng(instance_seed(114, i));
    CHECK(is_pi0_exact(d_star(random_comma_square(rng, 10))).exact);
    auto x = random_2category(rng, 4, 10);
    CHECK(is_pi0_exact(identity_square2(x)).exact);
  }
  for (int i = 0; i < 15; ++i) {
    Rng rng(instance_seed(115, i));
    auto sq = random_square(rng, 8);
    CHECK(is_pi0_exact(d_star(sq)).exact == oracle::exact(sq));
  }
}

TEST_CASE("pullbacks along opfibrations are pi0-exact") {
  int n = 0;
  for (int i = 0; i < 300 && n < 20; ++i) {
    Rng rng(instance_seed(116, i));
    auto a = random_category(rng, 8), b = random_category(rng, 6), c = random_category(rng, 6);
    auto f = random_functor(rng, a, c), g = random_functor(rng, b, c);
    if (!f || !g || !is_opfibration(*f)) continue;
    auto s2 = d_star(pullback_square(*f, *g));
    CHECK(is_pi0_exact(s2).exact);
    ++n;
  }
  CHECK(n >= 10);
}

TEST_CASE("lax coends") {
  auto t2 = make_cat2(locally_discrete(make_cat(terminal_category())));
  auto k = make_cat(walking_arrow()), l = make_cat(chain_category(3));
  auto S = constant_cat2functor(t2, true, k), T = constant_cat2functor(t2, false, l);
  CHECK(!check_cat2functor(S));
  auto lc = lax_coend(S, T);
  CHECK(find_isomorphism(lc, product(k, l).cat).has_value());
  auto orc = pi0_coend_oracle(S, T);
  CHECK(orc.oracle_classes == 1);
  CHECK(orc.bijection);

  auto d2 = make_cat(discrete_category(2));
  auto o2 = pi0_coend_oracle(constant_cat2functor(t2, true, d2), constant_cat2functor(t2, false, make_cat(discrete_category(3))));
  CHECK(o2.oracle_classes == 6);
  CHECK(o2.components == 6);

  auto e2 = make_cat2(locally_discrete(make_cat(empty_category())));
  CHECK(lax_coend(constant_cat2functor(e2, true, k), constant_cat2functor(e2, false, l))->num_objects() == 0);
}

TEST_CASE("discrete-valued lax coends recover the set coend") {
  for (int i = 0; i < 40; ++i) {
    Rng rng(instance_seed(117, i));
    auto c = random_category(rng, 8);
    auto P = make_cat2(locally_discrete(c));
    auto pc = pi0_star(*P).cat;
    auto hs = random_set_functor(rng, make_cat(opposite(*pc)), 2);
    auto ht = random_set_functor(rng, pc, 2);
    auto S = discrete_cat2functor(P, true, hs), T = discrete_cat2functor(P, false, ht);
    CHECK(!check_cat2functor(S));
    CHECK(!check_cat2functor(T));
    const int expect = set_coend(*c, hs, ht);
    CHECK(pi0(*lax_coend(S, T)).count == expect);
    auto o = pi0_coend_oracle(S, T);
    CHECK(o.oracle_classes == expect);
    CHECK(o.bijection);
  }
}

TEST_CASE("random lax coends") {
  for (int i = 0; i < 30; ++i) {
    Rng rng(instance_seed(118, i));
    auto P = random_2category(rng, 3, 8);
    auto S = random_cat2functor(rng, P, true), T = random_cat2functor(rng, P, false);
    CHECK(!check_cat2functor(S));
    CHECK(!check_cat2functor(T));
    auto o = pi0_coend_oracle(S, T);
    CHECK(o.bijection);
    CHECK(o.oracle_classes == o.components);
  }
}

TEST_CASE("universal lax wedge") {
  auto corpus = small_category_corpus(3);
  auto t2 = make_cat2(locally_discrete(make_cat(terminal_category())));
  auto k = make_cat(walking_arrow()), l = make_cat(discrete_category(2));
  auto r = check_universal_lax_wedge(constant_cat2functor(t2, true, k), constant_cat2functor(t2, false, l), corpus);
  CHECK(r.axioms_hold);
  CHECK(r.factorization_holds);
  CHECK(r.wedges == r.factorizations);

  auto w2 = make_cat2(locally_discrete(make_cat(walking_arrow())));
  Rng rng(9);
  for (int i = 0; i < 3; ++i) {
    auto S = random_cat2functor(rng, w2, true), T = random_cat2functor(rng, w2, false);
    auto rw = check_universal_lax_wedge(S, T, corpus);
    CHECK(rw.axioms_hold);
    CHECK(rw.factorization_holds);
    CHECK(rw.vertices == (long)corpus.size());
  }
}
