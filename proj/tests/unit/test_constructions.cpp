#include <doctest.h>

#include "exq/constructions.hpp"
#include "exq/crossed.hpp"
#include "exq/gen.hpp"
#include "oracle.hpp"

using namespace exq;

namespace {

Cat terminal() { return make_cat(terminal_category()); }
Cat arrow() { return make_cat(walking_arrow()); }

// b↓u connected for every b, from the definition.
bool final_oracle(const FinFunctor& u) {
  const auto &A = *u.source, &B = *u.target;
  for (int b = 0; b < B.num_objects(); ++b) {
    std::vector<std::array<int, 2>> objs;
    for (int a = 0; a < A.num_objects(); ++a)
      for (int be : oracle::arrows_between(B, b, u.obj[a])) objs.push_back({a, be});
    if (objs.empty()) return false;
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < (int)objs.size(); ++i)
      for (int j = 0; j < (int)objs.size(); ++j)
        for (int al : oracle::arrows_between(A, objs[i][0], objs[j][0]))
          if (B.compose(u.arr[al], objs[i][1]) == objs[j][1]) e.push_back({i, j});
    if (oracle::components((int)objs.size(), e) != 1) return false;
  }
  return true;
}

FinFunctor op_functor(const FinFunctor& f) {
  auto s = make_cat(opposite(*f.source)), t = make_cat(opposite(*f.target));
  return opposite(f, s, t);
}

}  // namespace

TEST_CASE("comma examples") {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto c = random_category(rng, 10);
    if (c->num_objects() == 0) continue;
    const int x = rng.uniform(0, c->num_objects() - 1), y = rng.uniform(0, c->num_objects() - 1);
    auto r = comma(constant_functor(terminal(), c, x), constant_functor(terminal(), c, y));
    CHECK(r.apex->num_objects() == (int)c->hom(x, y).size());
    CHECK(r.apex->num_arrows() == r.apex->num_objects());
  }

  auto w = arrow();
  auto arr = comma(identity_functor(w), identity_functor(w));
  CHECK(arr.apex->num_objects() == 3);
  CHECK(arr.apex->num_arrows() == 6);
  CHECK(find_isomorphism(arr.apex, make_cat(chain_category(3))).has_value());

  auto e = make_cat(empty_category());
  auto r = comma(FinFunctor{e, w, {}, {}}, identity_functor(w));
  CHECK(r.apex->num_objects() == 0);
}

TEST_CASE("comma sizes match the definition") {
  for (int i = 0; i < 150; ++i) {
    Rng rng(instance_seed(21, i));
    auto sq = random_comma_square(rng, 12);
    auto [objs, arrows] = oracle::comma_size(sq.f, sq.g);
    auto r = comma(sq.f, sq.g);
    CHECK(r.apex->num_objects() == objs);
    CHECK(r.apex->num_arrows() == arrows);
    CHECK(!check_category_laws(*r.apex));
    CHECK(!check_nat(r.two_cell));
  }
}

TEST_CASE("comma universal property on small cones") {
  auto corpus = small_category_corpus(3);
  std::vector<Cat> xs = {terminal(), arrow(), make_cat(discrete_category(2))};
  Rng rng(8);
  int cones = 0;
  for (int t = 0; t < 25; ++t) {
    auto A = rng.pick(corpus), B = rng.pick(corpus), C = rng.pick(corpus);
    auto f = random_functor(rng, A, C), g = random_functor(rng, B, C);
    if (!f || !g) continue;
    auto r = comma(*f, *g);
    for (auto& X : xs)
      for_each_functor(X, A, [&](const FinFunctor& u) {
        for_each_functor(X, B, [&](const FinFunctor& v) {
          for_each_nat(compose(*f, u), compose(*g, v), [&](const NatTransform& tau) {
            int k = 0;
            for_each_functor(X, r.apex, [&](const FinFunctor& m) {
              if (compose(r.proj_left, m) == u && compose(r.proj_right, m) == v &&
                  whisker_right(r.two_cell, m).comp == tau.comp)
                ++k;
              return true;
            });
            CHECK(k == 1);
            ++cones;
            return true;
          });
          return true;
        });
        return true;
      });
  }
  CHECK(cones > 50);
}

TEST_CASE("iso-comma and pullback") {
  auto z2 = make_cat(cyclic_group_category(2));
  auto ic = iso_comma(identity_functor(z2), identity_functor(z2));
  CHECK(ic.apex->num_objects() == 2);
  auto w = arrow();
  auto iw = iso_comma(identity_functor(w), identity_functor(w));
  CHECK(iw.apex->num_objects() == 2);
  CHECK(find_isomorphism(iw.apex, w).has_value());

  auto d = make_cat(discrete_category(2));
  auto pb = pullback(identity_functor(d), identity_functor(d));
  CHECK(find_isomorphism(pb.apex, d).has_value());

  auto disjoint = pullback(constant_functor(terminal(), w, 0), constant_functor(terminal(), w, 1));
  CHECK(disjoint.apex->num_objects() == 0);

  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    auto A = random_category(rng, 6), D = random_category(rng, 4);
    auto B = random_category(rng, 6);
    auto g = random_functor(rng, B, A);
    if (!g) continue;
    auto ad = product(A, D);
    auto r = pullback(ad.pi1, *g);
    CHECK(find_isomorphism(r.apex, product(B, D).cat).has_value());
    CHECK(compose(ad.pi1, r.proj_left) == compose(*g, r.proj_right));
  }
}

TEST_CASE("pi0") {
  auto zig = free_category(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}});
  CHECK(pi0(zig).count == 1);
  CHECK(pi0(discrete_category(3)).count == 3);
  CHECK(pi0(empty_category()).count == 0);
  for (int i = 0; i < 100; ++i) {
    Rng rng(instance_seed(31, i));
    auto c = random_category(rng, 14);
    auto p = pi0(*c);
    CHECK(p.count == oracle::pi0(*c));
    auto q = pi0(opposite(*c));
    CHECK(q.label == p.label);
    for (int f = 0; f < c->num_arrows(); ++f) CHECK(p.label[c->src(f)] == p.label[c->tgt(f)]);
  }
}

TEST_CASE("initial and final functors") {
  auto c3 = make_cat(chain_category(3));
  CHECK(is_final_functor(constant_functor(terminal(), c3, 2)));
  CHECK(!is_final_functor(constant_functor(terminal(), c3, 0)));
  CHECK(is_initial_functor(constant_functor(terminal(), c3, 0)));
  CHECK(is_final_functor(identity_functor(c3)));
  CHECK(is_initial_functor(identity_functor(c3)));
  auto e = make_cat(empty_category());
  CHECK(!is_final_functor(FinFunctor{e, c3, {}, {}}));
  CHECK(!is_initial_functor(FinFunctor{e, c3, {}, {}}));

  int finals = 0;
  for (int i = 0; i < 200; ++i) {
    Rng rng(instance_seed(41, i));
    auto A = random_category(rng, 8), B = random_category(rng, 8);
    auto u = random_functor(rng, A, B);
    if (!u) continue;
    const bool fin = is_final_functor(*u);
    CHECK(fin == final_oracle(*u));
    CHECK(is_initial_functor(*u) == final_oracle(op_functor(*u)));
    finals += fin;
  }
  CHECK(finals > 0);
}

TEST_CASE("fibrations") {
  auto w = arrow();
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    auto A = random_category(rng, 6), D = random_category(rng, 5);
    auto ad = product(A, D);
    CHECK(is_opfibration(ad.pi1));
    CHECK(is_fibration(ad.pi1));
  }
  CHECK(!is_opfibration(constant_functor(terminal(), w, 0)));
  CHECK(is_fibration(constant_functor(terminal(), w, 0)));
  CHECK(is_opfibration(constant_functor(terminal(), w, 1)));
  CHECK(is_isofibration(constant_functor(terminal(), w, 0)));
  auto d = make_cat(discrete_category(2));
  CHECK(is_opfibration(FinFunctor{d, d, {1, 0}, {1, 0}}));

  int opf = 0, discrete = 0;
  for (int i = 0; i < 300; ++i) {
    Rng r(instance_seed(51, i));
    auto E = random_category(r, 8), B = random_category(r, 6);
    auto p = random_functor(r, E, B);
    if (!p) continue;
    const bool o = is_opfibration(*p);
    CHECK(o == oracle::opfibration(*p));
    CHECK(is_fibration(*p) == oracle::opfibration(op_functor(*p)));
    opf += o;
    if (is_discrete_fibration(*p)) {
      ++discrete;
      CHECK(is_fibration(*p));
    }
    if (is_discrete_opfibration(*p)) CHECK(o);
    if (o || is_fibration(*p)) CHECK(is_isofibration(*p));
  }
  CHECK(opf > 10);

  for (int i = 0; i < 40; ++i) {
    Rng r(instance_seed(52, i));
    auto c = random_category(r, 8);
    auto h = random_set_functor(r, c, 2);
    auto e = discrete_opfibration_of(h);
    CHECK(is_discrete_opfibration(e));
    CHECK(is_opfibration(e));
    auto hop = random_set_functor(r, make_cat(opposite(*c)), 2);
    auto df = discrete_fibration_of(hop, c);
    CHECK(is_discrete_fibration(df));
    CHECK(is_fibration(df));
    CHECK(oracle::opfibration(op_functor(df)));
  }
}

TEST_CASE("adjoints") {
  auto c3 = make_cat(chain_category(3));
  auto id = find_left_adjoint(identity_functor(c3));
  REQUIRE(id);
  CHECK(id->left == identity_functor(c3));

  auto bang = constant_functor(c3, terminal(), 0);
  auto l = find_left_adjoint(bang), r = find_right_adjoint(bang);
  REQUIRE(l);
  REQUIRE(r);
  CHECK(l->left.obj[0] == 0);
  CHECK(r->right.obj[0] == 2);
  CHECK(!check_adjunction(*l));
  CHECK(!check_adjunction(*r));

  auto d = make_cat(discrete_category(2));
  FinFunctor incl{d, arrow(), {0, 1}, {0, 1}};
  CHECK(!find_left_adjoint(incl));
  CHECK(!find_right_adjoint(incl));

  auto z2 = make_cat(cyclic_group_category(2));
  CHECK(!find_left_adjoint(constant_functor(z2, terminal(), 0)));
  CHECK(is_equivalence(identity_functor(z2)).has_value());
}

TEST_CASE("fully faithful left adjoints transfer along pullbacks of isofibrations") {
  int found = 0;
  for (int i = 0; i < 3000 && found < 25; ++i) {
    Rng rng(instance_seed(61, i));
    auto A = random_category(rng, 8), C = random_category(rng, 6), B = random_category(rng, 6);
    auto f = random_functor(rng, A, C), g = random_functor(rng, B, C);
    if (!f || !g || !is_isofibration(*g)) continue;
    auto adj = find_left_adjoint(*f);
    if (!adj || !is_full_and_faithful(adj->left)) continue;
    ++found;
    auto pb = pullback(*f, *g);
    auto qa = find_left_adjoint(pb.proj_right);
    REQUIRE(qa);
    CHECK(is_full_and_faithful(qa->left));
  }
  CHECK(found >= 10);
}
