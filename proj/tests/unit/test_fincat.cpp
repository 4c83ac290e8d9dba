#include <doctest.h>

#include "exq/crossed.hpp"
#include "exq/fincat.hpp"
#include "exq/gen.hpp"
#include "oracle.hpp"

using namespace exq;

namespace {

ErrorKind kind_of(const CategoryData& d, const Caps& caps = {}) {
  try {
    validate_category(d, caps);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted");
  return ErrorKind::Parse;
}

CategoryData one_object(std::vector<std::array<int, 3>> table) {
  CategoryData d;
  d.objects = {"x"};
  d.arrows = {{"1", 0, 0}, {"u", 0, 0}};
  d.identity = {0};
  d.compose = std::move(table);
  return d;
}

bool same_data(const FinCategory& a, const FinCategory& b) {
  auto x = a.data(), y = b.data();
  if (x.objects != y.objects || x.identity != y.identity || x.compose != y.compose) return false;
  if (x.arrows.size() != y.arrows.size()) return false;
  for (std::size_t i = 0; i < x.arrows.size(); ++i)
    if (x.arrows[i].id != y.arrows[i].id || x.arrows[i].src != y.arrows[i].src || x.arrows[i].tgt != y.arrows[i].tgt)
      return false;
  return true;
}

}  // namespace

TEST_CASE("standard categories") {
  auto d = discrete_category(2);
  CHECK(d.num_objects() == 2);
  CHECK(d.num_arrows() == 2);
  CHECK(!check_category_laws(d));

  auto w = walking_arrow();
  CHECK(w.num_objects() == 2);
  CHECK(w.num_arrows() == 3);
  CHECK(w.hom(0, 1).size() == 1);
  CHECK(w.hom(1, 0).empty());

  CHECK(empty_category().num_objects() == 0);
  CHECK(terminal_category().num_arrows() == 1);
  CHECK(chain_category(4).num_arrows() == 10);
  auto z3 = cyclic_group_category(3);
  CHECK(z3.num_arrows() == 3);
  for (int f = 0; f < 3; ++f) CHECK(z3.is_iso(f));
  auto free = free_category(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(free.hom(0, 2).size() == 2);
}

TEST_CASE("validation errors") {
  CHECK(kind_of(one_object({{0, 0, 0}, {0, 1, 0}, {1, 0, 1}, {1, 1, 1}})) == ErrorKind::UnitLawViolation);

  auto missing = one_object({{1, 1, 1}});
  missing.identity = {-1};
  CHECK(kind_of(missing) == ErrorKind::MissingIdentity);

  CHECK(kind_of(one_object({})) == ErrorKind::MissingComposite);
  CHECK(kind_of(one_object({{1, 1, 1}, {1, 1, 0}})) == ErrorKind::ConflictingEntry);

  CategoryData arrow;
  arrow.objects = {"a", "b"};
  arrow.arrows = {{"1a", 0, 0}, {"1b", 1, 1}, {"u", 0, 1}};
  arrow.identity = {0, 1};
  CHECK_NOTHROW(validate_category(arrow));
  auto bad = arrow;
  bad.compose = {{2, 2, 2}};
  CHECK(kind_of(bad) == ErrorKind::NonComposableEntry);
  bad = arrow;
  bad.arrows[1].id = "u";
  CHECK(kind_of(bad) == ErrorKind::DuplicateId);
  bad = arrow;
  bad.identity = {2, 1};
  CHECK(kind_of(bad) == ErrorKind::BadIdentity);

  Caps tiny;
  tiny.max_arrows = 2;
  CHECK(kind_of(arrow, tiny) == ErrorKind::SizeLimitExceeded);

  // a·a = b, a·b = a, b·a = b, b·b = b: (a·b)·a = b but a·(b·a) = a
  CategoryData m;
  m.objects = {"x"};
  m.arrows = {{"1", 0, 0}, {"a", 0, 0}, {"b", 0, 0}};
  m.identity = {0};
  m.compose = {{1, 1, 2}, {1, 2, 1}, {2, 1, 2}, {2, 2, 2}};
  CHECK(kind_of(m) == ErrorKind::AssociativityViolation);
}

TEST_CASE("opposite") {
  auto w = make_cat(walking_arrow());
  auto wo = opposite(*w);
  const int u = w->find_arrow("u") >= 0 ? w->find_arrow("u") : 2;
  CHECK(wo.src(u) == w->tgt(u));
  CHECK(wo.tgt(u) == w->src(u));
  CHECK(same_data(discrete_category(3), opposite(discrete_category(3))));
  CHECK(same_data(cyclic_group_category(2), opposite(cyclic_group_category(2))));
  for (int i = 0; i < 60; ++i) {
    Rng rng(instance_seed(11, i));
    auto c = random_category(rng, 12);
    CHECK(same_data(*c, opposite(opposite(*c))));
    CHECK(!check_category_laws(opposite(*c)));
  }
}

TEST_CASE("products and coproducts") {
  auto d2 = make_cat(discrete_category(2)), d3 = make_cat(discrete_category(3));
  auto p = product(d2, d3);
  CHECK(p.cat->num_objects() == 6);
  CHECK(p.cat->num_arrows() == 6);
  auto w = make_cat(walking_arrow());
  auto ww = product(w, w);
  CHECK(ww.cat->num_arrows() == 9);
  CHECK(ww.cat->num_objects() == 4);
  CHECK(!check_category_laws(*ww.cat));
  CHECK(!check_functor(ww.pi1));
  CHECK(!check_functor(ww.pi2));
  auto c = coproduct(w, make_cat(empty_category()));
  CHECK(c.cat->num_objects() == 2);
  CHECK(c.cat->num_arrows() == 3);
  CHECK(find_isomorphism(c.cat, w).has_value());
  CHECK(!check_functor(c.in1));

  auto pr = pairing(ww.pi1, ww.pi2, ww.cat);
  CHECK(pr == identity_functor(ww.cat));
}

TEST_CASE("functor counts agree with enumeration over every map") {
  auto corpus = small_category_corpus(4);
  REQUIRE(corpus.size() >= 6);
  for (auto& a : corpus)
    for (auto& b : corpus) CHECK(count_functors(a, b) == oracle::count_functors(*a, *b));
  auto w = make_cat(walking_arrow());
  CHECK(count_functors(w, w) == 3);
}

TEST_CASE("functor composition is associative and unital") {
  auto corpus = small_category_corpus(4);
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    auto a = rng.pick(corpus), b = rng.pick(corpus), c = rng.pick(corpus), d = rng.pick(corpus);
    auto f = random_functor(rng, a, b), g = random_functor(rng, b, c), h = random_functor(rng, c, d);
    if (!f || !g || !h) continue;
    CHECK(compose(*h, compose(*g, *f)) == compose(compose(*h, *g), *f));
    CHECK(compose(identity_functor(b), *f) == *f);
    CHECK(compose(*f, identity_functor(a)) == *f);
    CHECK(!check_functor(compose(*g, *f)));
  }
}

TEST_CASE("natural transformations compose associatively") {
  auto w = make_cat(walking_arrow());
  auto c3 = make_cat(chain_category(3));
  std::vector<FinFunctor> fs;
  for_each_functor(w, c3, [&](const FinFunctor& f) {
    fs.push_back(f);
    return true;
  });
  CHECK(fs.size() == 6);
  int triples = 0;
  for (auto& f : fs)
    for (auto& g : fs)
      for (auto& h : fs)
        for_each_nat(f, g, [&](const NatTransform& a) {
          for_each_nat(g, h, [&](const NatTransform& b) {
            auto ba = vcompose(b, a);
            CHECK(!check_nat(ba));
            for_each_nat(h, h, [&](const NatTransform& c) {
              CHECK(vcompose(c, ba) == vcompose(vcompose(c, b), a));
              ++triples;
              return true;
            });
            CHECK(vcompose(identity_nat(h), b) == b);
            CHECK(vcompose(b, identity_nat(g)) == b);
            return true;
          });
          return true;
        });
  CHECK(triples > 0);
}

TEST_CASE("set functors") {
  auto w = make_cat(walking_arrow());
  auto k = constant_set_functor(w, 3);
  CHECK(!check_set_functor(k));
  auto bad = k;
  bad.map[2] = {0, 0, 5};
  CHECK(check_set_functor(bad));
  Caps caps;
  caps.max_set_size = 2;
  CHECK(check_set_functor(k, caps)->kind() == ErrorKind::SizeLimitExceeded);
}
