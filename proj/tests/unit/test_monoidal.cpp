#include <doctest.h>

#include "exq/constructions.hpp"
#include "exq/gen.hpp"
#include "exq/monoidal.hpp"

using namespace exq;

namespace {

MonCat share(StrictMonCategory v) { return std::make_shared<const StrictMonCategory>(std::move(v)); }

std::vector<std::vector<bool>> chain_leq(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) leq[i][j] = i <= j;
  return leq;
}

std::vector<std::vector<bool>> square_leq() {
  // 0 bottom, 3 top, 1 and 2 incomparable
  std::vector<std::vector<bool>> leq(4, std::vector<bool>(4, false));
  for (int i = 0; i < 4; ++i) leq[i][i] = leq[0][i] = leq[i][3] = true;
  return leq;
}

const std::vector<std::vector<int>> z2 = {{0, 1}, {1, 0}};

bool has_initial(const FinCategory& c) {
  for (int o = 0; o < c.num_objects(); ++o) {
    bool ok = true;
    for (int p = 0; p < c.num_objects() && ok; ++p) ok = c.hom(o, p).size() == 1;
    if (ok) return true;
  }
  return false;
}

bool has_terminal(const FinCategory& c) {
  for (int o = 0; o < c.num_objects(); ++o) {
    bool ok = true;
    for (int p = 0; p < c.num_objects() && ok; ++p) ok = c.hom(p, o).size() == 1;
    if (ok) return true;
  }
  return false;
}

template <class Fn>
void for_each_target(const ColaxMonFunctor& F, Fn fn) {
  const auto &A = *F.V->base, &B = *F.W->base;
  for (int x = 0; x < A.num_objects(); ++x)
    for (int y1 = 0; y1 < B.num_objects(); ++y1)
      for (int y2 = 0; y2 < B.num_objects(); ++y2)
        for (int f : B.hom(F.F.obj[x], F.W->tensor_obj(y1, y2))) fn(x, f, y1, y2);
}

}  // namespace

TEST_CASE("strict monoidal categories") {
  CHECK(!check_monoidal(terminal_monoidal()));
  CHECK(!check_monoidal(sign_monoidal()));
  CHECK(!check_monoidal(discrete_monoidal(z2)));
  CHECK(!check_monoidal(meet_monoidal(chain_leq(3))));
  CHECK(!check_monoidal(join_monoidal(square_leq())));
  CHECK(!check_monoidal(product_monoidal(sign_monoidal(), meet_monoidal(chain_leq(2)))));
  CHECK(sign_monoidal().symmetric());
  CHECK_THROWS_AS(meet_monoidal({{true, false}, {false, true}}), Error);

  auto v = meet_monoidal(chain_leq(3));
  auto bad = v;
  bad.unit = 0;
  CHECK(check_monoidal(bad));
}

TEST_CASE("nullary condition") {
  auto sign = share(sign_monoidal());
  CHECK(condition_nullary(identity_colax(sign)).holds);
  auto v = share(discrete_monoidal(z2));
  auto t = terminal_colax(v);
  CHECK(!check_colax(t));
  auto n = condition_nullary(t);
  CHECK(!n.holds);
  CHECK(n.X == 1);
  CHECK(n.solutions == 0);
  auto m = share(meet_monoidal(square_leq())), c = share(meet_monoidal(chain_leq(3)));
  for (auto& F : all_thin_colax(m, c)) CHECK(condition_nullary(F).holds);
}

TEST_CASE("monoidal Fact categories") {
  auto sign = share(sign_monoidal());
  auto id = identity_colax(sign);
  for_each_target(id, [&](int x, int f, int y1, int y2) {
    auto mf = fact_monoidal(id, x, f, y1, y2);
    CHECK(has_terminal(*mf.cat));
    CHECK(pi0(*mf.cat).count == 1);
  });

  auto m = share(meet_monoidal(square_leq())), c = share(meet_monoidal(chain_leq(3)));
  int checked = 0;
  for (auto& F : all_thin_colax(m, c))
    for_each_target(F, [&](int x, int f, int y1, int y2) {
      CHECK(has_initial(*fact_monoidal(F, x, f, y1, y2).cat));
      ++checked;
    });
  CHECK(checked > 0);

  auto v = share(meet_monoidal(square_leq()));
  auto t = terminal_colax(v);
  const auto& A = *v->base;
  for (int x = 0; x < A.num_objects(); ++x) {
    auto mf = fact_monoidal(t, x, 0, 0, 0);
    std::size_t n = 0;
    for (int z1 = 0; z1 < A.num_objects(); ++z1)
      for (int z2 = 0; z2 < A.num_objects(); ++z2) n += A.hom(x, v->tensor_obj(z1, z2)).size();
    CHECK(mf.objects.size() == n);
  }
  CHECK_THROWS_AS(fact_monoidal(id, 0, sign->base->num_arrows() - 1, 0, 0), Error);
}

TEST_CASE("exactness examples") {
  CHECK(is_exact_colax_monoidal(identity_colax(share(sign_monoidal()))).exact);
  CHECK(is_exact_colax_monoidal(identity_colax(share(meet_monoidal(square_leq())))).exact);
  auto r = is_exact_colax_monoidal(terminal_colax(share(discrete_monoidal(z2))));
  CHECK(!r.exact);
  CHECK(!r.nullary.holds);
  auto m = share(meet_monoidal(square_leq())), c = share(meet_monoidal(chain_leq(3)));
  for (auto& F : all_thin_colax(m, c)) CHECK(is_exact_colax_monoidal(F).exact);
}

TEST_CASE("truncations") {
  auto v = make_cat(chain_category(2));
  auto t1 = truncated_free_monoidal(v, 1);
  CHECK(t1.cat->num_objects() == 3);
  CHECK(t1.cat->num_arrows() == 4);

  auto t = truncated_free_monoidal(make_cat(terminal_category()), 3);
  CHECK(t.cat->num_objects() == 4);
  CHECK(t.cat->num_arrows() == 4);
  for (int f = 0; f < t.cat->num_arrows(); ++f) CHECK(t.cat->is_identity(f));
  CHECK(t.excluded > 0);

  auto s = truncated_free_symmetric(make_cat(discrete_category(1)), 3);
  REQUIRE(s.by_length.size() == 4);
  const int fact[] = {1, 1, 2, 6};
  for (int n = 0; n <= 3; ++n) {
    REQUIRE(s.by_length[n].size() == 1);
    const int o = s.by_length[n][0];
    CHECK((int)s.cat->hom(o, o).size() == fact[n]);
  }
  CHECK(s.cat->num_arrows() == 10);
  CHECK(!check_category_laws(*s.cat));
}

TEST_CASE("n-ary oracle") {
  auto sign = share(sign_monoidal());
  auto rep = nary_connectedness_oracle(identity_colax(sign), 3, 3);
  CHECK(rep.all_connected);
  CHECK(rep.per_arity[1].connected == rep.per_arity[1].instances);

  auto m = share(meet_monoidal(square_leq()));
  for (auto& F : all_thin_colax(m, m)) {
    auto r = nary_connectedness_oracle(F, 4, 4);
    CHECK(r.all_connected);
  }

  auto bad = nary_connectedness_oracle(terminal_colax(share(discrete_monoidal(z2))), 2, 2);
  CHECK(bad.per_arity[0].connected < bad.per_arity[0].instances);
  CHECK(!bad.all_connected);
}

TEST_CASE("random colax functors") {
  int exact = 0;
  for (int i = 0; i < 25; ++i) {
    Rng rng(instance_seed(101, i));
    auto F = random_colax(rng, 6);
    REQUIRE(!check_colax(F));
    auto ex = is_exact_colax_monoidal(F);
    auto rep = nary_connectedness_oracle(F, 3, 3);
    CHECK(ex.exact == rep.all_connected);
    CHECK(rep.implication_holds);
    CHECK(rep.per_arity[1].connected == rep.per_arity[1].instances);
    CHECK((rep.per_arity[0].connected == rep.per_arity[0].instances) == condition_nullary(F).holds);

    long n = 0, connected = 0;
    for_each_target(F, [&](int x, int f, int y1, int y2) {
      ++n;
      connected += pi0(*fact_monoidal(F, x, f, y1, y2).cat).count == 1;
    });
    CHECK(rep.per_arity[2].instances == n);
    CHECK(rep.per_arity[2].connected == connected);
    exact += ex.exact;
  }
  CHECK(exact > 0);
  CHECK(exact < 25);
}

TEST_CASE("symmetric reduction") {
  auto sign = share(sign_monoidal());
  CHECK(!check_symmetric_colax(identity_colax(sign)));
  CHECK(check_symmetric_reduction(identity_colax(sign), 3, 3).holds());

  auto m = share(meet_monoidal(square_leq()));
  for (auto& F : all_thin_colax(m, m)) {
    CHECK(!check_symmetric_colax(F));
    CHECK(check_symmetric_reduction(F, 3, 3).holds());
  }

  auto t = terminal_colax(share(discrete_monoidal(z2)));
  auto r = check_symmetric_reduction(t, 3, 3);
  CHECK(r.holds());
  CHECK(!is_exact_colax_monoidal(t).exact);

  for (int i = 0; i < 8; ++i) {
    Rng rng(instance_seed(102, i));
    auto F = random_symmetric_colax(rng, 6);
    REQUIRE(!check_symmetric_colax(F));
    CHECK(check_symmetric_reduction(F, 3, 3).holds());
  }
}
