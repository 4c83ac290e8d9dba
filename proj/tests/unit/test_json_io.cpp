#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "exq/crossed.hpp"
#include "exq/gen.hpp"
#include "exq/json_io.hpp"
#include "exq/monoidal.hpp"

using namespace exq;

namespace {

template <class Fn>
ErrorKind kind_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("accepted");
  return ErrorKind::Parse;
}

json walking_arrow_json() {
  return json::parse(R"({
    "objects": ["a", "b"],
    "arrows": [{"id": "1a", "src": "a", "tgt": "a"}, {"id": "1b", "src": "b", "tgt": "b"},
               {"id": "u", "src": "a", "tgt": "b"}],
    "identity": ["1a", "1b"],
    "compose": []
  })");
}

}  // namespace

TEST_CASE("round trips") {
  for (int i = 0; i < 30; ++i) {
    Rng rng(instance_seed(131, i));
    auto c = random_category(rng, 12);
    auto jc = to_json(*c);
    CHECK(to_json(*category_from_json(jc)) == jc);
    CHECK(same_category(*c, *category_from_json(jc)));

    auto sq = random_square(rng, 10);
    auto js = to_json(sq);
    CHECK(to_json(square_from_json(js)) == js);
    auto jf = to_json(sq.f);
    CHECK(to_json(functor_from_json(jf)) == jf);

    auto h = random_set_functor(rng, c, 2);
    auto jh = to_json(h);
    CHECK(to_json(setfunctor_from_json(jh)) == jh);

    auto F = random_colax(rng, 6);
    auto jF = to_json(F);
    CHECK(to_json(colax_from_json(jF)) == jF);
    auto jV = to_json(*F.V);
    CHECK(to_json(*monoidal_from_json(jV)) == jV);

    auto P = random_2category(rng, 3, 8);
    auto jP = to_json(*P);
    CHECK(to_json(*cat2_from_json(jP)) == jP);
    auto S = random_cat2functor(rng, P, i % 2 == 0);
    auto jS = to_json(S);
    CHECK(to_json(cat2functor_from_json(jS)) == jS);

    auto x = random_crossed(rng, 8);
    auto jx = to_json(*x);
    CHECK(to_json(*crossed_from_json(jx)) == jx);

    auto inst = random_harness_instance(rng, true);
    auto ji = to_json(inst);
    auto back = harness_instance_from_json(ji);
    CHECK(to_json(back) == ji);
    auto r1 = evaluate_harness_instance(inst), r2 = evaluate_harness_instance(back);
    CHECK(r1.asserted == r2.asserted);
    CHECK(r1.exact == r2.exact);
    CHECK(digest(ji) == digest(to_json(back)));
  }
}

TEST_CASE("category errors") {
  auto j = walking_arrow_json();
  CHECK(category_from_json(j)->num_arrows() == 3);

  auto bad = j;
  bad.erase("objects");
  CHECK(kind_of([&] { category_from_json(bad); }) == ErrorKind::Parse);
  bad = j;
  bad["objects"] = 3;
  CHECK(kind_of([&] { category_from_json(bad); }) == ErrorKind::Parse);
  bad = j;
  bad["arrows"][2]["tgt"] = "c";
  CHECK(kind_of([&] { category_from_json(bad); }) == ErrorKind::UnknownId);
  bad = j;
  bad["identity"] = {"1a"};
  CHECK(kind_of([&] { category_from_json(bad); }) != ErrorKind::Parse);
  bad = j;
  bad["arrows"].push_back({{"id", "v"}, {"src", "b"}, {"tgt", "a"}});
  CHECK(kind_of([&] { category_from_json(bad); }) == ErrorKind::MissingComposite);
  CHECK(kind_of([&] { category_from_json(j, {}, 2); }) == ErrorKind::SizeLimitExceeded);
}

TEST_CASE("functor and square errors") {
  Rng rng(2);
  auto sq = random_square(rng, 10);
  auto j = to_json(sq.f);
  if (!j["arr_map"].empty()) {
    auto bad = j;
    bad["arr_map"].begin().value() = "no-such-arrow";
    CHECK(kind_of([&] { functor_from_json(bad); }) == ErrorKind::UnknownId);
  }
  json f = {{"source", walking_arrow_json()},
            {"target", walking_arrow_json()},
            {"obj_map", {{"a", "a"}, {"b", "b"}}},
            {"arr_map", {{"1a", "1a"}, {"1b", "1b"}, {"u", "1a"}}}};
  CHECK(kind_of([&] { functor_from_json(f); }) == ErrorKind::FunctorLawViolation);

  auto js = to_json(sq);
  js.erase("phi");
  CHECK(kind_of([&] { square_from_json(js); }) == ErrorKind::Parse);
}

TEST_CASE("structured errors") {
  Rng rng(3);
  auto x = random_crossed(rng, 8);
  auto jx = to_json(*x);
  bool mutated = false;
  for (auto& entry : jx["chosen"]) {
    if (entry[0] != entry[4]) {
      entry[4] = entry[0];
      mutated = true;
      break;
    }
  }
  if (mutated) CHECK_THROWS_AS(crossed_from_json(jx), Error);

  auto P = random_2category(rng, 3, 8);
  auto jP = to_json(*P);
  jP["two_cells"].push_back({{"id", "extra"}, {"src", "nope"}, {"tgt", "nope"}});
  CHECK_THROWS_AS(cat2_from_json(jP), Error);

  auto inst = random_harness_instance(rng, false);
  auto ji = to_json(inst);
  ji["g"] = to_json(identity_crossed_functor(make_crossed_ptr(horizontally_trivial(make_cat(walking_arrow())))));
  CHECK(kind_of([&] { harness_instance_from_json(ji); }) == ErrorKind::TargetMismatch);
}

TEST_CASE("files") {
  const std::string path = "exq_json_io_test.json";
  {
    std::ofstream out(path);
    out << walking_arrow_json().dump();
  }
  CHECK(category_from_json(parse_json_file(path))->num_objects() == 2);
  {
    std::ofstream out(path);
    out << "{\"objects\": [";
  }
  CHECK(kind_of([&] { parse_json_file(path); }) == ErrorKind::Parse);
  std::remove(path.c_str());
  CHECK(kind_of([&] { parse_json_file("no/such/file.json"); }) == ErrorKind::Parse);
  CHECK(digest(walking_arrow_json()) == digest(json::parse(walking_arrow_json().dump())));
}
