#include "exq/report.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "exq/exact.hpp"
#include "exq/profun.hpp"

namespace exq {

namespace {

struct SuiteSpec {
  const char* name;
  const char* property;
  int instances;
};

const std::vector<SuiteSpec>& specs() {
  static const std::vector<SuiteSpec> s = {
      {"five-way", "the five exactness characterizations return the same verdict", 500},
      {"comma-exactness", "comma squares are exact", 200},
      {"pullback-exactness", "pullbacks with an opfibration f or a fibration g are exact", 200},
      {"coend-pi0", "the coend at (a,b) bijects with pi0 of (q/b) x_P (a/p)", 200},
      {"kan-products", "Lan of a product-preserving functor along a product-preserving functor preserves products", 100},
      {"monoidal", "colax monoidal exactness holds iff every n-ary Fact category is connected", 50},
      {"symmetric", "symmetric and monoidal Fact categories have the same components", 30},
      {"lax-coend", "components of the lax coend biject with the set-level coend", 100},
      {"codescent", "codescent of commutative squares recovers C and the canonical cocone is initial", 50},
      {"hard-exactness", "codescent of a pullback along a discrete fibration and an objectwise opfibration is exact", 100},
      {"pi0-exactness", "a square is exact iff its locally discrete image is pi0-exact", 200},
  };
  return s;
}

const SuiteSpec& spec_of(const std::string& name) {
  for (const auto& s : specs())
    if (name == s.name) return s;
  throw Error(ErrorKind::InvalidConfig, "unknown suite " + name);
}

std::uint64_t suite_seed(const SuiteConfig& c, const std::string& name) { return splitmix64(c.seed ^ fnv1a(name)); }

int count_for(const SuiteConfig& c, const std::string& name) {
  if (auto it = c.counts.find(name); it != c.counts.end()) return it->second;
  if (c.instances > 0) return c.instances;
  return spec_of(name).instances;
}

json seed_payload(std::uint64_t seed) { return {{"seed", seed}}; }

std::string seed_digest(std::uint64_t seed) { return hex64(splitmix64(seed)); }

CheckRecord record(const std::string& check, const std::string& property, std::string digest, bool ok, json cert) {
  return {check, property, std::move(digest), ok ? Verdict::Pass : Verdict::Fail, std::move(cert)};
}

// Runs `one(i)` for i < n in parallel; results in index order.
std::vector<CheckRecord> fan_out(int n, const std::function<CheckRecord(int)>& one) {
  std::vector<CheckRecord> out(std::max(n, 0));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) {
    try {
      out[i] = one(i);
    } catch (const std::exception& e) {
      out[i] = {"instance", "", "", Verdict::Fail, {{"index", i}, {"error", e.what()}}};
    }
  }
  return out;
}

json witness_json(const LaxSquare& sq, const ExactResult& r) {
  if (!r.witness) return nullptr;
  return {{"a", sq.A->object(r.witness->a)},
          {"gamma", sq.C->arrow_id(r.witness->gamma)},
          {"b", sq.B->object(r.witness->b)},
          {"components", r.witness->components.label}};
}

SuiteResult five_way(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto seed = suite_seed(c, "five-way");
  long exact = 0, small_missed = 0;
  std::vector<char> ex(std::max(count_for(c, "five-way"), 0)), missed(ex.size());
  s.records = fan_out(count_for(c, "five-way"), [&](int i) {
    Rng rng(instance_seed(seed, i));
    const auto sq = random_square(rng, c.gen_arrows);
    const json inst = to_json(sq);
    const auto v = all_methods(sq, c.caps);
    const auto kt = kan_transport(sq, c.caps);
    ex[i] = v.fact;
    missed[i] = kt.small_family_holds != kt.holds;
    json cert = {{"fact", v.fact}, {"profunctor", v.profunctor}, {"initial", v.initial},
                 {"final", v.final}, {"kan", v.kan},             {"right_kan_dual", v.right_kan}};
    const bool ok = v.agree();
    if (!ok) cert["instance"] = inst;
    if (!v.fact) cert["witness"] = witness_json(sq, is_exact(sq));
    return record("agreement", prop, digest(inst), ok, cert);
  });
  for (std::size_t i = 0; i < ex.size(); ++i) {
    exact += ex[i];
    small_missed += missed[i];
  }
  s.counts["exact"] = exact;
  s.counts["size_capped_family_misses"] = small_missed;
  return s;
}

SuiteResult comma_exactness(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto seed = suite_seed(c, "comma-exactness");
  s.records = fan_out(count_for(c, "comma-exactness"), [&](int i) {
    Rng rng(instance_seed(seed, i));
    const auto sq = random_comma_square(rng, c.gen_arrows);
    const json inst = to_json(sq);
    const auto r = is_exact(sq);
    json cert = json::object();
    if (!r.exact) cert = {{"instance", inst}, {"witness", witness_json(sq, r)}};
    return record("exact", prop, digest(inst), r.exact, cert);
  });
  return s;
}

SuiteResult pullback_exactness(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto rep = pullback_exactness_suite(suite_seed(c, "pullback-exactness"), count_for(c, "pullback-exactness"));
  for (const auto& r : rep.rows) {
    json cert = seed_payload(r.seed);
    cert["legs"] = r.description;
    if (!r.note.empty()) cert["error"] = r.note;
    s.records.push_back(record("pullback", prop, seed_digest(r.seed), r.exact, cert));
    s.records.push_back(record("iso-comma", prop, seed_digest(r.seed), r.iso_comma_exact, cert));
    if (r.precompose_checked)
      s.records.push_back(record("precompose-ff-adjoint", "exactness survives precomposing the apex with a functor "
                                 "having a fully faithful adjoint",
                                 seed_digest(r.seed), r.precompose_exact, cert));
    s.records.push_back({"transpose", "other orientation, not asserted", seed_digest(r.seed), Verdict::Observed,
                         {{"seed", r.seed}, {"exact", r.transpose_exact}}});
  }
  const auto cx = pullback_counterexample();
  s.records.push_back(record("counterexample", "pullback of 1 -> 2 at 0 against 1 -> 2 at 1 is not exact",
                             digest(to_json(cx)), rep.counterexample_non_exact && rep.counterexample_legs_rejected,
                             {{"non_exact", rep.counterexample_non_exact},
                              {"legs_rejected", rep.counterexample_legs_rejected}}));
  s.counts["orientation_dependent"] = rep.orientation_dependent;
  s.counts["precomposed"] = rep.precomposed;
  return s;
}

SuiteResult coend_pi0(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto seed = suite_seed(c, "coend-pi0");
  s.records = fan_out(count_for(c, "coend-pi0"), [&](int i) {
    Rng rng(instance_seed(seed, i));
    const auto sq = random_square(rng, c.gen_arrows);
    const int a = rng.uniform(0, sq.A->num_objects() - 1), b = rng.uniform(0, sq.B->num_objects() - 1);
    json inst = to_json(sq);
    inst["a"] = sq.A->object(a);
    inst["b"] = sq.B->object(b);
    const auto r = coend_pi0_check(sq, a, b, c.caps);
    const bool ok = r.bijection && r.coend_size == r.pi0_size;
    json cert = {{"coend", r.coend_size}, {"pi0", r.pi0_size}};
    if (!ok) cert["instance"] = inst;
    return record("bijection", prop, digest(inst), ok, cert);
  });
  return s;
}

SuiteResult kan_products(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto rep = kan_product_suite(suite_seed(c, "kan-products"), count_for(c, "kan-products"));
  for (const auto& r : rep.rows) {
    json cert = seed_payload(r.seed);
    cert["shape"] = r.description;
    if (!r.note.empty()) cert["error"] = r.note;
    s.records.push_back(record("lan-preserves-products", prop, seed_digest(r.seed), r.g_preserves && r.lan_preserves, cert));
  }
  return s;
}

std::vector<std::vector<std::vector<bool>>> cartesian_orders() {
  auto chain = [](int n) {
    std::vector<std::vector<bool>> l(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) l[i][j] = true;
    return l;
  };
  std::vector<std::vector<bool>> square(4, std::vector<bool>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) square[i][j] = (i & j) == i;
  return {chain(1), chain(2), chain(3), square};
}

SuiteResult monoidal(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto seed = suite_seed(c, "monoidal");
  long exact = 0;
  std::vector<char> ex(std::max(count_for(c, "monoidal"), 0));
  s.records = fan_out(count_for(c, "monoidal"), [&](int i) {
    Rng rng(instance_seed(seed, i));
    const auto F = random_colax(rng, 8);
    const json inst = to_json(F);
    const auto e = is_exact_colax_monoidal(F);
    const auto r = nary_connectedness_oracle(F, 4, 4, c.caps);
    ex[i] = e.exact;
    const bool ok = e.exact == r.all_connected && r.implication_holds;
    json per = json::array();
    for (const auto& a : r.per_arity)
      per.push_back({{"arity", a.arity}, {"instances", a.instances}, {"connected", a.connected}, {"skipped", a.skipped}});
    json cert = {{"exact", e.exact}, {"oracle", r.all_connected}, {"arities", per}};
    if (!ok) cert["instance"] = inst;
    return record("agrees-with-oracle", prop, digest(inst), ok, cert);
  });
  for (char x : ex) exact += x;
  s.counts["exact"] = exact;

  auto z2 = std::make_shared<const StrictMonCategory>(discrete_monoidal({{0, 1}, {1, 0}}));
  const auto T = terminal_colax(z2);
  const auto te = is_exact_colax_monoidal(T);
  s.records.push_back(record("unit-counterexample", "a non-terminal unit breaks the nullary condition",
                             digest(to_json(T)), !te.nullary.holds && !te.exact,
                             {{"nullary", te.nullary.holds}, {"exact", te.exact}}));

  long cartesian = 0;
  const auto orders = cartesian_orders();
  for (const auto& lv : orders)
    for (const auto& lw : orders) {
      auto V = std::make_shared<const StrictMonCategory>(meet_monoidal(lv));
      auto W = std::make_shared<const StrictMonCategory>(meet_monoidal(lw));
      for (const auto& F : all_thin_colax(V, W)) {
        ++cartesian;
        const json inst = to_json(F);
        const auto e = is_exact_colax_monoidal(F);
        json cert = {{"exact", e.exact}};
        if (!e.exact) cert["instance"] = inst;
        s.records.push_back(record("cartesian", "functors between cartesian monoidal categories are exact", digest(inst),
                                   e.exact, cert));
      }
    }
  s.counts["cartesian"] = cartesian;
  return s;
}

SuiteResult symmetric(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto seed = suite_seed(c, "symmetric");
  auto one = [&](const ColaxMonFunctor& F, const std::string& check) {
    const json inst = to_json(F);
    SymmetricReport r;
    try {
      r = check_symmetric_reduction(F, 4, 4, c.caps);
    } catch (const Error& e) {
      return record(check, prop, digest(inst), false, {{"error", e.what()}, {"instance", inst}});
    }
    json cert = {{"instances", r.instances},
                 {"not_essentially_surjective", r.not_essentially_surjective},
                 {"pi0_mismatches", r.pi0_mismatches},
                 {"ill_defined", r.ill_defined}};
    if (!r.holds()) cert["instance"] = inst;
    return record(check, prop, digest(inst), r.holds(), cert);
  };
  s.records = fan_out(count_for(c, "symmetric"), [&](int i) {
    Rng rng(instance_seed(seed, i));
    return one(random_symmetric_colax(rng, 8), "pi0-agreement");
  });
  s.records.push_back(one(identity_colax(std::make_shared<const StrictMonCategory>(sign_monoidal())), "sign-identity"));
  const auto orders = cartesian_orders();
  for (auto [v, w] : {std::pair{1, 3}, std::pair{2, 1}, std::pair{2, 2}}) {
    auto V = std::make_shared<const StrictMonCategory>(meet_monoidal(orders[v]));
    auto W = std::make_shared<const StrictMonCategory>(meet_monoidal(orders[w]));
    for (const auto& F : all_thin_colax(V, W)) s.records.push_back(one(F, "cartesian"));
  }
  return s;
}

std::vector<std::pair<std::string, std::pair<Cat2Functor, Cat2Functor>>> wedge_instances() {
  auto wa = make_cat(walking_arrow());
  auto pp = make_cat(free_category(2, {{0, 1}, {0, 1}}));
  const std::vector<std::pair<std::string, Cat2>> bases = {
      {"terminal", make_cat2(locally_discrete(make_cat(terminal_category())))},
      {"arrow", make_cat2(locally_discrete(wa))},
      {"parallel-2cell",
       make_cat2(locally_posetal(pp, compatible_preorder(*pp, {{pp->find_arrow("e0"), pp->find_arrow("e1")}})))}};
  std::vector<std::pair<std::string, std::pair<Cat2Functor, Cat2Functor>>> out;
  for (const auto& [name, P] : bases)
    for (int k = 0; k < 4; ++k) {
      Cat2Functor S, T;
      const int last = P->num_objects() - 1;
      switch (k) {
        case 0: S = constant_cat2functor(P, true, wa); T = constant_cat2functor(P, false, wa); break;
        case 1: S = representable_cat2functor(P, 0, true); T = representable_cat2functor(P, last, false); break;
        case 2:
          S = representable_cat2functor(P, last, true);
          T = constant_cat2functor(P, false, make_cat(discrete_category(2)));
          break;
        default:
          S = constant_cat2functor(P, true, make_cat(cyclic_group_category(2)));
          T = representable_cat2functor(P, 0, false);
      }
      out.push_back({name + "/" + std::to_string(k), {S, T}});
    }
  return out;
}

std::vector<Cat> wedge_vertices() {
  return {make_cat(terminal_category()),      make_cat(walking_arrow()),          make_cat(discrete_category(2)),
          make_cat(cyclic_group_category(2)), make_cat(chain_category(3)),        make_cat(cyclic_group_category(3)),
          make_cat(free_category(3, {{0, 1}, {0, 2}}))};
}

SuiteResult lax_coend(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto seed = suite_seed(c, "lax-coend");
  s.records = fan_out(count_for(c, "lax-coend"), [&](int i) {
    Rng rng(instance_seed(seed, i));
    const auto P = random_2category(rng, 4, c.gen_arrows);
    const auto S = random_cat2functor(rng, P, true), T = random_cat2functor(rng, P, false);
    const json inst = {{"S", to_json(S)}, {"T", to_json(T)}};
    const auto r = pi0_coend_oracle(S, T, c.caps);
    json cert = {{"oracle_classes", r.oracle_classes}, {"components", r.components}};
    if (!r.bijection) cert["instance"] = inst;
    return record("oracle", prop, digest(inst), r.bijection, cert);
  });
  const auto inst = wedge_instances();
  const auto V = wedge_vertices();
  std::vector<CheckRecord> w = fan_out(static_cast<int>(inst.size()), [&](int i) {
    const auto& [name, st] = inst[i];
    const auto r = check_universal_lax_wedge(st.first, st.second, V, c.caps);
    json cert = {{"instance", name},     {"axioms", r.axioms_hold},         {"failure", r.failure},
                 {"wedges", r.wedges},   {"factorizations", r.factorizations}};
    return record("universal-lax-wedge", "the canonical lax wedge is universal",
                  digest({{"S", to_json(st.first)}, {"T", to_json(st.second)}}), r.axioms_hold && r.factorization_holds,
                  cert);
  });
  s.records.insert(s.records.end(), w.begin(), w.end());
  s.counts["wedge_instances"] = static_cast<long>(inst.size());
  return s;
}

SuiteResult codescent_suite(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  for (const auto& C : small_category_corpus(4)) {
    const json inst = to_json(*C);
    json cert = json::object();
    bool ok = false;
    try {
      const auto x = sq_double(C);
      if (auto e = validate_crossed(x, false)) throw *e;
      const auto cd = codescent(x);
      const auto cocone = cocone_error(x.dbl, cd.q0, cd.q1);
      const bool iso = find_isomorphism(cd.cat(), C).has_value();
      ok = !cocone && iso;
      cert = {{"isomorphic", iso}, {"cocone", cocone ? *cocone : "ok"}};
    } catch (const Error& e) {
      cert = {{"error", e.what()}};
    }
    if (!ok) cert["instance"] = inst;
    s.records.push_back(record("sq-recovers-C", "codescent of the commutative-squares double category is C", digest(inst),
                               ok, cert));
  }
  const auto seed = suite_seed(c, "codescent");
  const auto Z = small_category_corpus(6);
  const int n = count_for(c, "codescent");
  long drawn = 0;
  for (int found = 0; found < n && drawn < 40L * std::max(n, 1); ++drawn) {
    Rng rng(instance_seed(seed, drawn));
    const auto x = random_crossed(rng, 3);
    if (x->dbl.X0->num_objects() > 2 || x->dbl.X0->num_arrows() + x->dbl.num_horizontal() > 6) continue;
    ++found;
    const json inst = to_json(*x);
    json cert = json::object();
    bool ok = false;
    try {
      if (auto e = validate_crossed(*x, false)) throw *e;
      const auto cd = codescent(*x);
      const auto cocone = cocone_error(x->dbl, cd.q0, cd.q1);
      const auto r = check_codescent_initiality(*x, Z, c.caps);
      ok = !cocone && r.bijection;
      cert = {{"cocones", r.cocones}, {"functors", r.functors}, {"cocone", cocone ? *cocone : "ok"}};
    } catch (const Error& e) {
      cert = {{"error", e.what()}};
    }
    if (!ok) cert["instance"] = inst;
    s.records.push_back(record("initiality", prop, digest(inst), ok, cert));
  }
  s.counts["draws"] = drawn;
  return s;
}

SuiteResult hard_exactness(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto rep = hard_exactness_harness(suite_seed(c, "hard-exactness"), count_for(c, "hard-exactness"));
  for (const auto& r : rep.rows) {
    json cert = seed_payload(r.seed);
    cert["description"] = r.description;
    cert["discrete_fibration"] = r.discrete_fibration;
    cert["objectwise_opfibration"] = r.objectwise_opfibration;
    cert["s0_compatible"] = r.strict;
    cert["exact"] = r.exact;
    cert["transpose_exact"] = r.transpose_exact;
    if (!r.note.empty()) cert["error"] = r.note;
    CheckRecord rec = record(r.asserted ? "codescent-exact" : "outside-hypotheses", prop, seed_digest(r.seed), r.exact, cert);
    if (!r.asserted) rec.verdict = r.discrete_fibration && r.objectwise_opfibration ? Verdict::Observed : Verdict::Excluded;
    s.records.push_back(rec);
  }
  s.counts["transpose_exact"] = rep.transpose_exact;
  s.counts["relaxed"] = rep.relaxed;
  s.counts["relaxed_exact"] = rep.relaxed_exact;
  return s;
}

SuiteResult pi0_exactness(const SuiteConfig& c, const std::string& prop) {
  SuiteResult s;
  const auto seed = suite_seed(c, "pi0-exactness");
  s.records = fan_out(count_for(c, "pi0-exactness"), [&](int i) {
    Rng rng(instance_seed(seed, i));
    const auto sq = random_square(rng, c.gen_arrows);
    const json inst = to_json(sq);
    const bool a = is_pi0_exact(d_star(sq)).exact, b = is_exact(sq).exact;
    json cert = {{"pi0_exact", a}, {"exact", b}};
    if (a != b) cert["instance"] = inst;
    return record("agreement", prop, digest(inst), a == b, cert);
  });
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v;
    for (const auto& s : specs()) v.push_back(s.name);
    return v;
  }();
  return n;
}

int default_instances(const std::string& suite) { return spec_of(suite).instances; }

std::optional<Error> check_config(const SuiteConfig& c) {
  auto bad = [](const std::string& m) { return Error(ErrorKind::InvalidConfig, m); };
  if (c.caps.max_arrows <= 0 || c.caps.max_set_size <= 0 || c.caps.kan_set_size <= 0 || c.caps.max_set_functors <= 0 ||
      c.caps.max_cells <= 0 || c.gen_arrows <= 0)
    return bad("caps must be positive");
  if (c.format != "text" && c.format != "json") return bad("format must be text or json");
  for (const auto& s : c.suites)
    if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end()) return bad("unknown suite " + s);
  for (const auto& [k, v] : c.counts) {
    if (std::find(suite_names().begin(), suite_names().end(), k) == suite_names().end()) return bad("unknown suite " + k);
    if (v < 0) return bad("instance counts must be nonnegative");
  }
  return std::nullopt;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Observed: return "observed";
    case Verdict::Excluded: return "excluded";
  }
  return "?";
}

long SuiteResult::asserted() const {
  return std::count_if(records.begin(), records.end(),
                       [](const CheckRecord& r) { return r.verdict == Verdict::Pass || r.verdict == Verdict::Fail; });
}

long SuiteResult::passed() const {
  return std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.verdict == Verdict::Pass; });
}

bool Report::holds() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.holds(); });
}

long Report::asserted() const {
  long n = 0;
  for (const auto& s : suites) n += s.asserted();
  return n;
}

long Report::passed() const {
  long n = 0;
  for (const auto& s : suites) n += s.passed();
  return n;
}

SuiteResult run_named_suite(const std::string& name, const SuiteConfig& config) {
  using Fn = SuiteResult (*)(const SuiteConfig&, const std::string&);
  static const std::map<std::string, Fn> table = {
      {"five-way", five_way},         {"comma-exactness", comma_exactness}, {"pullback-exactness", pullback_exactness},
      {"coend-pi0", coend_pi0},       {"kan-products", kan_products},       {"monoidal", monoidal},
      {"symmetric", symmetric},       {"lax-coend", lax_coend},             {"codescent", codescent_suite},
      {"hard-exactness", hard_exactness}, {"pi0-exactness", pi0_exactness}};
  const auto& sp = spec_of(name);
  SuiteResult s = table.at(name)(config, sp.property);
  s.name = name;
  std::stable_sort(s.records.begin(), s.records.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.digest < b.digest; });
  return s;
}

Report run_suite(const SuiteConfig& config) {
  if (auto e = check_config(config)) throw *e;
  Report r;
  r.config = config;
  for (const auto& name : config.suites.empty() ? suite_names() : config.suites)
    r.suites.push_back(run_named_suite(name, config));
  return r;
}

json to_json(const Report& r) {
  json suites = json::array();
  for (const auto& s : r.suites) {
    json recs = json::array();
    for (const auto& c : s.records)
      recs.push_back({{"check", c.check},
                      {"property", c.property},
                      {"digest", c.digest},
                      {"verdict", verdict_name(c.verdict)},
                      {"certificate", c.certificate}});
    suites.push_back({{"name", s.name},
                      {"asserted", s.asserted()},
                      {"passed", s.passed()},
                      {"counts", s.counts},
                      {"records", recs}});
  }
  return {{"seed", r.config.seed},
          {"gen_arrows", r.config.gen_arrows},
          {"suites", suites},
          {"summary", {{"asserted", r.asserted()}, {"passed", r.passed()}, {"holds", r.holds()}}}};
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  for (const auto& s : r.suites) {
    out << s.name << ": " << s.passed() << "/" << s.asserted() << " passed";
    for (const auto& [k, v] : s.counts) out << ", " << k << " " << v;
    out << (s.holds() ? "" : "  FAILED") << "\n";
    std::map<std::string, long> observed;
    for (const auto& c : s.records)
      if (c.verdict == Verdict::Observed || c.verdict == Verdict::Excluded)
        ++observed[c.check + " " + verdict_name(c.verdict)];
    for (const auto& [k, v] : observed) out << "  " << k << ": " << v << "\n";
    for (const auto& c : s.records)
      if (c.verdict == Verdict::Fail) out << "  fail " << c.check << " " << c.digest << " " << c.certificate.dump() << "\n";
  }
  out << "total: " << r.passed() << "/" << r.asserted() << " passed\n";
  return out.str();
}

}  // namespace exq
