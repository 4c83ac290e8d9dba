#include "exq/exact.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "exq/gen.hpp"
#include "exq/profun.hpp"

namespace exq {

FactCategory fact_category(const LaxSquare& sq, int a, int gamma, int b) {
  const auto& P = *sq.P;
  const auto& A = *sq.A;
  const auto& B = *sq.B;
  const auto& C = *sq.C;
  if (C.src(gamma) != sq.f.obj[a] || C.tgt(gamma) != sq.g.obj[b])
    throw Error(ErrorKind::EndpointMismatch, C.arrow_id(gamma) + " is not an arrow fa -> gb");
  FactCategory out;
  std::vector<std::string> names;
  std::map<std::array<int, 3>, int> index;  // (x, α, β)
  for (int x = 0; x < P.num_objects(); ++x)
    for (int al : A.hom(a, sq.p.obj[x]))
      for (int be : B.hom(sq.q.obj[x], b)) {
        if (C.compose(sq.g.arr[be], C.compose(sq.phi.comp[x], sq.f.arr[al])) != gamma) continue;
        index[{x, al, be}] = static_cast<int>(out.objects.size());
        out.objects.push_back({al, x, be});
        names.push_back(tuple_id({A.arrow_id(al), P.object(x), B.arrow_id(be)}));
      }
  std::vector<ArrowRec> arrows;
  std::vector<int> ids(out.objects.size(), -1);
  std::map<std::array<int, 3>, int> arrow_index;  // (src, tgt, δ)
  for (int o = 0; o < static_cast<int>(out.objects.size()); ++o) {
    const auto [al, x, be] = out.objects[o];
    for (int d : P.out(x)) {
      const int x2 = P.tgt(d);
      const int al2 = A.compose(sq.p.arr[d], al);
      for (int be2 : B.hom(sq.q.obj[x2], b)) {
        if (B.compose(be2, sq.q.arr[d]) != be) continue;
        const int o2 = index.at({x2, al2, be2});
        if (o2 == o && P.is_identity(d)) ids[o] = static_cast<int>(arrows.size());
        arrow_index[{o, o2, d}] = static_cast<int>(arrows.size());
        arrows.push_back({P.arrow_id(d) + ":" + names[o] + "->" + names[o2], o, o2});
        out.delta.push_back(d);
      }
    }
  }
  const auto& delta = out.delta;
  out.cat = make_cat(FinCategory(names, arrows, ids, [&](int k2, int k1) {
    return arrow_index.at({arrows[k1].src, arrows[k2].tgt, P.compose(delta[k2], delta[k1])});
  }));
  return out;
}

namespace {

// First γ in hom(fa, gb) whose Fact category is empty or disconnected, or -1.
int first_failure(const LaxSquare& sq, const std::vector<int>& posA, const std::vector<int>& posB,
                  const std::vector<int>& posC, int a, int b) {
  const auto& P = *sq.P;
  const auto& A = *sq.A;
  const auto& B = *sq.B;
  const auto& C = *sq.C;
  auto gammas = C.hom(sq.f.obj[a], sq.g.obj[b]);
  if (gammas.empty()) return -1;
  const int np = P.num_objects();
  std::vector<int> base(np + 1, 0), width(np, 0);
  for (int x = 0; x < np; ++x) {
    width[x] = static_cast<int>(A.hom(a, sq.p.obj[x]).size());
    base[x + 1] = base[x] + width[x] * static_cast<int>(B.hom(sq.q.obj[x], b).size());
  }
  const int n = base[np];
  std::vector<int> value(n);
  for (int x = 0; x < np; ++x) {
    auto hb = B.hom(sq.q.obj[x], b);
    auto ha = A.hom(a, sq.p.obj[x]);
    for (std::size_t i = 0; i < hb.size(); ++i)
      for (std::size_t j = 0; j < ha.size(); ++j)
        value[base[x] + i * width[x] + j] =
            posC[C.compose(sq.g.arr[hb[i]], C.compose(sq.phi.comp[x], sq.f.arr[ha[j]]))];
  }
  UnionFind uf(n);
  for (int d = 0; d < P.num_arrows(); ++d) {
    if (P.is_identity(d)) continue;
    const int x = P.src(d), x2 = P.tgt(d);
    auto ha = A.hom(a, sq.p.obj[x]);
    for (int be2 : B.hom(sq.q.obj[x2], b)) {
      const int be = posB[B.compose(be2, sq.q.arr[d])];
      for (std::size_t j = 0; j < ha.size(); ++j) {
        const int al2 = posA[A.compose(sq.p.arr[d], ha[j])];
        uf.unite(base[x] + be * width[x] + static_cast<int>(j), base[x2] + posB[be2] * width[x2] + al2);
      }
    }
  }
  // one root per γ means exactly one component
  std::vector<int> root(gammas.size(), -1);
  std::vector<bool> bad(gammas.size(), false);
  for (int o = 0; o < n; ++o) {
    int r = uf.find(o);
    int& slot = root[value[o]];
    if (slot < 0) slot = r;
    else if (slot != r) bad[value[o]] = true;
  }
  for (std::size_t k = 0; k < gammas.size(); ++k)
    if (root[k] < 0 || bad[k]) return gammas[k];
  return -1;
}

ExactResult with_witness(const LaxSquare& sq, int a, int gamma, int b) {
  ExactResult r;
  r.exact = false;
  auto fc = fact_category(sq, a, gamma, b);
  r.witness = ExactCertificate{a, gamma, b, pi0(*fc.cat)};
  return r;
}

}  // namespace

ExactResult is_exact(const LaxSquare& sq) {
  const int na = sq.A->num_objects(), nb = sq.B->num_objects();
  auto posA = hom_positions(*sq.A);
  auto posB = hom_positions(*sq.B);
  auto posC = hom_positions(*sq.C);
  std::vector<int> fail(static_cast<std::size_t>(na) * nb, -1);
#pragma omp parallel for schedule(dynamic)
  for (int k = 0; k < na * nb; ++k) fail[k] = first_failure(sq, posA, posB, posC, k / nb, k % nb);
  for (int k = 0; k < na * nb; ++k)
    if (fail[k] >= 0) return with_witness(sq, k / nb, fail[k], k % nb);
  return {};
}

ExactResult is_exact_serial(const LaxSquare& sq) {
  const auto& C = *sq.C;
  for (int a = 0; a < sq.A->num_objects(); ++a)
    for (int b = 0; b < sq.B->num_objects(); ++b)
      for (int gamma : C.hom(sq.f.obj[a], sq.g.obj[b])) {
        auto fc = fact_category(sq, a, gamma, b);
        if (fc.cat->num_objects() == 0 || !is_connected(*fc.cat)) return with_witness(sq, a, gamma, b);
      }
  return {};
}

bool is_exact_via_profunctor(const LaxSquare& sq, const Caps& caps) { return phi_tilde(sq, caps).iso; }

namespace {

// The arrow of `target` from s to t that `proj` sends to `image`.
int lift_arrow(const FinCategory& target, const FinFunctor& proj, int s, int t, int image) {
  for (int k : target.hom(s, t))
    if (proj.arr[k] == image) return k;
  throw Error(ErrorKind::FunctorLawViolation, "induced functor has no image arrow");
}

}  // namespace

FinFunctor induced_initial(const LaxSquare& sq, int a) {
  auto one = make_cat(terminal_category());
  const auto& C = *sq.C;
  auto src = comma(constant_functor(one, sq.A, a), sq.p);                   // (*, α: a -> px, x)
  auto tgt = comma(constant_functor(one, sq.C, sq.f.obj[a]), sq.g);          // (*, γ: fa -> gb, b)
  std::unordered_map<long, int> where;
  for (int o = 0; o < static_cast<int>(tgt.triples.size()); ++o)
    where[static_cast<long>(tgt.triples[o][1]) * sq.B->num_objects() + tgt.triples[o][2]] = o;
  FinFunctor u{src.apex, tgt.apex, {}, {}};
  for (const auto& [s, al, x] : src.triples) {
    int c = C.compose(sq.phi.comp[x], sq.f.arr[al]);
    u.obj.push_back(where.at(static_cast<long>(c) * sq.B->num_objects() + sq.q.obj[x]));
  }
  const auto& D = *src.apex;
  for (int k = 0; k < D.num_arrows(); ++k)
    u.arr.push_back(lift_arrow(*tgt.apex, tgt.proj_right, u.obj[D.src(k)], u.obj[D.tgt(k)],
                               sq.q.arr[src.proj_right.arr[k]]));
  return u;
}

bool is_exact_via_initial(const LaxSquare& sq) {
  for (int a = 0; a < sq.A->num_objects(); ++a)
    if (!is_initial_functor(induced_initial(sq, a))) return false;
  return true;
}

FinFunctor induced_final(const LaxSquare& sq, int b) {
  auto one = make_cat(terminal_category());
  const auto& C = *sq.C;
  auto src = comma(sq.q, constant_functor(one, sq.B, b));                   // (x, β: qx -> b, *)
  auto tgt = comma(sq.f, constant_functor(one, sq.C, sq.g.obj[b]));          // (a, γ: fa -> gb, *)
  std::unordered_map<long, int> where;
  for (int o = 0; o < static_cast<int>(tgt.triples.size()); ++o)
    where[static_cast<long>(tgt.triples[o][1]) * sq.A->num_objects() + tgt.triples[o][0]] = o;
  FinFunctor u{src.apex, tgt.apex, {}, {}};
  for (const auto& [x, be, s] : src.triples) {
    int c = C.compose(sq.g.arr[be], sq.phi.comp[x]);
    u.obj.push_back(where.at(static_cast<long>(c) * sq.A->num_objects() + sq.p.obj[x]));
  }
  const auto& D = *src.apex;
  for (int k = 0; k < D.num_arrows(); ++k)
    u.arr.push_back(lift_arrow(*tgt.apex, tgt.proj_left, u.obj[D.src(k)], u.obj[D.tgt(k)],
                               sq.p.arr[src.proj_left.arr[k]]));
  return u;
}

bool is_exact_via_final(const LaxSquare& sq) {
  for (int b = 0; b < sq.B->num_objects(); ++b)
    if (!is_final_functor(induced_final(sq, b))) return false;
  return true;
}

KanTransportResult kan_transport(const LaxSquare& sq, const Caps& caps) {
  const auto& B = *sq.B;
  const auto& C = *sq.C;
  LanPlan along_f(sq.f), along_q(sq.q);
  auto posC = hom_positions(C);
  KanTransportResult res;
  // Index of the first b at which the comparison for h fails, or -1.
  auto failing_b = [&](const SetFunctor& h) {
    auto lf = left_kan(along_f, h, caps);
    auto hp = compose(h, sq.p);
    auto lq = left_kan(along_q, hp, caps);
    for (int b = 0; b < B.num_objects(); ++b) {
      const int gb = sq.g.obj[b];
      std::vector<int> m(lq.extension.size[b], -1);
      bool ok = lq.extension.size[b] == lf.extension.size[gb];
      const auto& ent = along_q.entries[b];
      for (std::size_t e = 0; e < ent.size() && ok; ++e) {
        const auto [x, be] = ent[e];
        const int c = posC[C.compose(sq.g.arr[be], sq.phi.comp[x])];
        for (int s = 0; s < hp.size[x] && ok; ++s) {
          int cls = lq.raw_class[b][lq.raw_start[b][e] + s];
          int v = lf.class_of(along_f, gb, sq.p.obj[x], c, s);
          if (m[cls] < 0) m[cls] = v;
          else ok = m[cls] == v;
        }
      }
      std::vector<bool> hit(ok ? lf.extension.size[gb] : 0, false);
      for (int v : m) {
        if (!ok) break;
        if (v < 0 || hit[v]) ok = false;
        else hit[v] = true;
      }
      if (!ok) return b;
    }
    return -1;
  };
  auto fail = [&](const SetFunctor& h, int b) {
    res.holds = false;
    res.witness = h;
    res.witness_b = b;
  };
  for_each_set_functor(
      sq.A, caps.kan_set_size,
      [&](const SetFunctor& h) {
        if (!is_connected_set_functor(h)) return true;
        ++res.functors_tried;
        if (int b = failing_b(h); b >= 0) {
          res.small_family_holds = false;
          fail(h, b);
          return false;
        }
        return true;
      },
      caps.max_set_functors);
  for (int a = 0; a < sq.A->num_objects() && res.holds; ++a) {
    auto h = representable(sq.A, a);
    if (*std::max_element(h.size.begin(), h.size.end()) <= caps.kan_set_size) continue;
    ++res.functors_tried;
    if (int b = failing_b(h); b >= 0) fail(h, b);
  }
  return res;
}

bool is_exact_via_kan_transport(const LaxSquare& sq, const Caps& caps) { return kan_transport(sq, caps).holds; }

bool is_exact_via_right_kan(const LaxSquare& sq, const Caps& caps) {
  return kan_transport(dual_square(sq), caps).holds;
}

MethodVerdicts all_methods(const LaxSquare& sq, const Caps& caps) {
  return {is_exact(sq).exact,        is_exact_via_profunctor(sq, caps),  is_exact_via_initial(sq),
          is_exact_via_final(sq),    is_exact_via_kan_transport(sq, caps), is_exact_via_right_kan(sq, caps)};
}

}  // namespace exq

namespace exq {

namespace {

Cat small_factor(Rng& rng) {
  switch (rng.uniform(0, 4)) {
    case 0: return make_cat(terminal_category());
    case 1: return make_cat(walking_arrow());
    case 2: return make_cat(discrete_category(2));
    case 3: return make_cat(cyclic_group_category(2));
    default: return make_cat(chain_category(3));
  }
}

// Opfibrations into c; `desc` names the construction.
FinFunctor draw_opfibration(Rng& rng, const Cat& c, std::string& desc) {
  for (;;) {
    switch (rng.uniform(0, 3)) {
      case 0:
        desc = "projection";
        return product(c, small_factor(rng)).pi1;
      case 1:
        desc = "elements";
        return discrete_opfibration_of(random_set_functor(rng, c, 2));
      case 2: {
        desc = "composite";
        const auto e = discrete_opfibration_of(random_set_functor(rng, c, 2));
        return compose(e, product(e.source, small_factor(rng)).pi1);
      }
      default:
        for (int t = 0; t < 30; ++t) {
          auto u = random_functor(rng, random_category(rng, 8), c);
          if (u && is_opfibration(*u) && u->source->num_objects() > 0) {
            desc = "searched";
            return *u;
          }
        }
    }
  }
}

FinFunctor other_leg(Rng& rng, const Cat& c) {
  for (int t = 0; t < 30; ++t) {
    auto u = random_functor(rng, random_category(rng, 6), c);
    if (u) return *u;
  }
  return identity_functor(c);
}

// e: E -> P with a fully faithful adjoint, verified.
std::optional<FinFunctor> ff_adjoint_functor(Rng& rng, const Cat& p) {
  const Cat t = rng.coin() ? make_cat(chain_category(rng.uniform(2, 3))) : make_cat(free_category(3, {{0, 2}, {1, 2}}));
  auto pr = rng.coin() ? product(p, t) : product(p, make_cat(opposite(*t)));
  const FinFunctor e = pr.pi1;
  if (pr.cat->num_arrows() > Caps{}.max_arrows) return std::nullopt;
  auto adj = find_right_adjoint(e);
  if (adj && is_full_and_faithful(adj->right)) return e;
  adj = find_left_adjoint(e);
  if (adj && is_full_and_faithful(adj->left)) return e;
  return std::nullopt;
}

}  // namespace

LaxSquare pullback_counterexample() {
  const auto one = make_cat(terminal_category());
  const auto two = make_cat(walking_arrow());
  return pullback_square(constant_functor(one, two, 0), constant_functor(one, two, 1));
}

PullbackRow pullback_row(std::uint64_t seed) {
  PullbackRow row;
  row.seed = seed;
  Rng rng(seed);
  try {
    const bool fib_g = rng.coin();
    Cat c = random_category(rng, 6);
    std::string desc;
    FinFunctor f, g;
    if (fib_g) {
      // fibrations into c are opfibrations into c^op
      const Cat cop = make_cat(opposite(*c));
      const auto u = draw_opfibration(rng, cop, desc);
      g = opposite(u, make_cat(opposite(*u.source)), c);
      f = other_leg(rng, c);
      if (!is_fibration(g)) throw Error(ErrorKind::LawViolation, "generated g is not a fibration");
      row.description = "g fibration (" + desc + ")";
    } else {
      f = draw_opfibration(rng, c, desc);
      g = other_leg(rng, c);
      if (!is_opfibration(f)) throw Error(ErrorKind::LawViolation, "generated f is not an opfibration");
      row.description = "f opfibration (" + desc + ")";
    }
    const auto sq = pullback_square(f, g);
    row.exact = is_exact(sq).exact;
    row.transpose_exact = is_exact(transpose_square(sq)).exact;
    row.iso_comma_exact = is_exact(iso_comma_square(f, g)).exact;
    if (sq.P->num_arrows() <= 10) {
      if (auto e = ff_adjoint_functor(rng, sq.P)) {
        row.precompose_checked = true;
        row.precompose_exact = is_exact(precompose_apex(sq, *e)).exact;
      }
    }
  } catch (const Error& e) {
    row.note = e.what();
    row.exact = row.iso_comma_exact = false;
  }
  return row;
}

PullbackSuiteReport pullback_exactness_suite(std::uint64_t seed, int n) {
  PullbackSuiteReport rep;
  rep.rows.resize(std::max(n, 0));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) rep.rows[i] = pullback_row(instance_seed(seed, static_cast<std::uint64_t>(i)));
  for (const auto& r : rep.rows) {
    rep.passed += r.exact;
    rep.iso_comma_passed += r.iso_comma_exact;
    rep.precomposed += r.precompose_checked;
    rep.precompose_passed += r.precompose_checked && r.precompose_exact;
    rep.orientation_dependent += r.exact != r.transpose_exact;
  }
  const auto cx = pullback_counterexample();
  rep.counterexample_non_exact = !is_exact(cx).exact;
  rep.counterexample_legs_rejected = !is_opfibration(cx.f) && !is_fibration(cx.g);
  return rep;
}

}  // namespace exq
