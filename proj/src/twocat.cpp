#include "exq/twocat.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "exq/kan.hpp"

namespace exq {

Fin2Category::Fin2Category(Cat one, Cat two, const HcompFn& hcomp) : one_(std::move(one)), two_(std::move(two)) {
  const int n = one_->num_objects(), m = two_->num_arrows();
  from_.assign(n, {});
  pos_.assign(m, 0);
  for (int t = 0; t < m; ++t) {
    auto& bucket = from_[obj_src(t)];
    pos_[t] = static_cast<int>(bucket.size());
    bucket.push_back(t);
  }
  offset_.assign(m, 0);
  std::size_t total = 0;
  for (int t = 0; t < m; ++t) {
    offset_[t] = total;
    total += from_[obj_tgt(t)].size();
  }
  table_.assign(total, -1);
  for (int a = 0; a < m; ++a)
    for (int b : from_[obj_tgt(a)]) table_[offset_[a] + pos_[b]] = hcomp(b, a);
}

std::optional<Error> check_2category(const Fin2Category& x, bool units) {
  auto law = [](const std::string& s) { return Error(ErrorKind::LawViolation, s); };
  if (auto e = check_category_laws(*x.one(), units)) return e;
  if (auto e = check_category_laws(*x.two())) return e;
  const auto& one = *x.one();
  const auto& two = *x.two();
  if (two.num_objects() != one.num_arrows()) return law("2-cells must be arrows between the 1-cells");
  const int m = x.num_two_cells();
  for (int t = 0; t < m; ++t) {
    const int f = two.src(t), g = two.tgt(t);
    if (one.src(f) != one.src(g) || one.tgt(f) != one.tgt(g))
      return law("2-cell " + two.arrow_id(t) + " joins non-parallel 1-cells");
  }
  for (int a = 0; a < m; ++a)
    for (int b : x.two_cells_from(x.obj_tgt(a))) {
      const int h = x.hcomp(b, a);
      if (h < 0 || h >= m) return law("missing horizontal composite " + two.arrow_id(b) + "*" + two.arrow_id(a));
      if (two.src(h) != one.compose(two.src(b), two.src(a)) || two.tgt(h) != one.compose(two.tgt(b), two.tgt(a)))
        return law("horizontal composite " + two.arrow_id(b) + "*" + two.arrow_id(a) + " is mistyped");
    }
  for (int f = 0; f < one.num_arrows(); ++f)
    for (int g : one.out(one.tgt(f)))
      if (x.hcomp(x.id2(g), x.id2(f)) != x.id2(one.compose(g, f)))
        return law("identity 2-cells of " + one.arrow_id(g) + " and " + one.arrow_id(f) + " do not compose");
  for (int a = 0; units && a < m; ++a) {
    if (x.hcomp(x.id2(one.id(x.obj_tgt(a))), a) != a || x.hcomp(a, x.id2(one.id(x.obj_src(a)))) != a)
      return law("unit law fails at " + two.arrow_id(a));
  }
  for (int a = 0; a < m; ++a)
    for (int b : x.two_cells_from(x.obj_tgt(a)))
      for (int c : x.two_cells_from(x.obj_tgt(b)))
        if (x.hcomp(c, x.hcomp(b, a)) != x.hcomp(x.hcomp(c, b), a))
          return law("horizontal associativity fails at " + two.arrow_id(c) + "," + two.arrow_id(b) + "," +
                     two.arrow_id(a));
  for (int a = 0; a < m; ++a)
    for (int a2 : two.out(two.tgt(a)))
      for (int b : x.two_cells_from(x.obj_tgt(a)))
        for (int b2 : two.out(two.tgt(b)))
          if (x.hcomp(x.vcomp(b2, b), x.vcomp(a2, a)) != x.vcomp(x.hcomp(b2, a2), x.hcomp(b, a)))
            return law("interchange fails at " + two.arrow_id(a) + "," + two.arrow_id(a2) + "," + two.arrow_id(b) +
                       "," + two.arrow_id(b2));
  return std::nullopt;
}

Fin2Category locally_discrete(const Cat& c) {
  std::vector<ArrowRec> arrs;
  std::vector<int> ids;
  for (int f = 0; f < c->num_arrows(); ++f) {
    arrs.push_back({c->arrow_id(f), f, f});
    ids.push_back(f);
  }
  std::vector<std::string> objs;
  for (int f = 0; f < c->num_arrows(); ++f) objs.push_back(c->arrow_id(f));
  auto two = make_cat(FinCategory(objs, arrs, ids, [](int g, int) { return g; }));
  return Fin2Category(c, two, [&](int b, int a) { return c->compose(b, a); });
}

Fin2Category locally_posetal(const Cat& c, const std::vector<std::vector<bool>>& leq) {
  const int m = c->num_arrows();
  std::vector<std::vector<int>> index(m, std::vector<int>(m, -1));
  std::vector<ArrowRec> arrs;
  std::vector<std::string> objs;
  for (int f = 0; f < m; ++f) objs.push_back(c->arrow_id(f));
  for (int f = 0; f < m; ++f)
    for (int g : c->hom(c->src(f), c->tgt(f)))
      if (leq[f][g]) {
        index[f][g] = static_cast<int>(arrs.size());
        arrs.push_back({f == g ? "1_" + c->arrow_id(f) : tuple_id({c->arrow_id(f), c->arrow_id(g)}), f, g});
      }
  std::vector<int> ids;
  for (int f = 0; f < m; ++f) ids.push_back(index[f][f]);
  auto two = make_cat(FinCategory(objs, arrs, ids, [&](int b, int a) { return index[arrs[a].src][arrs[b].tgt]; }));
  return Fin2Category(c, two, [&](int b, int a) {
    return index[c->compose(arrs[b].src, arrs[a].src)][c->compose(arrs[b].tgt, arrs[a].tgt)];
  });
}

std::vector<std::vector<bool>> compatible_preorder(const FinCategory& c, const std::vector<std::pair<int, int>>& pairs) {
  const int m = c.num_arrows();
  std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
  for (int f = 0; f < m; ++f) leq[f][f] = true;
  for (auto [f, g] : pairs) {
    if (c.src(f) != c.src(g) || c.tgt(f) != c.tgt(g))
      throw Error(ErrorKind::EndpointMismatch, "2-cell between non-parallel 1-cells " + c.arrow_id(f) + ", " + c.arrow_id(g));
    leq[f][g] = true;
  }
  for (bool changed = true; changed;) {
    changed = false;
    auto set = [&](int f, int g) {
      if (!leq[f][g]) leq[f][g] = changed = true;
    };
    for (int f = 0; f < m; ++f)
      for (int g : c.hom(c.src(f), c.tgt(f))) {
        if (!leq[f][g]) continue;
        for (int h : c.hom(c.src(f), c.tgt(f)))
          if (leq[g][h]) set(f, h);
        for (int k : c.out(c.tgt(f))) set(c.compose(k, f), c.compose(k, g));
        for (int k : c.in(c.src(f))) set(c.compose(f, k), c.compose(g, k));
      }
  }
  return leq;
}

HomCategory hom_category(const Fin2Category& x, int a, int b) {
  const auto& one = *x.one();
  const auto& two = *x.two();
  HomCategory h;
  h.local.assign(x.num_cells(), -1);
  h.local2.assign(x.num_two_cells(), -1);
  std::vector<std::string> objs;
  for (int f : one.hom(a, b)) {
    h.local[f] = static_cast<int>(h.cells.size());
    h.cells.push_back(f);
    objs.push_back(one.arrow_id(f));
  }
  std::vector<ArrowRec> arrs;
  for (int f : h.cells)
    for (int t : two.out(f)) {
      h.local2[t] = static_cast<int>(h.two_cells.size());
      h.two_cells.push_back(t);
      arrs.push_back({two.arrow_id(t), h.local[f], h.local[two.tgt(t)]});
    }
  std::vector<int> ids;
  for (int f : h.cells) ids.push_back(h.local2[two.id(f)]);
  h.cat = make_cat(FinCategory(objs, arrs, ids, [&](int g, int f) {
    return h.local2[two.compose(h.two_cells[g], h.two_cells[f])];
  }));
  return h;
}

std::optional<Error> check_2functor(const Fin2Functor& f) {
  const auto& s = *f.source;
  const auto& t = *f.target;
  if (static_cast<int>(f.obj.size()) != s.num_objects() || static_cast<int>(f.one.size()) != s.num_cells() ||
      static_cast<int>(f.two.size()) != s.num_two_cells())
    return Error(ErrorKind::FunctorLawViolation, "2-functor tables have the wrong size");
  if (auto e = check_functor(FinFunctor{s.one(), t.one(), f.obj, f.one})) return e;
  if (auto e = check_functor(FinFunctor{s.two(), t.two(), f.one, f.two})) return e;
  for (int a = 0; a < s.num_two_cells(); ++a)
    for (int b : s.two_cells_from(s.obj_tgt(a)))
      if (f.two[s.hcomp(b, a)] != t.hcomp(f.two[b], f.two[a]))
        return Error(ErrorKind::FunctorLawViolation,
                     "horizontal composite " + s.two()->arrow_id(b) + "*" + s.two()->arrow_id(a) + " not preserved");
  return std::nullopt;
}

Fin2Functor identity_2functor(const Cat2& c) {
  Fin2Functor f{c, c, {}, {}, {}};
  f.obj.resize(c->num_objects());
  f.one.resize(c->num_cells());
  f.two.resize(c->num_two_cells());
  std::iota(f.obj.begin(), f.obj.end(), 0);
  std::iota(f.one.begin(), f.one.end(), 0);
  std::iota(f.two.begin(), f.two.end(), 0);
  return f;
}

Fin2Functor d_star(const FinFunctor& f, const Cat2& source, const Cat2& target) {
  return Fin2Functor{source, target, f.obj, f.arr, f.arr};
}

Pi0Star pi0_star(const Fin2Category& x) {
  const auto& one = *x.one();
  const int m = x.num_cells();
  UnionFind uf(m);
  for (int t = 0; t < x.num_two_cells(); ++t) uf.unite(x.cell_src(t), x.cell_tgt(t));
  Pi0Star p;
  p.cls.assign(m, -1);
  std::vector<int> rep;
  std::vector<ArrowRec> arrs;
  for (int f = 0; f < m; ++f) {
    const int r = uf.find(f);
    if (r == f) {
      p.cls[f] = static_cast<int>(rep.size());
      rep.push_back(f);
      arrs.push_back(one.arrow(f));
    } else {
      p.cls[f] = p.cls[r];
    }
  }
  for (int f = 0; f < m; ++f)
    for (int g : one.out(one.tgt(f)))
      if (p.cls[one.compose(g, f)] != p.cls[one.compose(rep[p.cls[g]], rep[p.cls[f]])])
        throw Error(ErrorKind::IllDefinedComposition,
                    "classes of " + one.arrow_id(g) + " and " + one.arrow_id(f) + " do not compose");
  std::vector<int> ids;
  for (int o = 0; o < one.num_objects(); ++o) ids.push_back(p.cls[one.id(o)]);
  p.cat = make_cat(FinCategory(one.objects(), arrs, ids, [&](int g, int f) { return p.cls[one.compose(rep[g], rep[f])]; }));
  return p;
}

FinFunctor pi0_comparison(const Fin2Category& x, const Pi0Star& p) {
  FinFunctor c{x.one(), p.cat, std::vector<int>(x.num_objects()), p.cls};
  std::iota(c.obj.begin(), c.obj.end(), 0);
  return c;
}

FinFunctor pi0_star(const Fin2Functor& f, const Pi0Star& source, const Pi0Star& target) {
  FinFunctor r{source.cat, target.cat, f.obj, std::vector<int>(source.cat->num_arrows(), -1)};
  for (std::size_t c = 0; c < source.cls.size(); ++c)
    if (r.arr[source.cls[c]] < 0) r.arr[source.cls[c]] = target.cls[f.one[c]];
  return r;
}

namespace {

std::pair<bool, bool> pi0_bijectivity(const FinFunctor& h) {
  const auto ps = pi0(*h.source), pt = pi0(*h.target);
  std::vector<int> img(ps.count, -1);
  std::vector<char> hit(pt.count, 0);
  bool injective = true;
  for (int x = 0; x < h.source->num_objects(); ++x) {
    const int c = ps.label[x];
    if (img[c] >= 0) continue;
    img[c] = pt.label[h.obj[x]];
    if (hit[img[c]]) injective = false;
    hit[img[c]] = 1;
  }
  const bool surjective = std::all_of(hit.begin(), hit.end(), [](char v) { return v != 0; });
  return {surjective, injective};
}

// β∘α for α: F => F', β: G => G' with G after F.
NatTransform hnat(const NatTransform& beta, const NatTransform& alpha) {
  return vcompose(whisker_right(beta, alpha.to), whisker_left(beta.from, alpha));
}

}  // namespace

bool inverted_by_pi0(const FinFunctor& h) {
  auto [s, i] = pi0_bijectivity(h);
  return s && i;
}

std::optional<Error> check_square2(const LaxSquare2& sq) {
  auto bad = [](const std::string& s) { return Error(ErrorKind::EndpointMismatch, s); };
  if (sq.p.source != sq.P || sq.q.source != sq.P || sq.p.target != sq.A || sq.q.target != sq.B ||
      sq.f.source != sq.A || sq.g.source != sq.B || sq.f.target != sq.C || sq.g.target != sq.C)
    return bad("2-functors do not form a square");
  for (auto* F : {&sq.p, &sq.q, &sq.f, &sq.g})
    if (auto e = check_2functor(*F)) return e;
  const auto& P = *sq.P;
  const auto& C = *sq.C;
  const auto& c1 = *C.one();
  if (static_cast<int>(sq.phi.size()) != P.num_objects()) return bad("φ needs one component per object");
  for (int x = 0; x < P.num_objects(); ++x) {
    const int u = sq.phi[x];
    if (u < 0 || u >= C.num_cells() || c1.src(u) != sq.f.obj[sq.p.obj[x]] || c1.tgt(u) != sq.g.obj[sq.q.obj[x]])
      return bad("component of φ at " + P.one()->object(x) + " is mistyped");
  }
  for (int h = 0; h < P.num_cells(); ++h) {
    const int x = P.one()->src(h), y = P.one()->tgt(h);
    if (c1.compose(sq.g.one[sq.q.one[h]], sq.phi[x]) != c1.compose(sq.phi[y], sq.f.one[sq.p.one[h]]))
      return Error(ErrorKind::NaturalityViolation, "φ is not natural at " + P.one()->arrow_id(h));
  }
  for (int a = 0; a < P.num_two_cells(); ++a) {
    const int x = P.obj_src(a), y = P.obj_tgt(a);
    if (C.hcomp(C.id2(sq.phi[y]), sq.f.two[sq.p.two[a]]) != C.hcomp(sq.g.two[sq.q.two[a]], C.id2(sq.phi[x])))
      return Error(ErrorKind::NaturalityViolation, "φ is not 2-natural at " + P.two()->arrow_id(a));
  }
  return std::nullopt;
}

LaxSquare2 d_star(const LaxSquare& sq) {
  std::vector<std::pair<Cat, Cat2>> made;
  auto lift = [&](const Cat& c) {
    for (auto& [k, v] : made)
      if (k == c) return v;
    made.emplace_back(c, make_cat2(locally_discrete(c)));
    return made.back().second;
  };
  LaxSquare2 r;
  r.P = lift(sq.P);
  r.A = lift(sq.A);
  r.B = lift(sq.B);
  r.C = lift(sq.C);
  r.p = d_star(sq.p, r.P, r.A);
  r.q = d_star(sq.q, r.P, r.B);
  r.f = d_star(sq.f, r.A, r.C);
  r.g = d_star(sq.g, r.B, r.C);
  r.phi = sq.phi.comp;
  return r;
}

CFunctor c_functor(const LaxSquare2& sq, int a, int b) {
  const auto& P = *sq.P;
  const auto& A = *sq.A;
  const auto& B = *sq.B;
  const auto& C = *sq.C;
  const auto& p1 = *P.one();
  CFunctor r;
  std::vector<std::string> objs;
  std::vector<std::vector<int>> over(P.num_objects());
  for (int x = 0; x < P.num_objects(); ++x)
    for (int y : B.one()->hom(sq.q.obj[x], b))
      for (int z : A.one()->hom(a, sq.p.obj[x])) {
        over[x].push_back(static_cast<int>(r.objects.size()));
        r.objects.push_back({x, y, z});
        objs.push_back(tuple_id({p1.object(x), B.one()->arrow_id(y), A.one()->arrow_id(z)}));
      }
  struct Arr {
    int o1, o2, h, h1, h2;
  };
  std::vector<Arr> arrows;
  std::map<std::array<int, 5>, int> index;
  std::vector<ArrowRec> recs;
  for (int h = 0; h < P.num_cells(); ++h) {
    const int qh = sq.q.one[h], ph = sq.p.one[h];
    for (int o1 : over[p1.src(h)])
      for (int o2 : over[p1.tgt(h)]) {
        const auto [x1, y1, z1] = r.objects[o1];
        const auto [x2, y2, z2] = r.objects[o2];
        const int yq = B.one()->compose(y2, qh), pz = A.one()->compose(ph, z1);
        for (int h1 : B.two()->hom(y1, yq))
          for (int h2 : A.two()->hom(pz, z2)) {
            index[{o1, o2, h, h1, h2}] = static_cast<int>(arrows.size());
            arrows.push_back({o1, o2, h, h1, h2});
            recs.push_back({tuple_id({p1.arrow_id(h), B.two()->arrow_id(h1), A.two()->arrow_id(h2),
                                      std::to_string(o1), std::to_string(o2)}),
                            o1, o2});
          }
      }
  }
  std::vector<int> ids;
  for (const auto& [x, y, z] : r.objects) {
    const int o = static_cast<int>(ids.size());
    ids.push_back(index.at({o, o, p1.id(x), B.id2(y), A.id2(z)}));
  }
  r.F = make_cat(FinCategory(objs, recs, ids, [&](int v, int u) {
    const Arr& s = arrows[u];
    const Arr& t = arrows[v];
    const int k1 = B.vcomp(B.hcomp(t.h1, B.id2(sq.q.one[s.h])), s.h1);
    const int k2 = A.vcomp(t.h2, A.hcomp(A.id2(sq.p.one[t.h]), s.h2));
    return index.at({s.o1, t.o2, p1.compose(t.h, s.h), k1, k2});
  }));
  const auto& c1 = *C.one();
  r.target = hom_category(C, sq.f.obj[a], sq.g.obj[b]);
  r.functor = FinFunctor{r.F, r.target.cat, {}, {}};
  for (const auto& [x, y, z] : r.objects)
    r.functor.obj.push_back(r.target.local[c1.compose(sq.g.one[y], c1.compose(sq.phi[x], sq.f.one[z]))]);
  for (const Arr& s : arrows) {
    const auto [x1, y1, z1] = r.objects[s.o1];
    const auto [x2, y2, z2] = r.objects[s.o2];
    const int left = C.hcomp(sq.g.two[s.h1], C.id2(c1.compose(sq.phi[x1], sq.f.one[z1])));
    const int right = C.hcomp(C.id2(c1.compose(sq.g.one[y2], sq.phi[x2])), sq.f.two[s.h2]);
    r.functor.arr.push_back(r.target.local2[C.vcomp(right, left)]);
  }
  return r;
}

Pi0ExactResult is_pi0_exact(const LaxSquare2& sq) {
  if (auto e = check_square2(sq)) throw *e;
  const long na = sq.A->num_objects(), nb = sq.B->num_objects();
  Pi0ExactResult res;
  long best = LONG_MAX;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < na * nb; ++i) {
    const auto cf = c_functor(sq, static_cast<int>(i / nb), static_cast<int>(i % nb));
    const auto [s, inj] = pi0_bijectivity(cf.functor);
    if (!(s && inj)) {
#pragma omp critical
      if (i < best) {
        best = i;
        res = Pi0ExactResult{false, static_cast<int>(i / nb), static_cast<int>(i % nb), s, inj};
      }
    }
  }
  return res;
}

std::optional<Error> check_cat2functor(const Cat2Functor& s) {
  const auto& P = *s.P;
  const auto& one = *P.one();
  const auto& two = *P.two();
  auto fail = [](const std::string& m) { return Error(ErrorKind::FunctorLawViolation, m); };
  if (static_cast<int>(s.value.size()) != P.num_objects() || static_cast<int>(s.on_one.size()) != P.num_cells() ||
      static_cast<int>(s.on_two.size()) != P.num_two_cells())
    return fail("2-functor into Cat has tables of the wrong size");
  for (int f = 0; f < P.num_cells(); ++f) {
    const auto& F = s.on_one[f];
    const int from = s.contravariant ? one.tgt(f) : one.src(f), to = s.contravariant ? one.src(f) : one.tgt(f);
    if (F.source != s.value[from] || F.target != s.value[to]) return fail("image of " + one.arrow_id(f) + " is mistyped");
    if (auto e = check_functor(F)) return e;
  }
  for (int x = 0; x < P.num_objects(); ++x)
    if (!(s.on_one[one.id(x)] == identity_functor(s.value[x])))
      return fail("identity at " + one.object(x) + " not preserved");
  for (int f = 0; f < P.num_cells(); ++f)
    for (int g : one.out(one.tgt(f))) {
      const FinFunctor expect = s.contravariant ? compose(s.on_one[f], s.on_one[g]) : compose(s.on_one[g], s.on_one[f]);
      if (!(s.on_one[one.compose(g, f)] == expect))
        return fail("composite " + one.arrow_id(g) + "∘" + one.arrow_id(f) + " not preserved");
    }
  for (int t = 0; t < P.num_two_cells(); ++t) {
    const auto& n = s.on_two[t];
    if (!(n.from == s.on_one[two.src(t)]) || !(n.to == s.on_one[two.tgt(t)]))
      return fail("image of 2-cell " + two.arrow_id(t) + " is mistyped");
    if (auto e = check_nat(n)) return e;
  }
  for (int f = 0; f < P.num_cells(); ++f)
    if (!(s.on_two[P.id2(f)] == identity_nat(s.on_one[f])))
      return fail("identity 2-cell on " + one.arrow_id(f) + " not preserved");
  for (int t = 0; t < P.num_two_cells(); ++t)
    for (int u : two.out(two.tgt(t)))
      if (!(s.on_two[P.vcomp(u, t)] == vcompose(s.on_two[u], s.on_two[t])))
        return fail("vertical composite " + two.arrow_id(u) + "·" + two.arrow_id(t) + " not preserved");
  for (int a = 0; a < P.num_two_cells(); ++a)
    for (int b : P.two_cells_from(P.obj_tgt(a))) {
      const NatTransform expect = s.contravariant ? hnat(s.on_two[a], s.on_two[b]) : hnat(s.on_two[b], s.on_two[a]);
      if (!(s.on_two[P.hcomp(b, a)] == expect))
        return fail("horizontal composite " + two.arrow_id(b) + "*" + two.arrow_id(a) + " not preserved");
    }
  return std::nullopt;
}

Cat2Functor constant_cat2functor(const Cat2& P, bool contravariant, const Cat& k) {
  Cat2Functor s{P, contravariant, std::vector<Cat>(P->num_objects(), k), {}, {}};
  const auto id = identity_functor(k);
  s.on_one.assign(P->num_cells(), id);
  s.on_two.assign(P->num_two_cells(), identity_nat(id));
  return s;
}

Cat2Functor representable_cat2functor(const Cat2& P, int x0, bool contravariant) {
  const auto& X = *P;
  const auto& one = *X.one();
  const int n = X.num_objects();
  std::vector<HomCategory> H;
  Cat2Functor s{P, contravariant, {}, {}, {}};
  for (int x = 0; x < n; ++x) {
    H.push_back(contravariant ? hom_category(X, x, x0) : hom_category(X, x0, x));
    s.value.push_back(H.back().cat);
  }
  for (int f = 0; f < X.num_cells(); ++f) {
    const int from = contravariant ? one.tgt(f) : one.src(f), to = contravariant ? one.src(f) : one.tgt(f);
    const auto& hs = H[from];
    const auto& ht = H[to];
    FinFunctor F{hs.cat, ht.cat, {}, {}};
    for (int u : hs.cells) F.obj.push_back(ht.local[contravariant ? one.compose(u, f) : one.compose(f, u)]);
    for (int t : hs.two_cells)
      F.arr.push_back(ht.local2[contravariant ? X.hcomp(t, X.id2(f)) : X.hcomp(X.id2(f), t)]);
    s.on_one.push_back(std::move(F));
  }
  for (int a = 0; a < X.num_two_cells(); ++a) {
    const int f = X.cell_src(a), g = X.cell_tgt(a);
    const int from = contravariant ? one.tgt(f) : one.src(f), to = contravariant ? one.src(f) : one.tgt(f);
    NatTransform t{s.on_one[f], s.on_one[g], {}};
    for (int u : H[from].cells)
      t.comp.push_back(H[to].local2[contravariant ? X.hcomp(X.id2(u), a) : X.hcomp(a, X.id2(u))]);
    s.on_two.push_back(std::move(t));
  }
  return s;
}

Cat2Functor product_cat2functor(const Cat2Functor& s, const Cat2Functor& t) {
  if (s.P != t.P || s.contravariant != t.contravariant)
    throw Error(ErrorKind::EndpointMismatch, "product of 2-functors needs a common base and variance");
  const auto& P = *s.P;
  Cat2Functor r{s.P, s.contravariant, {}, {}, {}};
  for (int x = 0; x < P.num_objects(); ++x) r.value.push_back(product(s.value[x], t.value[x]).cat);
  const auto& one = *P.one();
  for (int f = 0; f < P.num_cells(); ++f) {
    const int from = s.contravariant ? one.tgt(f) : one.src(f), to = s.contravariant ? one.src(f) : one.tgt(f);
    r.on_one.push_back(product_functor(s.on_one[f], t.on_one[f], r.value[from], r.value[to]));
  }
  for (int a = 0; a < P.num_two_cells(); ++a) {
    const auto& sa = s.on_two[a];
    const auto& ta = t.on_two[a];
    const int nt = ta.from.source->num_objects(), mt = ta.from.target->num_arrows();
    NatTransform n{r.on_one[P.cell_src(a)], r.on_one[P.cell_tgt(a)], {}};
    for (int o = 0; o < n.from.source->num_objects(); ++o) n.comp.push_back(sa.comp[o / nt] * mt + ta.comp[o % nt]);
    r.on_two.push_back(std::move(n));
  }
  return r;
}

Cat2Functor discrete_cat2functor(const Cat2& P, bool contravariant, const SetFunctor& h) {
  const auto p = pi0_star(*P);
  if (static_cast<int>(h.size.size()) != P->num_objects() || h.source->num_arrows() != p.cat->num_arrows())
    throw Error(ErrorKind::TargetMismatch, "set functor does not live on π0* of the base");
  const auto& one = *P->one();
  Cat2Functor s{P, contravariant, {}, {}, {}};
  for (int x = 0; x < P->num_objects(); ++x) s.value.push_back(make_cat(discrete_category(h.size[x])));
  for (int f = 0; f < P->num_cells(); ++f) {
    const int from = contravariant ? one.tgt(f) : one.src(f), to = contravariant ? one.src(f) : one.tgt(f);
    const auto& m = h.map[p.cls[f]];
    s.on_one.push_back(FinFunctor{s.value[from], s.value[to], m, m});
  }
  for (int a = 0; a < P->num_two_cells(); ++a) {
    NatTransform n{s.on_one[P->cell_src(a)], s.on_one[P->cell_tgt(a)], {}};
    for (int o = 0; o < n.from.source->num_objects(); ++o) n.comp.push_back(n.from.obj[o]);
    s.on_two.push_back(std::move(n));
  }
  return s;
}

int LaxCoendCarrier::object(int x, int y, int z) const { return base[x] + y * t_size[x] + z; }

int LaxCoendCarrier::cell(int f, int y2, int z1, int f1, int f2) const {
  auto it = cell_index.find({f, y2, z1, f1, f2});
  return it == cell_index.end() ? -1 : it->second;
}

int LaxCoendCarrier::two_cell(int src, int tgt, int alpha) const {
  if (src < 0 || tgt < 0) return -1;
  auto it = two_index.find({src, tgt, alpha});
  return it == two_index.end() ? -1 : it->second;
}

LaxCoendCarrier lax_coend_carrier(const Cat2Functor& S, const Cat2Functor& T, const Caps& caps) {
  if (!S.contravariant || T.contravariant)
    throw Error(ErrorKind::InvalidConfig, "lax coend needs S on the opposite base and T on the base");
  if (S.P != T.P) throw Error(ErrorKind::EndpointMismatch, "S and T live on different bases");
  const auto& P = *S.P;
  const auto& p1 = *P.one();
  const auto& p2 = *P.two();
  const int n = P.num_objects();
  LaxCoendCarrier r;
  auto guard = [&](std::size_t k, const char* what) {
    if (static_cast<long>(k) > caps.max_cells)
      throw Error(ErrorKind::SizeLimitExceeded, std::string("lax coend carrier has too many ") + what);
  };
  long total = 0;
  for (int x = 0; x < n; ++x) {
    r.base.push_back(static_cast<int>(total));
    r.t_size.push_back(T.value[x]->num_objects());
    total += static_cast<long>(S.value[x]->num_objects()) * r.t_size[x];
    guard(total, "objects");
  }
  std::vector<std::string> objs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < S.value[x]->num_objects(); ++y)
      for (int z = 0; z < r.t_size[x]; ++z) {
        r.objects.push_back({x, y, z});
        objs.push_back(tuple_id({p1.object(x), S.value[x]->object(y), T.value[x]->object(z)}));
      }
  std::vector<ArrowRec> arrs;
  for (int f = 0; f < P.num_cells(); ++f) {
    const int x1 = p1.src(f), x2 = p1.tgt(f);
    const auto& Sx1 = *S.value[x1];
    const auto& Tx2 = *T.value[x2];
    const auto& Sf = S.on_one[f];
    const auto& Tf = T.on_one[f];
    for (int y2 = 0; y2 < S.value[x2]->num_objects(); ++y2)
      for (int z1 = 0; z1 < r.t_size[x1]; ++z1)
        for (int f1 : Sx1.in(Sf.obj[y2]))
          for (int f2 : Tx2.out(Tf.obj[z1])) {
            r.cell_index[{f, y2, z1, f1, f2}] = static_cast<int>(r.cells.size());
            r.cells.push_back({f, y2, z1, f1, f2});
            arrs.push_back({tuple_id({p1.arrow_id(f), std::to_string(y2), std::to_string(z1), Sx1.arrow_id(f1),
                                      Tx2.arrow_id(f2)}),
                            r.object(x1, Sx1.src(f1), z1), r.object(x2, y2, Tx2.tgt(f2))});
            guard(r.cells.size(), "1-cells");
          }
  }
  std::vector<ArrowRec> arrs2;
  std::vector<std::array<int, 3>> twos;
  for (int c = 0; c < static_cast<int>(r.cells.size()); ++c) {
    const auto [f, y2, z1, f1, f2] = r.cells[c];
    const int x1 = p1.src(f), x2 = p1.tgt(f);
    const auto& Sx1 = *S.value[x1];
    const auto& Tx2 = *T.value[x2];
    for (int a : p2.out(f)) {
      const int g = p2.tgt(a);
      const int g1 = Sx1.compose(S.on_two[a].comp[y2], f1);
      const int ta = T.on_two[a].comp[z1];
      for (int g2 : Tx2.out(T.on_one[g].obj[z1])) {
        if (Tx2.tgt(g2) != Tx2.tgt(f2) || Tx2.compose(g2, ta) != f2) continue;
        const int d = r.cell(g, y2, z1, g1, g2);
        r.two_index[{c, d, a}] = static_cast<int>(twos.size());
        twos.push_back({c, d, a});
        arrs2.push_back({tuple_id({std::to_string(c), std::to_string(d), p2.arrow_id(a)}), c, d});
        guard(twos.size(), "2-cells");
      }
    }
  }
  std::vector<int> ids;
  for (const auto& [x, y, z] : r.objects)
    ids.push_back(r.cell(p1.id(x), y, z, S.value[x]->id(y), T.value[x]->id(z)));
  auto one = make_cat(FinCategory(objs, arrs, ids, [&](int v, int u) {
    const auto [f, y2, z1, f1, f2] = r.cells[u];
    const auto [g, y3, z2, g1, g2] = r.cells[v];
    const int x1 = p1.src(f), x3 = p1.tgt(g);
    return r.cell(p1.compose(g, f), y3, z1, S.value[x1]->compose(S.on_one[f].arr[g1], f1),
                  T.value[x3]->compose(g2, T.on_one[g].arr[f2]));
  }));
  std::vector<std::string> cell_names;
  for (const auto& a : arrs) cell_names.push_back(a.id);
  std::vector<int> ids2;
  for (int c = 0; c < static_cast<int>(r.cells.size()); ++c) ids2.push_back(r.two_cell(c, c, P.id2(r.cells[c][0])));
  auto two = make_cat(FinCategory(cell_names, arrs2, ids2, [&](int v, int u) {
    return r.two_cell(twos[u][0], twos[v][1], P.vcomp(twos[v][2], twos[u][2]));
  }));
  r.carrier = make_cat2(Fin2Category(one, two, [&](int b, int a) {
    return r.two_cell(one->compose(twos[b][0], twos[a][0]), one->compose(twos[b][1], twos[a][1]),
                      P.hcomp(twos[b][2], twos[a][2]));
  }));
  return r;
}

Cat lax_coend(const Cat2Functor& S, const Cat2Functor& T, const Caps& caps) {
  return pi0_star(*lax_coend_carrier(S, T, caps).carrier).cat;
}

CoendOracleResult pi0_coend_oracle(const Cat2Functor& S, const Cat2Functor& T, const Caps& caps) {
  const auto L = lax_coend_carrier(S, T, caps);
  const auto& P = *S.P;
  const auto& p1 = *P.one();
  const int n = P.num_objects();
  std::vector<Partition> ps, pt;
  std::vector<int> start;
  int total = 0;
  for (int x = 0; x < n; ++x) {
    ps.push_back(pi0(*S.value[x]));
    pt.push_back(pi0(*T.value[x]));
    start.push_back(total);
    total += ps[x].count * pt[x].count;
  }
  auto elem = [&](int x, int y, int z) { return start[x] + ps[x].label[y] * pt[x].count + pt[x].label[z]; };
  UnionFind uf(total);
  for (int f = 0; f < P.num_cells(); ++f) {
    const int x1 = p1.src(f), x2 = p1.tgt(f);
    for (int y = 0; y < S.value[x2]->num_objects(); ++y)
      for (int z = 0; z < T.value[x1]->num_objects(); ++z)
        uf.unite(elem(x1, S.on_one[f].obj[y], z), elem(x2, y, T.on_one[f].obj[z]));
  }
  for (int a = 0; a < P.num_two_cells(); ++a) {
    const int f = P.cell_src(a), g = P.cell_tgt(a), x1 = P.obj_src(a), x2 = P.obj_tgt(a);
    for (int y = 0; y < S.value[x2]->num_objects(); ++y)
      for (int z = 0; z < T.value[x1]->num_objects(); ++z) {
        uf.unite(elem(x1, S.on_one[f].obj[y], z), elem(x1, S.on_one[g].obj[y], z));
        uf.unite(elem(x2, y, T.on_one[f].obj[z]), elem(x2, y, T.on_one[g].obj[z]));
      }
  }
  int classes = 0;
  const auto oracle = uf.labels(&classes);
  const auto comps = pi0(*L.carrier->one());
  CoendOracleResult res{classes, comps.count, true};
  std::vector<int> img(comps.count, -1), back(classes, -1);
  for (int o = 0; o < static_cast<int>(L.objects.size()); ++o) {
    const auto [x, y, z] = L.objects[o];
    const int c = comps.label[o], k = oracle[elem(x, y, z)];
    if (img[c] < 0) img[c] = k;
    if (back[k] < 0) back[k] = c;
    if (img[c] != k || back[k] != c) res.bijection = false;
  }
  if (std::find(back.begin(), back.end(), -1) != back.end()) res.bijection = false;
  return res;
}

namespace {

struct WedgeShape {
  const Cat2Functor& S;
  const Cat2Functor& T;
  const LaxCoendCarrier& L;

  const Fin2Category& P() const { return *S.P; }
  int kx(int x, int a, int b) const {
    return L.cell(P().one()->id(x), S.value[x]->tgt(a), T.value[x]->src(b), a, b);
  }
  int kf(int f, int y, int z) const {
    const int x1 = P().one()->src(f), x2 = P().one()->tgt(f);
    return L.cell(f, y, z, S.value[x1]->id(S.on_one[f].obj[y]), T.value[x2]->id(T.on_one[f].obj[z]));
  }
  int ka(int a, int y, int z) const {
    const auto& X = *L.carrier;
    const auto& c = *X.one();
    const int f = P().cell_src(a), g = P().cell_tgt(a), x1 = P().obj_src(a), x2 = P().obj_tgt(a);
    const int src = c.compose(kx(x2, S.value[x2]->id(y), T.on_two[a].comp[z]), kf(f, y, z));
    const int tgt = c.compose(kf(g, y, z), kx(x1, S.on_two[a].comp[y], T.value[x1]->id(z)));
    return L.two_cell(src, tgt, a);
  }
};

std::string lax_wedge_axioms(const WedgeShape& w) {
  const auto& P = w.P();
  const auto& p1 = *P.one();
  const auto& p2 = *P.two();
  const auto& X = *w.L.carrier;
  const auto& c = *X.one();
  const auto& S = w.S;
  const auto& T = w.T;
  auto cmp = [&](int g, int f) { return g < 0 || f < 0 ? -1 : c.compose(g, f); };
  auto hc = [&](int b, int a) { return b < 0 || a < 0 ? -1 : X.hcomp(b, a); };
  auto vc = [&](int b, int a) { return b < 0 || a < 0 ? -1 : X.vcomp(b, a); };
  auto id2 = [&](int f) { return f < 0 ? -1 : X.id2(f); };
  for (int x = 0; x < P.num_objects(); ++x) {
    const auto& Sx = *S.value[x];
    const auto& Tx = *T.value[x];
    for (int y = 0; y < Sx.num_objects(); ++y)
      for (int z = 0; z < Tx.num_objects(); ++z)
        if (w.kx(x, Sx.id(y), Tx.id(z)) != c.id(w.L.object(x, y, z)) ||
            w.kf(p1.id(x), y, z) != c.id(w.L.object(x, y, z)))
          return "unit fails at " + p1.object(x);
    for (int a = 0; a < Sx.num_arrows(); ++a)
      for (int a2 : Sx.out(Sx.tgt(a)))
        for (int b = 0; b < Tx.num_arrows(); ++b)
          for (int b2 : Tx.out(Tx.tgt(b))) {
            const int lhs = w.kx(x, Sx.compose(a2, a), Tx.compose(b2, b));
            if (lhs < 0 || lhs != cmp(w.kx(x, a2, b2), w.kx(x, a, b))) return "component at " + p1.object(x) + " is not a functor";
          }
  }
  for (int f = 0; f < P.num_cells(); ++f) {
    const int x1 = p1.src(f), x2 = p1.tgt(f);
    const auto& Sx2 = *S.value[x2];
    const auto& Tx1 = *T.value[x1];
    for (int a = 0; a < Sx2.num_arrows(); ++a)
      for (int b = 0; b < Tx1.num_arrows(); ++b) {
        const int lhs = cmp(w.kx(x2, a, T.on_one[f].arr[b]), w.kf(f, Sx2.src(a), Tx1.src(b)));
        const int rhs = cmp(w.kf(f, Sx2.tgt(a), Tx1.tgt(b)), w.kx(x1, S.on_one[f].arr[a], b));
        if (lhs < 0 || lhs != rhs) return "component at " + p1.arrow_id(f) + " is not natural";
      }
    for (int g : p1.out(x2)) {
      const int x3 = p1.tgt(g);
      for (int y = 0; y < S.value[x3]->num_objects(); ++y)
        for (int z = 0; z < Tx1.num_objects(); ++z) {
          const int lhs = w.kf(p1.compose(g, f), y, z);
          if (lhs < 0 || lhs != cmp(w.kf(g, y, T.on_one[f].obj[z]), w.kf(f, S.on_one[g].obj[y], z)))
            return "composition fails at " + p1.arrow_id(g) + "∘" + p1.arrow_id(f);
        }
    }
  }
  for (int al = 0; al < P.num_two_cells(); ++al) {
    const int f = P.cell_src(al), g = P.cell_tgt(al), x1 = P.obj_src(al), x2 = P.obj_tgt(al);
    const auto& Sx2 = *S.value[x2];
    const auto& Tx1 = *T.value[x1];
    const auto& Sa = S.on_two[al];
    const auto& Ta = T.on_two[al];
    for (int a = 0; a < Sx2.num_arrows(); ++a)
      for (int b = 0; b < Tx1.num_arrows(); ++b) {
        const int lhs = hc(w.ka(al, Sx2.tgt(a), Tx1.tgt(b)), id2(w.kx(x1, S.on_one[f].arr[a], b)));
        const int rhs = hc(id2(w.kx(x2, a, T.on_one[g].arr[b])), w.ka(al, Sx2.src(a), Tx1.src(b)));
        if (lhs < 0 || lhs != rhs) return "2-cell component at " + p2.arrow_id(al) + " is not natural";
      }
    for (int be : p2.out(g)) {
      const auto& Tb = T.on_two[be];
      for (int y = 0; y < Sx2.num_objects(); ++y)
        for (int z = 0; z < Tx1.num_objects(); ++z) {
          const int lower = hc(id2(w.kx(x2, Sx2.id(y), Tb.comp[z])), w.ka(al, y, z));
          const int upper = hc(w.ka(be, y, z), id2(w.kx(x1, Sa.comp[y], Tx1.id(z))));
          const int lhs = w.ka(P.vcomp(be, al), y, z);
          if (lhs < 0 || lhs != vc(upper, lower))
            return "vertical composition fails at " + p2.arrow_id(be) + "·" + p2.arrow_id(al);
        }
    }
    // β: h => k after α: f => g
    for (int be : P.two_cells_from(x2)) {
      const int h = P.cell_src(be), k = P.cell_tgt(be), x3 = P.obj_tgt(be);
      const auto& Sb = S.on_two[be];
      for (int s = 0; s < S.value[x3]->num_objects(); ++s)
        for (int t = 0; t < Tx1.num_objects(); ++t) {
          const int sk = S.on_one[k].obj[s], sh = S.on_one[h].obj[s], tg = T.on_one[g].obj[t];
          const int R = hc(w.ka(be, s, tg), id2(cmp(w.kx(x2, Sx2.id(sh), Ta.comp[t]), w.kf(f, sh, t))));
          const int inner = hc(w.ka(al, sk, t), id2(w.kx(x1, S.on_one[f].arr[Sb.comp[s]], Tx1.id(t))));
          const int Lc = hc(id2(w.kf(k, s, tg)), inner);
          const int lhs = w.ka(P.hcomp(be, al), s, t);
          if (lhs < 0 || lhs != vc(Lc, R))
            return "horizontal composition fails at " + p2.arrow_id(be) + "*" + p2.arrow_id(al);
        }
    }
  }
  return {};
}

}  // namespace

LaxWedgeReport check_universal_lax_wedge(const Cat2Functor& S, const Cat2Functor& T, const std::vector<Cat>& vertices,
                                         const Caps& caps) {
  const auto L = lax_coend_carrier(S, T, caps);
  const WedgeShape w{S, T, L};
  LaxWedgeReport rep;
  rep.failure = lax_wedge_axioms(w);
  rep.axioms_hold = rep.failure.empty();
  if (!rep.axioms_hold) {
    rep.factorization_holds = false;
    return rep;
  }
  const auto& P = *S.P;
  const auto& p1 = *P.one();
  const int n = P.num_objects();
  const auto pst = pi0_star(*L.carrier);
  std::vector<Cat> prod(n);
  for (int x = 0; x < n; ++x) prod[x] = product(S.value[x], T.value[x]).cat;
  std::vector<int> cells;  // non-identity 1-cells
  for (int f = 0; f < P.num_cells(); ++f)
    if (!p1.is_identity(f)) cells.push_back(f);

  for (const Cat& V : vertices) {
    ++rep.vertices;
    std::set<std::vector<int>> induced;
    for_each_functor(pst.cat, V, [&](const FinFunctor& G) {
      std::vector<int> code;
      for (int x = 0; x < n; ++x) {
        const auto& Sx = *S.value[x];
        const auto& Tx = *T.value[x];
        for (int y = 0; y < Sx.num_objects(); ++y)
          for (int z = 0; z < Tx.num_objects(); ++z) code.push_back(G.obj[L.object(x, y, z)]);
        for (int a = 0; a < Sx.num_arrows(); ++a)
          for (int b = 0; b < Tx.num_arrows(); ++b) code.push_back(G.arr[pst.cls[w.kx(x, a, b)]]);
      }
      for (int f : cells) {
        const int x1 = p1.src(f), x2 = p1.tgt(f);
        for (int y = 0; y < S.value[x2]->num_objects(); ++y)
          for (int z = 0; z < T.value[x1]->num_objects(); ++z) code.push_back(G.arr[pst.cls[w.kf(f, y, z)]]);
      }
      ++rep.factorizations;
      if (!induced.insert(std::move(code)).second) rep.factorization_holds = false;
      return true;
    });

    // Direct enumeration of lax wedges into V.
    std::vector<std::vector<FinFunctor>> comps(n);
    for (int x = 0; x < n; ++x)
      for_each_functor(prod[x], V, [&](const FinFunctor& F) {
        comps[x].push_back(F);
        return true;
      });
    std::vector<int> choice(n, 0);
    std::vector<std::vector<int>> psi(cells.size());
    std::vector<int> pos(P.num_cells(), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) pos[cells[i]] = static_cast<int>(i);
    auto psi_f = [&](int f, int y, int z) {
      const int x1 = p1.src(f);
      const auto& F = comps[x1][choice[x1]];
      if (p1.is_identity(f)) return V->id(F.obj[y * T.value[x1]->num_objects() + z]);
      return psi[pos[f]][y * T.value[x1]->num_objects() + z];
    };
    auto psi_x_arr = [&](int x, int a, int b) { return comps[x][choice[x]].arr[a * T.value[x]->num_arrows() + b]; };
    // constraints grouped by the last non-identity cell they involve (-1: only the components)
    auto rank = [&](std::initializer_list<int> fs) {
      int r = -1;
      for (int f : fs) r = std::max(r, pos[f]);
      return r;
    };
    std::vector<std::vector<std::array<int, 2>>> comp_at(cells.size() + 1), two_at(cells.size() + 1);
    for (int f = 0; f < P.num_cells(); ++f)
      for (int g : p1.out(p1.tgt(f))) comp_at[rank({f, g, p1.compose(g, f)}) + 1].push_back({f, g});
    for (int a = 0; a < P.num_two_cells(); ++a) two_at[rank({P.cell_src(a), P.cell_tgt(a)}) + 1].push_back({a, 0});
    auto satisfied = [&](int level) {
      for (auto [f, g] : comp_at[level]) {
        const int x1 = p1.src(f), x3 = p1.tgt(g);
        for (int y = 0; y < S.value[x3]->num_objects(); ++y)
          for (int z = 0; z < T.value[x1]->num_objects(); ++z)
            if (psi_f(p1.compose(g, f), y, z) !=
                V->compose(psi_f(g, y, T.on_one[f].obj[z]), psi_f(f, S.on_one[g].obj[y], z)))
              return false;
      }
      for (auto [a, ignored] : two_at[level]) {
        const int f = P.cell_src(a), g = P.cell_tgt(a), x1 = P.obj_src(a), x2 = P.obj_tgt(a);
        for (int y = 0; y < S.value[x2]->num_objects(); ++y)
          for (int z = 0; z < T.value[x1]->num_objects(); ++z) {
            const int lhs = V->compose(psi_x_arr(x2, S.value[x2]->id(y), T.on_two[a].comp[z]), psi_f(f, y, z));
            const int rhs = V->compose(psi_f(g, y, z), psi_x_arr(x1, S.on_two[a].comp[y], T.value[x1]->id(z)));
            if (lhs != rhs) return false;
          }
      }
      return true;
    };
    std::set<std::vector<int>> direct;
    auto emit = [&] {
      std::vector<int> code;
      for (int x = 0; x < n; ++x) {
        const auto& F = comps[x][choice[x]];
        code.insert(code.end(), F.obj.begin(), F.obj.end());
        code.insert(code.end(), F.arr.begin(), F.arr.end());
      }
      for (const auto& v : psi) code.insert(code.end(), v.begin(), v.end());
      direct.insert(std::move(code));
      if (static_cast<long>(direct.size()) > caps.max_set_functors)
        throw Error(ErrorKind::SizeLimitExceeded, "too many lax wedges");
    };
    std::function<void(std::size_t)> assign_cells = [&](std::size_t i) {
      if (i == cells.size()) {
        emit();
        return;
      }
      const int f = cells[i], x1 = p1.src(f), x2 = p1.tgt(f);
      auto Q = product(S.value[x2], T.value[x1]).cat;
      const FinFunctor lhs = compose(comps[x1][choice[x1]],
                                     product_functor(S.on_one[f], identity_functor(T.value[x1]), Q, prod[x1]));
      const FinFunctor rhs = compose(comps[x2][choice[x2]],
                                     product_functor(identity_functor(S.value[x2]), T.on_one[f], Q, prod[x2]));
      for_each_nat(lhs, rhs, [&](const NatTransform& t) {
        psi[i] = t.comp;
        if (satisfied(static_cast<int>(i) + 1)) assign_cells(i + 1);
        return true;
      });
    };
    std::function<void(int)> assign_objects = [&](int x) {
      if (x == n) {
        if (satisfied(0)) assign_cells(0);
        return;
      }
      for (choice[x] = 0; choice[x] < static_cast<int>(comps[x].size()); ++choice[x]) assign_objects(x + 1);
    };
    if (std::all_of(comps.begin(), comps.end(), [](const auto& v) { return !v.empty(); })) assign_objects(0);
    rep.wedges += static_cast<long>(direct.size());
    if (direct != induced) rep.factorization_holds = false;
  }
  return rep;
}

namespace {

Cat tiny_category(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0: return make_cat(terminal_category());
    case 1: return make_cat(walking_arrow());
    case 2: return make_cat(discrete_category(2));
    default: return make_cat(cyclic_group_category(2));
  }
}

Cat2Functor draw_cat2functor(Rng& rng, const Cat2& P, bool contravariant, int depth) {
  const int n = P->num_objects();
  switch (rng.uniform(0, depth > 0 ? 3 : 2)) {
    case 0: return constant_cat2functor(P, contravariant, tiny_category(rng));
    case 1:
      if (n > 0) return representable_cat2functor(P, rng.uniform(0, n - 1), contravariant);
      return constant_cat2functor(P, contravariant, tiny_category(rng));
    case 2: {
      auto base = pi0_star(*P).cat;
      if (contravariant) base = make_cat(opposite(*base));
      return discrete_cat2functor(P, contravariant, random_set_functor(rng, base, 2));
    }
    default:
      return product_cat2functor(draw_cat2functor(rng, P, contravariant, 0), draw_cat2functor(rng, P, contravariant, 0));
  }
}

}  // namespace

Cat2 random_2category(Rng& rng, int max_objects, int max_arrows) {
  const bool want_cells = rng.coin(0.8);
  for (int tries = 0;; ++tries) {
    auto c = random_category(rng, max_arrows);
    if (c->num_objects() > max_objects) continue;
    std::vector<std::pair<int, int>> parallel, chosen;
    for (int f = 0; f < c->num_arrows(); ++f)
      for (int g : c->hom(c->src(f), c->tgt(f)))
        if (g != f) parallel.emplace_back(f, g);
    if (want_cells && parallel.empty() && tries < 50) continue;
    if (want_cells && !parallel.empty()) {
      const int k = rng.uniform(1, 3);
      for (int i = 0; i < k; ++i) chosen.push_back(rng.pick(parallel));
    }
    return make_cat2(locally_posetal(c, compatible_preorder(*c, chosen)));
  }
}

Cat2Functor random_cat2functor(Rng& rng, const Cat2& P, bool contravariant) {
  return draw_cat2functor(rng, P, contravariant, 1);
}

}  // namespace exq
