#include "exq/constructions.hpp"

#include <unordered_map>

namespace exq {

namespace {

struct Key4Hash {
  std::size_t operator()(const std::array<int, 4>& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : k) h = (h ^ static_cast<std::uint32_t>(v)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

void require_same_target(const FinFunctor& f, const FinFunctor& g) {
  if (f.target.get() != g.target.get()) throw Error(ErrorKind::TargetMismatch, "legs do not share a codomain");
}

CommaResult comma_impl(const FinFunctor& f, const FinFunctor& g, bool iso_only) {
  require_same_target(f, g);
  const auto& A = *f.source;
  const auto& B = *g.source;
  const auto& C = *f.target;
  const int nB = B.num_objects();
  std::vector<std::array<int, 3>> triples;
  std::vector<std::string> objs;
  std::vector<std::vector<int>> by_ab(static_cast<std::size_t>(A.num_objects()) * nB);
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < nB; ++b)
      for (int c : C.hom(f.obj[a], g.obj[b])) {
        if (iso_only && !C.is_iso(c)) continue;
        by_ab[a * nB + b].push_back(static_cast<int>(triples.size()));
        triples.push_back({a, c, b});
        objs.push_back(tuple_id({A.object(a), C.arrow_id(c), B.object(b)}));
      }
  std::vector<ArrowRec> arrs;
  std::vector<std::array<int, 2>> parts;  // (α, β)
  std::unordered_map<std::array<int, 4>, int, Key4Hash> index;
  std::vector<int> ids(triples.size(), -1);
  for (int o1 = 0; o1 < static_cast<int>(triples.size()); ++o1) {
    auto [a1, c1, b1] = triples[o1];
    for (int al : A.out(a1))
      for (int be : B.out(b1)) {
        int lhs = C.compose(g.arr[be], c1);
        for (int o2 : by_ab[A.tgt(al) * nB + B.tgt(be)]) {
          if (C.compose(triples[o2][1], f.arr[al]) != lhs) continue;
          int k = static_cast<int>(arrs.size());
          index.emplace(std::array<int, 4>{o1, o2, al, be}, k);
          if (o1 == o2 && A.is_identity(al) && B.is_identity(be)) ids[o1] = k;
          arrs.push_back({tuple_id({A.arrow_id(al), B.arrow_id(be)}) + ":" + objs[o1] + "->" + objs[o2], o1, o2});
          parts.push_back({al, be});
        }
      }
  }
  auto apex = make_cat(FinCategory(objs, arrs, ids, [&](int y, int x) {
    return index.at({arrs[x].src, arrs[y].tgt, A.compose(parts[y][0], parts[x][0]), B.compose(parts[y][1], parts[x][1])});
  }));
  CommaResult r;
  r.apex = apex;
  r.triples = triples;
  r.proj_left = {apex, f.source, {}, {}};
  r.proj_right = {apex, g.source, {}, {}};
  for (const auto& t : triples) {
    r.proj_left.obj.push_back(t[0]);
    r.proj_right.obj.push_back(t[2]);
  }
  for (const auto& p : parts) {
    r.proj_left.arr.push_back(p[0]);
    r.proj_right.arr.push_back(p[1]);
  }
  r.two_cell = {compose(f, r.proj_left), compose(g, r.proj_right), {}};
  for (const auto& t : triples) r.two_cell.comp.push_back(t[1]);
  return r;
}

}  // namespace

CommaResult comma(const FinFunctor& f, const FinFunctor& g) { return comma_impl(f, g, false); }

CommaResult iso_comma(const FinFunctor& f, const FinFunctor& g) { return comma_impl(f, g, true); }

CommaResult pullback(const FinFunctor& f, const FinFunctor& g) {
  require_same_target(f, g);
  const auto& A = *f.source;
  const auto& B = *g.source;
  const auto& C = *f.target;
  std::vector<std::array<int, 3>> triples;
  std::vector<std::string> objs;
  std::vector<int> obj_of(static_cast<std::size_t>(A.num_objects()) * B.num_objects(), -1);
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b)
      if (f.obj[a] == g.obj[b]) {
        obj_of[a * B.num_objects() + b] = static_cast<int>(triples.size());
        triples.push_back({a, C.id(f.obj[a]), b});
        objs.push_back(tuple_id({A.object(a), B.object(b)}));
      }
  std::vector<ArrowRec> arrs;
  std::vector<std::array<int, 2>> parts;
  std::unordered_map<std::array<int, 4>, int, Key4Hash> index;
  std::vector<int> ids(triples.size());
  for (int o = 0; o < static_cast<int>(triples.size()); ++o) {
    int a = triples[o][0], b = triples[o][2];
    for (int al : A.out(a))
      for (int be : B.out(b)) {
        if (f.arr[al] != g.arr[be]) continue;
        int o2 = obj_of[A.tgt(al) * B.num_objects() + B.tgt(be)];
        int k = static_cast<int>(arrs.size());
        index.emplace(std::array<int, 4>{al, be, 0, 0}, k);
        if (A.is_identity(al) && B.is_identity(be)) ids[o] = k;
        arrs.push_back({tuple_id({A.arrow_id(al), B.arrow_id(be)}), o, o2});
        parts.push_back({al, be});
      }
  }
  auto apex = make_cat(FinCategory(objs, arrs, ids, [&](int y, int x) {
    return index.at({A.compose(parts[y][0], parts[x][0]), B.compose(parts[y][1], parts[x][1]), 0, 0});
  }));
  CommaResult r;
  r.apex = apex;
  r.triples = triples;
  r.proj_left = {apex, f.source, {}, {}};
  r.proj_right = {apex, g.source, {}, {}};
  for (const auto& t : triples) {
    r.proj_left.obj.push_back(t[0]);
    r.proj_right.obj.push_back(t[2]);
  }
  for (const auto& p : parts) {
    r.proj_left.arr.push_back(p[0]);
    r.proj_right.arr.push_back(p[1]);
  }
  r.two_cell = {compose(f, r.proj_left), compose(g, r.proj_right), {}};
  for (const auto& t : triples) r.two_cell.comp.push_back(t[1]);
  return r;
}

Partition pi0(const FinCategory& c) {
  UnionFind uf(c.num_objects());
  for (int f = 0; f < c.num_arrows(); ++f) uf.unite(c.src(f), c.tgt(f));
  Partition p;
  p.label = uf.labels(&p.count);
  return p;
}

bool is_final_functor(const FinFunctor& u) {
  const auto& A = *u.source;
  const auto& B = *u.target;
  auto pos = hom_positions(B);
  for (int b = 0; b < B.num_objects(); ++b) {
    // objects of b↓u: (a, β: b -> ua)
    std::vector<int> base(A.num_objects() + 1, 0);
    for (int a = 0; a < A.num_objects(); ++a)
      base[a + 1] = base[a] + static_cast<int>(B.hom(b, u.obj[a]).size());
    const int n = base.back();
    if (n == 0) return false;
    UnionFind uf(n);
    int comps = n;
    for (int a = 0; a < A.num_objects(); ++a)
      for (int be : B.hom(b, u.obj[a]))
        for (int al : A.out(a)) {
          int be2 = B.compose(u.arr[al], be);
          if (uf.unite(base[a] + pos[be], base[A.tgt(al)] + pos[be2])) --comps;
        }
    if (comps != 1) return false;
  }
  return true;
}

bool is_initial_functor(const FinFunctor& u) {
  const auto& A = *u.source;
  const auto& B = *u.target;
  auto pos = hom_positions(B);
  for (int b = 0; b < B.num_objects(); ++b) {
    // objects of u↓b: (a, β: ua -> b)
    std::vector<int> base(A.num_objects() + 1, 0);
    for (int a = 0; a < A.num_objects(); ++a)
      base[a + 1] = base[a] + static_cast<int>(B.hom(u.obj[a], b).size());
    const int n = base.back();
    if (n == 0) return false;
    UnionFind uf(n);
    int comps = n;
    for (int a = 0; a < A.num_objects(); ++a)
      for (int be : B.hom(u.obj[a], b))
        for (int al : A.in(a)) {
          int be2 = B.compose(be, u.arr[al]);
          if (uf.unite(base[a] + pos[be], base[A.src(al)] + pos[be2])) --comps;
        }
    if (comps != 1) return false;
  }
  return true;
}

bool is_opcartesian(const FinFunctor& p, int phi) {
  const auto& E = *p.source;
  const auto& B = *p.target;
  const int e = E.src(phi), e1 = E.tgt(phi);
  for (int psi : E.out(e)) {
    const int e2 = E.tgt(psi);
    for (int g : B.hom(p.obj[e1], p.obj[e2])) {
      if (B.compose(g, p.arr[phi]) != p.arr[psi]) continue;
      int found = 0;
      for (int chi : E.hom(e1, e2))
        if (p.arr[chi] == g && E.compose(chi, phi) == psi) ++found;
      if (found != 1) return false;
    }
  }
  return true;
}

bool is_opfibration(const FinFunctor& p) {
  const auto& E = *p.source;
  const auto& B = *p.target;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int f : B.out(p.obj[e])) {
      bool ok = false;
      for (int phi : E.out(e))
        if (p.arr[phi] == f && is_opcartesian(p, phi)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

bool is_fibration(const FinFunctor& p) {
  auto Eop = make_cat(opposite(*p.source));
  auto Bop = make_cat(opposite(*p.target));
  return is_opfibration(opposite(p, Eop, Bop));
}

bool is_discrete_opfibration(const FinFunctor& p) {
  const auto& E = *p.source;
  const auto& B = *p.target;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int f : B.out(p.obj[e])) {
      int n = 0;
      for (int phi : E.out(e)) n += p.arr[phi] == f;
      if (n != 1) return false;
    }
  return true;
}

bool is_discrete_fibration(const FinFunctor& p) {
  const auto& E = *p.source;
  const auto& B = *p.target;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int f : B.in(p.obj[e])) {
      int n = 0;
      for (int phi : E.in(e)) n += p.arr[phi] == f;
      if (n != 1) return false;
    }
  return true;
}

bool is_isofibration(const FinFunctor& p) {
  const auto& E = *p.source;
  const auto& B = *p.target;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int f : B.out(p.obj[e])) {
      if (!B.is_iso(f)) continue;
      bool ok = false;
      for (int phi : E.out(e))
        if (p.arr[phi] == f && E.is_iso(phi)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
  return true;
}

std::optional<Error> check_adjunction(const Adjunction& adj) {
  for (const auto* F : {&adj.left, &adj.right})
    if (auto e = check_functor(*F)) return e;
  if (auto e = check_nat(adj.unit)) return e;
  if (auto e = check_nat(adj.counit)) return e;
  const auto& X = *adj.left.source;
  const auto& Y = *adj.left.target;
  for (int x = 0; x < X.num_objects(); ++x) {
    int lx = adj.left.obj[x];
    if (Y.compose(adj.counit.comp[lx], adj.left.arr[adj.unit.comp[x]]) != Y.id(lx))
      return Error(ErrorKind::LawViolation, "triangle identity at " + X.object(x));
  }
  for (int y = 0; y < Y.num_objects(); ++y) {
    int ry = adj.right.obj[y];
    if (X.compose(adj.right.arr[adj.counit.comp[y]], adj.unit.comp[ry]) != X.id(ry))
      return Error(ErrorKind::LawViolation, "triangle identity at " + Y.object(y));
  }
  return std::nullopt;
}

namespace {

void check_caps(const FinFunctor& f, const Caps& caps) {
  if (f.source->num_arrows() > caps.max_arrows || f.target->num_arrows() > caps.max_arrows)
    throw Error(ErrorKind::SizeLimitExceeded, "adjoint search");
}

}  // namespace

std::optional<Adjunction> find_right_adjoint(const FinFunctor& f, const Caps& caps) {
  check_caps(f, caps);
  const auto& A = *f.source;
  const auto& B = *f.target;
  FinFunctor r{f.target, f.source, std::vector<int>(B.num_objects(), -1), std::vector<int>(B.num_arrows(), -1)};
  std::vector<int> eps(B.num_objects(), -1);
  // r(b) is the apex of a terminal object (a, ε: fa -> b) of f↓b.
  for (int b = 0; b < B.num_objects(); ++b) {
    for (int a = 0; a < A.num_objects() && eps[b] < 0; ++a)
      for (int e : B.hom(f.obj[a], b)) {
        bool terminal = true;
        for (int a2 = 0; a2 < A.num_objects() && terminal; ++a2)
          for (int t : B.hom(f.obj[a2], b)) {
            int n = 0;
            for (int u : A.hom(a2, a)) n += B.compose(e, f.arr[u]) == t;
            if (n != 1) {
              terminal = false;
              break;
            }
          }
        if (terminal) {
          r.obj[b] = a;
          eps[b] = e;
          break;
        }
      }
    if (eps[b] < 0) return std::nullopt;
  }
  auto factor = [&](int a2, int b, int t) {
    for (int u : A.hom(a2, r.obj[b]))
      if (B.compose(eps[b], f.arr[u]) == t) return u;
    return -1;
  };
  for (int be = 0; be < B.num_arrows(); ++be)
    r.arr[be] = factor(r.obj[B.src(be)], B.tgt(be), B.compose(be, eps[B.src(be)]));
  Adjunction adj{f, r, {identity_functor(f.source), compose(r, f), {}}, {compose(f, r), identity_functor(f.target), eps}};
  for (int a = 0; a < A.num_objects(); ++a) adj.unit.comp.push_back(factor(a, f.obj[a], B.id(f.obj[a])));
  if (check_adjunction(adj)) return std::nullopt;
  return adj;
}

std::optional<Adjunction> find_left_adjoint(const FinFunctor& f, const Caps& caps) {
  check_caps(f, caps);
  const auto& A = *f.source;
  const auto& B = *f.target;
  FinFunctor l{f.target, f.source, std::vector<int>(B.num_objects(), -1), std::vector<int>(B.num_arrows(), -1)};
  std::vector<int> eta(B.num_objects(), -1);
  // l(b) is the apex of an initial object (a, η: b -> fa) of b↓f.
  for (int b = 0; b < B.num_objects(); ++b) {
    for (int a = 0; a < A.num_objects() && eta[b] < 0; ++a)
      for (int e : B.hom(b, f.obj[a])) {
        bool initial = true;
        for (int a2 = 0; a2 < A.num_objects() && initial; ++a2)
          for (int t : B.hom(b, f.obj[a2])) {
            int n = 0;
            for (int u : A.hom(a, a2)) n += B.compose(f.arr[u], e) == t;
            if (n != 1) {
              initial = false;
              break;
            }
          }
        if (initial) {
          l.obj[b] = a;
          eta[b] = e;
          break;
        }
      }
    if (eta[b] < 0) return std::nullopt;
  }
  auto factor = [&](int b, int a2, int t) {
    for (int u : A.hom(l.obj[b], a2))
      if (B.compose(f.arr[u], eta[b]) == t) return u;
    return -1;
  };
  for (int be = 0; be < B.num_arrows(); ++be)
    l.arr[be] = factor(B.src(be), l.obj[B.tgt(be)], B.compose(eta[B.tgt(be)], be));
  Adjunction adj{l, f, {identity_functor(f.target), compose(f, l), eta}, {compose(l, f), identity_functor(f.source), {}}};
  for (int a = 0; a < A.num_objects(); ++a) adj.counit.comp.push_back(factor(f.obj[a], a, B.id(f.obj[a])));
  if (check_adjunction(adj)) return std::nullopt;
  return adj;
}

std::optional<Adjunction> is_equivalence(const FinFunctor& f, const Caps& caps) {
  auto adj = find_right_adjoint(f, caps);
  if (!adj) return std::nullopt;
  for (int c : adj->unit.comp)
    if (!f.source->is_iso(c)) return std::nullopt;
  for (int c : adj->counit.comp)
    if (!f.target->is_iso(c)) return std::nullopt;
  return adj;
}

std::optional<FinFunctor> find_isomorphism(const Cat& a, const Cat& b) {
  if (a->num_objects() != b->num_objects() || a->num_arrows() != b->num_arrows()) return std::nullopt;
  std::optional<FinFunctor> found;
  for_each_functor(a, b, [&](const FinFunctor& f) {
    std::vector<char> hit(b->num_arrows(), 0);
    for (int g : f.arr) {
      if (hit[g]) return true;
      hit[g] = 1;
    }
    found = f;
    return false;
  });
  return found;
}

FinFunctor discrete_fibration_of(const SetFunctor& h, const Cat& c) {
  const auto& C = *c;
  std::vector<int> start, astart;
  std::vector<std::string> objs;
  FinFunctor u{nullptr, c, {}, {}};
  for (int x = 0; x < C.num_objects(); ++x) {
    start.push_back(static_cast<int>(objs.size()));
    for (int s = 0; s < h.size[x]; ++s) {
      objs.push_back(tuple_id({C.object(x), h.label(x, s)}));
      u.obj.push_back(x);
    }
  }
  std::vector<ArrowRec> arrs;
  for (int f = 0; f < C.num_arrows(); ++f) {
    astart.push_back(static_cast<int>(arrs.size()));
    for (int s = 0; s < h.size[C.tgt(f)]; ++s) {
      arrs.push_back({tuple_id({C.arrow_id(f), h.label(C.tgt(f), s)}), start[C.src(f)] + h.map[f][s], start[C.tgt(f)] + s});
      u.arr.push_back(f);
    }
  }
  std::vector<int> ids;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int s = 0; s < h.size[x]; ++s) ids.push_back(astart[C.id(x)] + s);
  u.source = make_cat(FinCategory(objs, arrs, ids, [&](int g, int f) {
    return astart[C.compose(u.arr[g], u.arr[f])] + (g - astart[u.arr[g]]);
  }));
  return u;
}

FinFunctor discrete_opfibration_of(const SetFunctor& h) {
  const auto& C = *h.source;
  std::vector<int> start, astart;
  std::vector<std::string> objs;
  FinFunctor u{nullptr, h.source, {}, {}};
  for (int x = 0; x < C.num_objects(); ++x) {
    start.push_back(static_cast<int>(objs.size()));
    for (int s = 0; s < h.size[x]; ++s) {
      objs.push_back(tuple_id({C.object(x), h.label(x, s)}));
      u.obj.push_back(x);
    }
  }
  std::vector<ArrowRec> arrs;
  for (int f = 0; f < C.num_arrows(); ++f) {
    astart.push_back(static_cast<int>(arrs.size()));
    for (int s = 0; s < h.size[C.src(f)]; ++s) {
      arrs.push_back({tuple_id({C.arrow_id(f), h.label(C.src(f), s)}), start[C.src(f)] + s, start[C.tgt(f)] + h.map[f][s]});
      u.arr.push_back(f);
    }
  }
  std::vector<int> ids;
  for (int x = 0; x < C.num_objects(); ++x)
    for (int s = 0; s < h.size[x]; ++s) ids.push_back(astart[C.id(x)] + s);
  u.source = make_cat(FinCategory(objs, arrs, ids, [&](int g, int f) {
    return astart[C.compose(u.arr[g], u.arr[f])] + (f - astart[u.arr[f]]);
  }));
  return u;
}

}  // namespace exq
