#include "exq/profun.hpp"

#include <algorithm>
#include <set>

namespace exq {

std::optional<Error> check_profunctor(const Profunctor& p) {
  const auto& A = *p.source;
  const auto& B = *p.target;
  auto bad = [](const std::string& w) { return Error(ErrorKind::FunctorLawViolation, "profunctor " + w); };
  for (int be = 0; be < B.num_arrows(); ++be)
    for (int a = 0; a < A.num_objects(); ++a)
      for (int v : p.left[be][a])
        if (v < 0 || v >= p.count(a, B.tgt(be))) return bad("left action range");
  for (int al = 0; al < A.num_arrows(); ++al)
    for (int b = 0; b < B.num_objects(); ++b)
      for (int v : p.right[al][b])
        if (v < 0 || v >= p.count(A.src(al), b)) return bad("right action range");
  for (int b = 0; b < B.num_objects(); ++b)
    for (int a = 0; a < A.num_objects(); ++a)
      for (int i = 0; i < p.count(a, b); ++i) {
        if (p.left[B.id(b)][a][i] != i || p.right[A.id(a)][b][i] != i) return bad("identity action");
        for (int be : B.out(b))
          for (int be2 : B.out(B.tgt(be)))
            if (p.left[B.compose(be2, be)][a][i] != p.left[be2][a][p.left[be][a][i]]) return bad("left composite");
        for (int al : A.in(a))
          for (int al2 : A.in(A.src(al)))
            if (p.right[A.compose(al, al2)][b][i] != p.right[al2][b][p.right[al][b][i]]) return bad("right composite");
        for (int be : B.out(b))
          for (int al : A.in(a))
            if (p.left[be][A.src(al)][p.right[al][b][i]] != p.right[al][B.tgt(be)][p.left[be][a][i]])
              return bad("actions do not commute");
      }
  return std::nullopt;
}

Profunctor hom_profunctor(const FinFunctor& f, HomVariance v) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  auto pos = hom_positions(B);
  Profunctor p;
  if (v == HomVariance::Companion) {
    p.source = f.source;
    p.target = f.target;
    const int nb = B.num_objects();
    p.size.assign(A.num_objects() * nb, 0);
    p.names.assign(A.num_objects() * nb, {});
    for (int a = 0; a < A.num_objects(); ++a)
      for (int b = 0; b < nb; ++b)
        for (int h : B.hom(f.obj[a], b)) p.names[p.at(a, b)].push_back(B.arrow_id(h));
    for (std::size_t k = 0; k < p.names.size(); ++k) p.size[k] = static_cast<int>(p.names[k].size());
    p.left.assign(B.num_arrows(), std::vector<std::vector<int>>(A.num_objects()));
    for (int be = 0; be < B.num_arrows(); ++be)
      for (int a = 0; a < A.num_objects(); ++a)
        for (int h : B.hom(f.obj[a], B.src(be))) p.left[be][a].push_back(pos[B.compose(be, h)]);
    p.right.assign(A.num_arrows(), std::vector<std::vector<int>>(nb));
    for (int al = 0; al < A.num_arrows(); ++al)
      for (int b = 0; b < nb; ++b)
        for (int h : B.hom(f.obj[A.tgt(al)], b)) p.right[al][b].push_back(pos[B.compose(h, f.arr[al])]);
  } else {
    p.source = f.target;
    p.target = f.source;
    const int na = A.num_objects();
    p.size.assign(B.num_objects() * na, 0);
    p.names.assign(B.num_objects() * na, {});
    for (int b = 0; b < B.num_objects(); ++b)
      for (int a = 0; a < na; ++a)
        for (int h : B.hom(b, f.obj[a])) p.names[p.at(b, a)].push_back(B.arrow_id(h));
    for (std::size_t k = 0; k < p.names.size(); ++k) p.size[k] = static_cast<int>(p.names[k].size());
    p.left.assign(A.num_arrows(), std::vector<std::vector<int>>(B.num_objects()));
    for (int al = 0; al < A.num_arrows(); ++al)
      for (int b = 0; b < B.num_objects(); ++b)
        for (int h : B.hom(b, f.obj[A.src(al)])) p.left[al][b].push_back(pos[B.compose(f.arr[al], h)]);
    p.right.assign(B.num_arrows(), std::vector<std::vector<int>>(na));
    for (int be = 0; be < B.num_arrows(); ++be)
      for (int a = 0; a < na; ++a)
        for (int h : B.hom(B.tgt(be), f.obj[a])) p.right[be][a].push_back(pos[B.compose(h, be)]);
  }
  return p;
}

Profunctor hom_profunctor(const Cat& c) { return hom_profunctor(identity_functor(c), HomVariance::Companion); }

int Composite::class_of(int a, int c, int b, int gi, int si) const {
  const int k = value.at(a, c);
  const int mid_count = static_cast<int>(offset[k].size()) - 1;
  (void)mid_count;
  const int width = (offset[k][b + 1] - offset[k][b]);
  if (width == 0) return -1;
  // offset[k][b+1]-offset[k][b] = |G(b,c)|·|F(a,b)|, stride is |F(a,b)|
  const int stride = stride_of[k][b];
  return raw_class[k][offset[k][b] + gi * stride + si];
}

namespace {

// Visits every raw element (b, gi, si) of the composite at value index k.
template <class Fn>
void for_each_raw(const Composite& c, int k, Fn&& fn) {
  const auto& off = c.offset[k];
  for (int b = 0; b + 1 < static_cast<int>(off.size()); ++b) {
    const int stride = c.stride_of[k][b];
    if (stride == 0) continue;
    for (int r = off[b]; r < off[b + 1]; ++r) fn(r, b, (r - off[b]) / stride, (r - off[b]) % stride);
  }
}

// Builds a class-level map from a raw-level one, insisting that every member of a class agrees.
ProfMorphism from_raw(const Composite& c, const std::function<int(int a, int d, int b, int gi, int si)>& img) {
  const int na = c.value.source->num_objects(), nd = c.value.target->num_objects();
  ProfMorphism m;
  m.comp.assign(na * nd, {});
  for (int a = 0; a < na; ++a)
    for (int d = 0; d < nd; ++d) {
      const int k = c.value.at(a, d);
      auto& out = m.comp[k];
      out.assign(c.value.size[k], -1);
      for_each_raw(c, k, [&](int r, int b, int gi, int si) {
        int v = img(a, d, b, gi, si);
        int cls = c.raw_class[k][r];
        if (out[cls] < 0) out[cls] = v;
        else if (out[cls] != v)
          throw Error(ErrorKind::IllDefinedComposition, "map not constant on a coend class");
      });
    }
  return m;
}

}  // namespace

Composite compose_profunctors(const Profunctor& G, const Profunctor& F, const Caps& caps) {
  if (G.source.get() != F.target.get()) throw Error(ErrorKind::TargetMismatch, "profunctor composition");
  const auto& A = *F.source;
  const auto& B = *F.target;
  const auto& C = *G.target;
  const int na = A.num_objects(), nb = B.num_objects(), nc = C.num_objects();
  Composite out;
  out.middle = F.target;
  auto& V = out.value;
  V.source = F.source;
  V.target = G.target;
  V.size.assign(na * nc, 0);
  V.names.assign(na * nc, {});
  out.offset.assign(na * nc, {});
  out.stride_of.assign(na * nc, {});
  out.raw_class.assign(na * nc, {});
  out.rep.assign(na * nc, {});
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < nc; ++c) {
      const int k = V.at(a, c);
      auto& off = out.offset[k];
      off.assign(nb + 1, 0);
      out.stride_of[k].assign(nb, 0);
      for (int b = 0; b < nb; ++b) {
        out.stride_of[k][b] = F.count(a, b);
        off[b + 1] = off[b] + G.count(b, c) * F.count(a, b);
      }
      if (off[nb] > caps.max_cells) throw Error(ErrorKind::SizeLimitExceeded, "coend carrier");
      UnionFind uf(off[nb]);
      for (int be = 0; be < B.num_arrows(); ++be) {
        const int b = B.src(be), b2 = B.tgt(be);
        const int sf = F.count(a, b), sf2 = F.count(a, b2);
        for (int gi = 0; gi < G.count(b2, c); ++gi)
          for (int si = 0; si < sf; ++si) {
            int lhs = off[b] + G.right[be][c][gi] * sf + si;
            int rhs = off[b2] + gi * sf2 + F.left[be][a][si];
            uf.unite(lhs, rhs);
          }
      }
      int count = 0;
      out.raw_class[k] = uf.labels(&count);
      V.size[k] = count;
      out.rep[k].assign(count, {-1, -1, -1});
      V.names[k].assign(count, "");
      for_each_raw(out, k, [&](int r, int b, int gi, int si) {
        int cls = out.raw_class[k][r];
        if (out.rep[k][cls][0] >= 0) return;
        out.rep[k][cls] = {b, gi, si};
        V.names[k][cls] = "[" + B.object(b) + "|" + G.names[G.at(b, c)][gi] + "|" + F.names[F.at(a, b)][si] + "]";
      });
    }
  V.left.assign(C.num_arrows(), std::vector<std::vector<int>>(na));
  V.right.assign(A.num_arrows(), std::vector<std::vector<int>>(nc));
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < nc; ++c) {
      const int k = V.at(a, c);
      for (int ga : C.out(c)) {
        auto& act = V.left[ga][a];
        act.assign(V.size[k], -1);
        for_each_raw(out, k, [&](int r, int b, int gi, int si) {
          int v = out.class_of(a, C.tgt(ga), b, G.left[ga][b][gi], si);
          int cls = out.raw_class[k][r];
          if (act[cls] < 0) act[cls] = v;
          else if (act[cls] != v) throw Error(ErrorKind::IllDefinedComposition, "induced left action");
        });
      }
      for (int al : A.in(a)) {
        auto& act = V.right[al][c];
        act.assign(V.size[k], -1);
        for_each_raw(out, k, [&](int r, int b, int gi, int si) {
          int v = out.class_of(A.src(al), c, b, gi, F.right[al][b][si]);
          int cls = out.raw_class[k][r];
          if (act[cls] < 0) act[cls] = v;
          else if (act[cls] != v) throw Error(ErrorKind::IllDefinedComposition, "induced right action");
        });
      }
    }
  return out;
}

bool is_iso(const ProfMorphism& m, const Profunctor& from, const Profunctor& to) {
  for (std::size_t k = 0; k < m.comp.size(); ++k) {
    if (from.size[k] != to.size[k]) return false;
    std::vector<bool> hit(to.size[k], false);
    for (int v : m.comp[k]) {
      if (v < 0 || hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

ProfMorphism inverse(const ProfMorphism& m, const Profunctor& from, const Profunctor& to) {
  if (!is_iso(m, from, to)) throw Error(ErrorKind::LawViolation, "inverting a non-invertible profunctor map");
  ProfMorphism r;
  r.comp.resize(m.comp.size());
  for (std::size_t k = 0; k < m.comp.size(); ++k) {
    r.comp[k].assign(m.comp[k].size(), -1);
    for (std::size_t i = 0; i < m.comp[k].size(); ++i) r.comp[k][m.comp[k][i]] = static_cast<int>(i);
  }
  return r;
}

ProfMorphism vcompose(const ProfMorphism& n, const ProfMorphism& m) {
  ProfMorphism r;
  r.comp.resize(m.comp.size());
  for (std::size_t k = 0; k < m.comp.size(); ++k)
    for (int v : m.comp[k]) r.comp[k].push_back(n.comp[k][v]);
  return r;
}

bool is_identity(const ProfMorphism& m) {
  for (const auto& c : m.comp)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != static_cast<int>(i)) return false;
  return true;
}

ProfMorphism yoneda_right(const Composite& fh, const Profunctor& f) {
  const auto& A = *fh.middle;
  return from_raw(fh, [&](int a, int b, int a2, int gi, int si) {
    int al = A.hom(a, a2)[si];
    return f.right[al][b][gi];
  });
}

ProfMorphism yoneda_left(const Composite& hg, const Profunctor& g) {
  const auto& B = *hg.middle;
  return from_raw(hg, [&](int a, int b, int b2, int gi, int si) {
    int be = B.hom(b2, b)[gi];
    return g.left[be][a][si];
  });
}

ProfMorphism whisker_left(const Composite& from, const Composite& to, const ProfMorphism& m) {
  const int nb = from.middle->num_objects();
  return from_raw(from, [&](int a, int c, int b, int gi, int si) {
    return to.class_of(a, c, b, gi, m.comp[a * nb + b][si]);
  });
}

ProfMorphism whisker_right(const Composite& from, const Composite& to, const ProfMorphism& n) {
  const int nc = from.value.target->num_objects();
  return from_raw(from, [&](int a, int c, int b, int gi, int si) {
    return to.class_of(a, c, b, n.comp[b * nc + c][gi], si);
  });
}

ProfMorphism associator(const Composite& hg_f, const Composite& hg, const Composite& h_gf, const Composite& gf) {
  // members of each class of H∘G, per value index
  std::vector<std::vector<std::vector<std::array<int, 3>>>> members(hg.raw_class.size());
  for (std::size_t k = 0; k < hg.raw_class.size(); ++k) {
    members[k].assign(hg.value.size[k], {});
    for_each_raw(hg, static_cast<int>(k), [&](int r, int c, int hi, int gi) {
      members[k][hg.raw_class[k][r]].push_back({c, hi, gi});
    });
  }
  return from_raw(hg_f, [&](int a, int d, int b, int e, int s) {
    int result = -1;
    for (const auto& [c, hi, gi] : members[hg.value.at(b, d)][e]) {
      int v = h_gf.class_of(a, d, c, hi, gf.class_of(a, c, b, gi, s));
      if (result < 0) result = v;
      else if (result != v) throw Error(ErrorKind::IllDefinedComposition, "associator");
    }
    return result;
  });
}

PhiTilde phi_tilde(const LaxSquare& sq, const Caps& caps) {
  const auto& A = *sq.A;
  const auto& B = *sq.B;
  const auto& C = *sq.C;
  auto G = hom_profunctor(sq.q, HomVariance::Companion);
  auto F = hom_profunctor(sq.p, HomVariance::Conjoint);
  PhiTilde out{compose_profunctors(G, F, caps), {}, true, {}, true};
  const auto& S = out.source;
  out.comp.assign(S.value.size.size(), {});
  out.bijective.assign(S.value.size.size(), false);
  auto pos = hom_positions(C);
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b) {
      const int k = S.value.at(a, b);
      auto& m = out.comp[k];
      m.assign(S.value.size[k], -1);
      for_each_raw(S, k, [&](int r, int x, int gi, int si) {
        int be = B.hom(sq.q.obj[x], b)[gi];
        int al = A.hom(a, sq.p.obj[x])[si];
        int v = C.compose(sq.g.arr[be], C.compose(sq.phi.comp[x], sq.f.arr[al]));
        int cls = S.raw_class[k][r];
        if (m[cls] < 0) m[cls] = v;
        else if (m[cls] != v) out.well_defined = false;
      });
      auto target = C.hom(sq.f.obj[a], sq.g.obj[b]);
      std::vector<bool> hit(target.size(), false);
      bool bij = m.size() == target.size();
      for (int v : m) {
        if (!bij) break;
        if (v < 0 || hit[pos[v]]) bij = false;
        else hit[pos[v]] = true;
      }
      out.bijective[k] = bij;
      out.iso = out.iso && bij;
    }
  out.iso = out.iso && out.well_defined;
  return out;
}

AdjunctionCheck check_hom_adjunction(const FinFunctor& f, const Caps& caps) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  if (A.num_arrows() > caps.max_arrows || B.num_arrows() > caps.max_arrows)
    throw Error(ErrorKind::SizeLimitExceeded, "hom adjunction");
  AdjunctionCheck res;
  auto posB = hom_positions(B);
  auto L = hom_profunctor(f, HomVariance::Companion);  // A -> B
  auto R = hom_profunctor(f, HomVariance::Conjoint);   // B -> A
  auto HA = hom_profunctor(f.source);
  auto HB = hom_profunctor(f.target);
  auto RL = compose_profunctors(R, L, caps);  // A -> A
  auto LR = compose_profunctors(L, R, caps);  // B -> B

  // unit: A(a,a') -> (R∘L)(a,a'), α |-> [fa | fα | 1_fa]
  ProfMorphism eta;
  eta.comp.assign(HA.size.size(), {});
  for (int a = 0; a < A.num_objects(); ++a)
    for (int a2 = 0; a2 < A.num_objects(); ++a2)
      for (int al : A.hom(a, a2))
        eta.comp[HA.at(a, a2)].push_back(
            RL.class_of(a, a2, f.obj[a], posB[f.arr[al]], posB[B.id(f.obj[a])]));
  // counit: (L∘R)(b,b') -> B(b,b'), [a | u | v] |-> u∘v
  ProfMorphism eps;
  try {
    eps = from_raw(LR, [&](int b, int b2, int a, int ui, int vi) {
      int u = B.hom(f.obj[a], b2)[ui];
      int v = B.hom(b, f.obj[a])[vi];
      return posB[B.compose(u, v)];
    });
  } catch (const Error&) {
    res.counit_well_defined = false;
    return res;
  }

  try {
    // L -> L∘Hom_A -> L∘(R∘L) -> (L∘R)∘L -> Hom_B∘L -> L
    auto c1 = compose_profunctors(L, HA, caps);
    auto c2 = compose_profunctors(L, RL.value, caps);
    auto c3 = compose_profunctors(LR.value, L, caps);
    auto c4 = compose_profunctors(HB, L, caps);
    auto yr = yoneda_right(c1, L);
    auto step1 = inverse(yr, c1.value, L);
    auto step2 = whisker_left(c1, c2, eta);
    auto step3 = inverse(associator(c3, LR, c2, RL), c3.value, c2.value);
    auto step4 = whisker_right(c3, c4, eps);
    auto step5 = yoneda_left(c4, L);
    res.triangle_left = is_identity(vcompose(step5, vcompose(step4, vcompose(step3, vcompose(step2, step1)))));

    // R -> Hom_A∘R -> (R∘L)∘R -> R∘(L∘R) -> R∘Hom_B -> R
    auto c5 = compose_profunctors(HA, R, caps);
    auto c6 = compose_profunctors(RL.value, R, caps);
    auto c7 = compose_profunctors(R, LR.value, caps);
    auto c8 = compose_profunctors(R, HB, caps);
    auto t1 = inverse(yoneda_left(c5, R), c5.value, R);
    auto t2 = whisker_right(c5, c6, eta);
    auto t3 = associator(c6, RL, c7, LR);
    auto t4 = whisker_left(c7, c8, eps);
    auto t5 = yoneda_right(c8, R);
    res.triangle_right = is_identity(vcompose(t5, vcompose(t4, vcompose(t3, vcompose(t2, t1)))));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeLimitExceeded) throw;
    res.unit_well_defined = false;
  }
  return res;
}

CoendPi0 coend_pi0_check(const LaxSquare& sq, int a, int b, const Caps& caps) {
  const auto& A = *sq.A;
  const auto& B = *sq.B;
  auto one = make_cat(terminal_category());
  auto qb = comma(sq.q, constant_functor(one, sq.B, b));  // (x, β: qx -> b, *)
  auto ap = comma(constant_functor(one, sq.A, a), sq.p);  // (*, α: a -> px, x)
  auto pb = pullback(qb.proj_left, ap.proj_right);
  auto part = pi0(*pb.apex);
  auto comp = compose_profunctors(hom_profunctor(sq.q, HomVariance::Companion),
                                  hom_profunctor(sq.p, HomVariance::Conjoint), caps);
  auto posA = hom_positions(A);
  auto posB = hom_positions(B);
  CoendPi0 out;
  out.coend_size = comp.value.count(a, b);
  out.pi0_size = part.count;
  std::vector<int> cls_of_comp(part.count, -1);
  std::vector<int> comp_of_cls(out.coend_size, -1);
  bool ok = true;
  for (int o = 0; o < pb.apex->num_objects(); ++o) {
    const auto& t1 = qb.triples[pb.triples[o][0]];
    const auto& t2 = ap.triples[pb.triples[o][2]];
    int x = t1[0];
    int cls = comp.class_of(a, b, x, posB[t1[1]], posA[t2[1]]);
    int k = part.label[o];
    if (cls_of_comp[k] < 0) cls_of_comp[k] = cls;
    else if (cls_of_comp[k] != cls) ok = false;
    if (comp_of_cls[cls] < 0) comp_of_cls[cls] = k;
    else if (comp_of_cls[cls] != k) ok = false;
  }
  for (int k : comp_of_cls) ok = ok && k >= 0;
  out.bijection = ok && out.coend_size == out.pi0_size;
  return out;
}

}  // namespace exq
