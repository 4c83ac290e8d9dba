#pragma once

// Brute-force reference computations straight from the definitions. Only raw accessors
// (src, tgt, compose, id) of the library types are used here.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "exq/fincat.hpp"
#include "exq/square.hpp"

namespace oracle {

using exq::FinCategory;
using exq::FinFunctor;
using exq::LaxSquare;
using exq::SetFunctor;

inline std::vector<int> arrows_between(const FinCategory& c, int x, int y) {
  std::vector<int> r;
  for (int f = 0; f < c.num_arrows(); ++f)
    if (c.src(f) == x && c.tgt(f) == y) r.push_back(f);
  return r;
}

inline int components(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  int k = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++k;
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[u])
        if (!seen[v]) seen[v] = 1, stack.push_back(v);
    }
  }
  return k;
}

inline int pi0(const FinCategory& c) {
  std::vector<std::pair<int, int>> e;
  for (int f = 0; f < c.num_arrows(); ++f) e.push_back({c.src(f), c.tgt(f)});
  return components(c.num_objects(), e);
}

// Components of Fact(a, γ, b); 0 when it is empty.
inline int fact_components(const LaxSquare& sq, int a, int gamma, int b) {
  const auto &P = *sq.P, &A = *sq.A, &B = *sq.B, &C = *sq.C;
  std::vector<std::array<int, 3>> objs;
  for (int x = 0; x < P.num_objects(); ++x)
    for (int al : arrows_between(A, a, sq.p.obj[x]))
      for (int be : arrows_between(B, sq.q.obj[x], b)) {
        int t = C.compose(sq.g.arr[be], C.compose(sq.phi.comp[x], sq.f.arr[al]));
        if (t == gamma) objs.push_back({al, x, be});
      }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < (int)objs.size(); ++i)
    for (int j = 0; j < (int)objs.size(); ++j)
      for (int d : arrows_between(P, objs[i][1], objs[j][1]))
        if (A.compose(sq.p.arr[d], objs[i][0]) == objs[j][0] && B.compose(objs[j][2], sq.q.arr[d]) == objs[i][2])
          edges.push_back({i, j});
  if (objs.empty()) return 0;
  return components((int)objs.size(), edges);
}

inline bool exact(const LaxSquare& sq) {
  for (int a = 0; a < sq.A->num_objects(); ++a)
    for (int b = 0; b < sq.B->num_objects(); ++b)
      for (int gamma : arrows_between(*sq.C, sq.f.obj[a], sq.g.obj[b]))
        if (fact_components(sq, a, gamma, b) != 1) return false;
  return true;
}

// Classes of ∫^x B(qx, b) × A(a, px).
inline int coend_classes(const LaxSquare& sq, int a, int b) {
  const auto &P = *sq.P, &A = *sq.A, &B = *sq.B;
  std::map<std::array<int, 3>, int> idx;
  for (int x = 0; x < P.num_objects(); ++x)
    for (int al : arrows_between(A, a, sq.p.obj[x]))
      for (int be : arrows_between(B, sq.q.obj[x], b)) idx.emplace(std::array<int, 3>{x, al, be}, (int)idx.size());
  std::vector<std::pair<int, int>> edges;
  for (auto& [k, i] : idx)
    for (int d = 0; d < P.num_arrows(); ++d) {
      if (P.src(d) != k[0]) continue;
      // (x, α, β'∘qδ) ~ (x', pδ∘α, β')
      const int x2 = P.tgt(d);
      for (int be2 : arrows_between(B, sq.q.obj[x2], b)) {
        if (B.compose(be2, sq.q.arr[d]) != k[2]) continue;
        edges.push_back({i, idx.at({x2, A.compose(sq.p.arr[d], k[1]), be2})});
      }
    }
  return components((int)idx.size(), edges);
}

// |Lan_f h (b)| as the colimit of h over f↓b.
inline int lan_size(const FinFunctor& f, const SetFunctor& h, int b) {
  const auto &A = *f.source, &B = *f.target;
  std::map<std::array<int, 3>, int> idx;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int al : arrows_between(B, f.obj[a], b))
      for (int s = 0; s < h.size[a]; ++s) idx.emplace(std::array<int, 3>{a, al, s}, (int)idx.size());
  std::vector<std::pair<int, int>> edges;
  for (auto& [k, i] : idx)
    for (int u = 0; u < A.num_arrows(); ++u) {
      if (A.src(u) != k[0]) continue;
      for (int al2 : arrows_between(B, f.obj[A.tgt(u)], b))
        if (B.compose(al2, f.arr[u]) == k[1]) edges.push_back({i, idx.at({A.tgt(u), al2, h.map[u][k[2]]})});
    }
  return components((int)idx.size(), edges);
}

inline bool opcartesian(const FinFunctor& p, int psi) {
  const auto &E = *p.source, &B = *p.target;
  const int e = E.src(psi), e1 = E.tgt(psi);
  for (int chi = 0; chi < E.num_arrows(); ++chi) {
    if (E.src(chi) != e) continue;
    const int e2 = E.tgt(chi);
    for (int w : arrows_between(B, p.obj[e1], p.obj[e2])) {
      if (B.compose(w, p.arr[psi]) != p.arr[chi]) continue;
      int n = 0;
      for (int th : arrows_between(E, e1, e2))
        if (p.arr[th] == w && E.compose(th, psi) == chi) ++n;
      if (n != 1) return false;
    }
  }
  return true;
}

inline bool opfibration(const FinFunctor& p) {
  const auto &E = *p.source, &B = *p.target;
  for (int e = 0; e < E.num_objects(); ++e)
    for (int phi = 0; phi < B.num_arrows(); ++phi) {
      if (B.src(phi) != p.obj[e]) continue;
      bool found = false;
      for (int psi = 0; psi < E.num_arrows() && !found; ++psi)
        if (E.src(psi) == e && p.arr[psi] == phi && opcartesian(p, psi)) found = true;
      if (!found) return false;
    }
  return true;
}

// Functors by trying every object map and every arrow map.
inline long count_functors(const FinCategory& A, const FinCategory& B) {
  const int na = A.num_objects(), nb = B.num_objects();
  if (na > 0 && nb == 0) return 0;
  long total = 0;
  std::vector<int> om(na, 0);
  for (;;) {
    {
      std::vector<int> am(A.num_arrows(), 0);
      std::vector<std::vector<int>> choices(A.num_arrows());
      bool any_empty = false;
      for (int f = 0; f < A.num_arrows(); ++f) {
        choices[f] = arrows_between(B, om[A.src(f)], om[A.tgt(f)]);
        if (choices[f].empty()) any_empty = true;
      }
      if (!any_empty) {
        std::vector<int> pos(A.num_arrows(), 0);
        for (;;) {
          for (int f = 0; f < A.num_arrows(); ++f) am[f] = choices[f][pos[f]];
          bool ok = true;
          for (int x = 0; x < na && ok; ++x) ok = am[A.id(x)] == B.id(om[x]);
          for (int f = 0; f < A.num_arrows() && ok; ++f)
            for (int g = 0; g < A.num_arrows() && ok; ++g) {
              int gf = A.compose(g, f);
              if (gf >= 0) ok = am[gf] == B.compose(am[g], am[f]);
            }
          total += ok;
          int i = 0;
          while (i < A.num_arrows() && ++pos[i] == (int)choices[i].size()) pos[i++] = 0;
          if (i == A.num_arrows()) break;
        }
      }
    }
    int i = 0;
    while (i < na && ++om[i] == nb) om[i++] = 0;
    if (i == na) break;
  }
  return total;
}

// Objects and arrows of f↓g counted from the definition.
inline std::pair<int, int> comma_size(const FinFunctor& f, const FinFunctor& g) {
  const auto &A = *f.source, &B = *g.source, &C = *f.target;
  std::vector<std::array<int, 3>> objs;
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < B.num_objects(); ++b)
      for (int c : arrows_between(C, f.obj[a], g.obj[b])) objs.push_back({a, c, b});
  int arrows = 0;
  for (auto& s : objs)
    for (auto& t : objs)
      for (int al : arrows_between(A, s[0], t[0]))
        for (int be : arrows_between(B, s[2], t[2]))
          arrows += C.compose(g.arr[be], s[1]) == C.compose(t[1], f.arr[al]);
  return {(int)objs.size(), arrows};
}

}  // namespace oracle
