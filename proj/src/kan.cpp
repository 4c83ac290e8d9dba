#include "exq/kan.hpp"

#include <algorithm>
#include <set>

#include "exq/gen.hpp"

namespace exq {

LanPlan::LanPlan(const FinFunctor& fn) : f(fn) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  const int nb = B.num_objects(), na = A.num_objects();
  auto pos = hom_positions(B);
  entry_start.assign(nb, std::vector<int>(na + 1, 0));
  entries.assign(nb, {});
  relations.assign(nb, {});
  for (int b = 0; b < nb; ++b) {
    for (int a = 0; a < na; ++a) {
      entry_start[b][a] = static_cast<int>(entries[b].size());
      for (int al : B.hom(f.obj[a], b)) entries[b].push_back({a, al});
    }
    entry_start[b][na] = static_cast<int>(entries[b].size());
    for (int u = 0; u < A.num_arrows(); ++u) {
      if (A.is_identity(u)) continue;
      const int a = A.src(u), a2 = A.tgt(u);
      for (int al2 : B.hom(f.obj[a2], b)) {
        int e2 = entry(b, a2, pos[al2]);
        int e = entry(b, a, pos[B.compose(al2, f.arr[u])]);
        relations[b].push_back({e, u, e2});
      }
    }
  }
}

KanResult left_kan(const LanPlan& plan, const SetFunctor& h, const Caps& caps) {
  const auto& f = plan.f;
  const auto& B = *f.target;
  const auto& A = *f.source;
  if (h.source.get() != f.source.get()) throw Error(ErrorKind::TargetMismatch, "set functor not on the source of f");
  const int nb = B.num_objects();
  KanResult r;
  r.extension.source = f.target;
  r.extension.size.assign(nb, 0);
  r.raw_start.assign(nb, {});
  r.raw_class.assign(nb, {});
  r.rep.assign(nb, {});
  long total = 0;
  for (int b = 0; b < nb; ++b) {
    auto& start = r.raw_start[b];
    const auto& ent = plan.entries[b];
    start.assign(ent.size() + 1, 0);
    for (std::size_t e = 0; e < ent.size(); ++e) start[e + 1] = start[e] + h.size[ent[e][0]];
    total += start.back();
    if (total > caps.max_cells) throw Error(ErrorKind::SizeLimitExceeded, "Kan extension carrier");
    UnionFind uf(start.back());
    for (const auto& [e, u, e2] : plan.relations[b]) {
      const auto& m = h.map[u];
      for (int s = 0; s < static_cast<int>(m.size()); ++s) uf.unite(start[e] + s, start[e2] + m[s]);
    }
    int count = 0;
    r.raw_class[b] = uf.labels(&count);
    r.extension.size[b] = count;
    r.rep[b].assign(count, {-1, -1, -1});
    for (std::size_t e = 0; e < ent.size(); ++e)
      for (int s = 0; s < h.size[ent[e][0]]; ++s) {
        auto& rep = r.rep[b][r.raw_class[b][start[e] + s]];
        if (rep[0] < 0) rep = {ent[e][0], ent[e][1], s};
      }
  }
  auto pos = hom_positions(B);
  r.extension.map.assign(B.num_arrows(), {});
  r.extension.labels.assign(nb, {});
  for (int b = 0; b < nb; ++b)
    for (const auto& [a, al, s] : r.rep[b])
      r.extension.labels[b].push_back(tuple_id({A.object(a), B.arrow_id(al), h.label(a, s)}));
  for (int be = 0; be < B.num_arrows(); ++be) {
    const int b = B.src(be), b2 = B.tgt(be);
    auto& m = r.extension.map[be];
    m.assign(r.extension.size[b], -1);
    const auto& ent = plan.entries[b];
    for (std::size_t e = 0; e < ent.size(); ++e) {
      const int a = ent[e][0];
      const int moved = pos[B.compose(be, ent[e][1])];
      for (int s = 0; s < h.size[a]; ++s) {
        int cls = r.raw_class[b][r.raw_start[b][e] + s];
        int v = r.class_of(plan, b2, a, moved, s);
        if (m[cls] < 0) m[cls] = v;
        else if (m[cls] != v) throw Error(ErrorKind::IllDefinedComposition, "Kan extension arrow action");
      }
    }
  }
  r.unit.assign(A.num_objects(), {});
  for (int a = 0; a < A.num_objects(); ++a) {
    const int fa = f.obj[a];
    for (int s = 0; s < h.size[a]; ++s) r.unit[a].push_back(r.class_of(plan, fa, a, pos[B.id(fa)], s));
  }
  return r;
}

KanResult left_kan(const FinFunctor& f, const SetFunctor& h, const Caps& caps) {
  return left_kan(LanPlan(f), h, caps);
}

namespace {

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

class SetFunctorSearch {
 public:
  SetFunctorSearch(const Cat& c, int max_size, const std::function<bool(const SetFunctor&)>& fn, long limit)
      : c_(*c), max_(max_size), fn_(fn), limit_(limit) {
    h_.source = c;
    h_.size.assign(c_.num_objects(), 0);
    h_.map.assign(c_.num_arrows(), {});
    for (int k = 0; k < c_.num_arrows(); ++k)
      if (!c_.is_identity(k)) order_.push_back(k);
    rank_.assign(c_.num_arrows(), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) rank_[order_[i]] = static_cast<int>(i);
    checks_.assign(order_.size(), {});
    for (int g = 0; g < c_.num_arrows(); ++g)
      for (int f : c_.in(c_.src(g))) {
        if (c_.is_identity(g) || c_.is_identity(f)) continue;
        int gf = c_.compose(g, f);
        int r = std::max({rank_[g], rank_[f], rank_[gf]});
        checks_[r].push_back({g, f, gf});
      }
  }

  void run() { sizes(0); }

 private:
  bool sizes(int x) {
    if (x == c_.num_objects()) {
      for (int o = 0; o < c_.num_objects(); ++o) {
        auto& m = h_.map[c_.id(o)];
        m.resize(h_.size[o]);
        for (int i = 0; i < h_.size[o]; ++i) m[i] = i;
      }
      return arrows(0);
    }
    for (int n = 0; n <= max_; ++n) {
      h_.size[x] = n;
      if (!sizes(x + 1)) return false;
    }
    return true;
  }

  bool arrows(std::size_t i) {
    if (i == order_.size()) {
      if (limit_ >= 0 && ++count_ > limit_) throw Error(ErrorKind::SizeLimitExceeded, "set functor enumeration");
      return fn_(h_);
    }
    const int k = order_[i];
    const int m = h_.size[c_.src(k)], n = h_.size[c_.tgt(k)];
    const int total = ipow(n, m);
    auto& map = h_.map[k];
    map.assign(m, 0);
    for (int code = 0; code < total; ++code) {
      int t = code;
      for (int s = 0; s < m; ++s) {
        map[s] = t % n;
        t /= n;
      }
      bool ok = true;
      for (const auto& [g, f, gf] : checks_[i]) {
        const auto& mg = h_.map[g];
        const auto& mf = h_.map[f];
        const auto& mgf = h_.map[gf];
        for (std::size_t s = 0; s < mf.size() && ok; ++s) ok = mgf[s] == mg[mf[s]];
        if (!ok) break;
      }
      if (ok && !arrows(i + 1)) return false;
    }
    return true;
  }

  const FinCategory& c_;
  int max_;
  const std::function<bool(const SetFunctor&)>& fn_;
  long limit_;
  long count_ = 0;
  SetFunctor h_;
  std::vector<int> order_, rank_;
  std::vector<std::vector<std::array<int, 3>>> checks_;
};

bool is_product_cone(const FinCategory& c, int p, int p1, int p2) {
  const int x = c.tgt(p1), y = c.tgt(p2);
  for (int z = 0; z < c.num_objects(); ++z) {
    auto hx = c.hom(z, x), hy = c.hom(z, y), hp = c.hom(z, p);
    if (hp.size() != hx.size() * hy.size()) return false;
    std::vector<bool> hit(hx.size() * hy.size(), false);
    for (int k : hp) {
      auto ix = std::find(hx.begin(), hx.end(), c.compose(p1, k)) - hx.begin();
      auto iy = std::find(hy.begin(), hy.end(), c.compose(p2, k)) - hy.begin();
      auto idx = ix * hy.size() + iy;
      if (hit[idx]) return false;
      hit[idx] = true;
    }
  }
  return true;
}

bool is_terminal(const FinCategory& c, int t) {
  for (int z = 0; z < c.num_objects(); ++z)
    if (c.hom(z, t).size() != 1) return false;
  return true;
}

}  // namespace

void for_each_set_functor(const Cat& c, int max_size, const std::function<bool(const SetFunctor&)>& fn, long limit) {
  SetFunctorSearch(c, max_size, fn, limit).run();
}

SetFunctor representable(const Cat& c, int a) {
  const auto& C = *c;
  auto pos = hom_positions(C);
  SetFunctor h{c, {}, std::vector<std::vector<int>>(C.num_arrows()), {}};
  for (int x = 0; x < C.num_objects(); ++x) {
    h.size.push_back(static_cast<int>(C.hom(a, x).size()));
    h.labels.push_back({});
    for (int k : C.hom(a, x)) h.labels.back().push_back(C.arrow_id(k));
  }
  for (int u = 0; u < C.num_arrows(); ++u)
    for (int k : C.hom(a, C.src(u))) h.map[u].push_back(pos[C.compose(u, k)]);
  return h;
}

bool is_connected_set_functor(const SetFunctor& h) {
  const auto& C = *h.source;
  std::vector<int> start(C.num_objects() + 1, 0);
  for (int x = 0; x < C.num_objects(); ++x) start[x + 1] = start[x] + h.size[x];
  if (start.back() == 0) return false;
  UnionFind uf(start.back());
  for (int k = 0; k < C.num_arrows(); ++k)
    for (int s = 0; s < h.size[C.src(k)]; ++s) uf.unite(start[C.src(k)] + s, start[C.tgt(k)] + h.map[k][s]);
  int n = 0;
  uf.labels(&n);
  return n == 1;
}

std::optional<Error> check_product_structure(const ProductStructure& ps) {
  const auto& C = *ps.cat;
  const int n = C.num_objects();
  if (ps.terminal < 0 || ps.terminal >= n || !is_terminal(C, ps.terminal))
    return Error(ErrorKind::NoProductStructure, "chosen terminal object is not terminal");
  if (static_cast<int>(ps.prod.size()) != n * n) return Error(ErrorKind::NoProductStructure, "product table size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& [p, p1, p2] = ps.prod[x * n + y];
      if (p < 0 || p >= n || p1 < 0 || p2 < 0 || p1 >= C.num_arrows() || p2 >= C.num_arrows() || C.src(p1) != p ||
          C.src(p2) != p || C.tgt(p1) != x || C.tgt(p2) != y || !is_product_cone(C, p, p1, p2))
        return Error(ErrorKind::NoProductStructure, "no product cone at " + tuple_id({C.object(x), C.object(y)}));
    }
  return std::nullopt;
}

std::optional<ProductStructure> find_product_structure(const Cat& c) {
  const auto& C = *c;
  const int n = C.num_objects();
  ProductStructure ps{c, -1, std::vector<std::array<int, 3>>(n * n, {-1, -1, -1})};
  for (int t = 0; t < n && ps.terminal < 0; ++t)
    if (is_terminal(C, t)) ps.terminal = t;
  if (ps.terminal < 0) return std::nullopt;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool found = false;
      for (int p = 0; p < n && !found; ++p)
        for (int p1 : C.hom(p, x)) {
          for (int p2 : C.hom(p, y))
            if (is_product_cone(C, p, p1, p2)) {
              ps.prod[x * n + y] = {p, p1, p2};
              found = true;
              break;
            }
          if (found) break;
        }
      if (!found) return std::nullopt;
    }
  return ps;
}

bool preserves_finite_products(const SetFunctor& h, const ProductStructure& ps) {
  if (h.source.get() != ps.cat.get()) throw Error(ErrorKind::NoProductStructure, "structure on another category");
  if (auto e = check_product_structure(ps)) throw *e;
  const int n = ps.cat->num_objects();
  if (h.size[ps.terminal] != 1) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& [p, p1, p2] = ps.prod[x * n + y];
      if (h.size[p] != h.size[x] * h.size[y]) return false;
      std::vector<bool> hit(h.size[p], false);
      for (int s = 0; s < h.size[p]; ++s) {
        int idx = h.map[p1][s] * h.size[y] + h.map[p2][s];
        if (hit[idx]) return false;
        hit[idx] = true;
      }
    }
  return true;
}

bool preserves_finite_products(const FinFunctor& f, const ProductStructure& src, const ProductStructure& tgt) {
  if (f.source.get() != src.cat.get() || f.target.get() != tgt.cat.get())
    throw Error(ErrorKind::NoProductStructure, "structure on another category");
  if (auto e = check_product_structure(src)) throw *e;
  if (auto e = check_product_structure(tgt)) throw *e;
  const auto& D = *f.target;
  if (!is_terminal(D, f.obj[src.terminal])) return false;
  const int n = src.cat->num_objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const auto& [p, p1, p2] = src.prod[x * n + y];
      if (!is_product_cone(D, f.obj[p], f.arr[p1], f.arr[p2])) return false;
    }
  return true;
}

ProductStructure meet_semilattice(const std::vector<std::vector<bool>>& leq, const std::vector<std::string>& names) {
  auto c = make_cat(poset_category(leq, names));
  const int n = static_cast<int>(leq.size());
  ProductStructure ps{c, -1, std::vector<std::array<int, 3>>(n * n, {-1, -1, -1})};
  for (int t = 0; t < n && ps.terminal < 0; ++t) {
    bool top = true;
    for (int z = 0; z < n; ++z) top = top && leq[z][t];
    if (top) ps.terminal = t;
  }
  if (ps.terminal < 0) throw Error(ErrorKind::NoProductStructure, "no top element");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int meet = -1;
      for (int m = 0; m < n; ++m) {
        if (!leq[m][x] || !leq[m][y]) continue;
        bool greatest = true;
        for (int z = 0; z < n; ++z)
          if (leq[z][x] && leq[z][y] && !leq[z][m]) greatest = false;
        if (greatest) meet = m;
      }
      if (meet < 0) throw Error(ErrorKind::NoProductStructure, "missing meet");
      ps.prod[x * n + y] = {meet, c->hom(meet, x)[0], c->hom(meet, y)[0]};
    }
  return ps;
}

}  // namespace exq

namespace exq {

namespace {

// Inclusion order on a random family of subsets of {0..k-1} closed under intersection, with the full set.
std::vector<std::vector<bool>> random_semilattice_order(Rng& rng, int k, int draws) {
  std::set<unsigned> family = {(1u << k) - 1};
  for (int i = 0; i < draws; ++i) family.insert(static_cast<unsigned>(rng.uniform(0, (1 << k) - 1)));
  for (bool grew = true; grew;) {
    grew = false;
    for (unsigned a : std::vector<unsigned>(family.begin(), family.end()))
      for (unsigned b : std::vector<unsigned>(family.begin(), family.end()))
        grew = family.insert(a & b).second || grew;
  }
  const std::vector<unsigned> v(family.begin(), family.end());
  std::vector<std::vector<bool>> leq(v.size(), std::vector<bool>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) leq[i][j] = (v[i] & v[j]) == v[i];
  return leq;
}

std::vector<std::vector<bool>> product_order(const std::vector<std::vector<bool>>& a,
                                             const std::vector<std::vector<bool>>& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::vector<bool>> leq(n * m, std::vector<bool>(n * m));
  for (std::size_t i = 0; i < n * m; ++i)
    for (std::size_t j = 0; j < n * m; ++j) leq[i][j] = a[i / m][j / m] && b[i % m][j % m];
  return leq;
}

std::vector<std::vector<bool>> draw_order(Rng& rng, std::string& desc) {
  if (rng.coin(0.3)) {
    desc += "product";
    auto a = random_semilattice_order(rng, 2, 2);
    auto b = random_semilattice_order(rng, 2, 1);
    return product_order(a, b);
  }
  desc += "subsets";
  return random_semilattice_order(rng, 3, rng.uniform(1, 4));
}

}  // namespace

KanProductRow kan_product_row(std::uint64_t seed) {
  KanProductRow row;
  row.seed = seed;
  Rng rng(seed);
  try {
    std::string desc = "I=";
    const auto I = meet_semilattice(draw_order(rng, desc));
    ProductStructure J;
    desc += " J=";
    switch (rng.uniform(0, 2)) {
      case 0: J = I; desc += "I"; break;
      default: J = meet_semilattice(draw_order(rng, desc));
    }
    std::vector<FinFunctor> fs;
    for_each_functor(I.cat, J.cat, [&](const FinFunctor& f) {
      if (preserves_finite_products(f, I, J)) fs.push_back(f);
      return fs.size() < 2000;
    });
    if (fs.empty()) throw Error(ErrorKind::NoProductStructure, "no product-preserving functor I -> J");
    const FinFunctor f = rng.pick(fs);
    std::vector<SetFunctor> gs;
    // x×x = x in a poset, so product-preserving values have at most one element
    const int max_size = I.cat->num_objects() <= 5 ? 2 : 1;
    for_each_set_functor(I.cat, max_size, [&](const SetFunctor& g) {
      if (preserves_finite_products(g, I)) gs.push_back(g);
      return gs.size() < 2000;
    });
    const SetFunctor g = rng.pick(gs);
    row.description = desc;
    row.i_size = I.cat->num_objects();
    row.j_size = J.cat->num_objects();
    row.g_preserves = preserves_finite_products(g, I);
    row.lan_preserves = preserves_finite_products(left_kan(f, g).extension, J);
  } catch (const Error& e) {
    row.note = e.what();
  }
  return row;
}

KanProductReport kan_product_suite(std::uint64_t seed, int n) {
  KanProductReport rep;
  rep.rows.resize(std::max(n, 0));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) rep.rows[i] = kan_product_row(instance_seed(seed, static_cast<std::uint64_t>(i)));
  for (const auto& r : rep.rows) rep.passed += r.g_preserves && r.lan_preserves;
  return rep;
}

}  // namespace exq
