#include "exq/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace exq {

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<ArrowRec> arrows,
                         std::vector<int> identity, const ComposeFn& compose)
    : objects_(std::move(objects)), arrows_(std::move(arrows)), identity_(std::move(identity)) {
  const int n = num_objects(), m = num_arrows();
  out_.assign(n, {});
  in_.assign(n, {});
  for (int f = 0; f < m; ++f) {
    out_[arrows_[f].src].push_back(f);
    in_[arrows_[f].tgt].push_back(f);
  }
  for (auto& v : out_)
    std::stable_sort(v.begin(), v.end(), [&](int a, int b) { return arrows_[a].tgt < arrows_[b].tgt; });
  pos_in_out_.assign(m, 0);
  for (int x = 0; x < n; ++x)
    for (std::size_t i = 0; i < out_[x].size(); ++i) pos_in_out_[out_[x][i]] = static_cast<int>(i);
  comp_offset_.assign(m, 0);
  std::size_t total = 0;
  for (int f = 0; f < m; ++f) {
    comp_offset_[f] = total;
    total += out_[arrows_[f].tgt].size();
  }
  comp_.assign(total, -1);
  for (int f = 0; f < m; ++f) {
    const auto& gs = out_[arrows_[f].tgt];
    for (std::size_t i = 0; i < gs.size(); ++i) comp_[comp_offset_[f] + i] = compose(gs[i], f);
  }
  obj_index_.reserve(n);
  for (int x = 0; x < n; ++x) obj_index_.emplace(objects_[x], x);
  arr_index_.reserve(m);
  for (int f = 0; f < m; ++f) arr_index_.emplace(arrows_[f].id, f);
}

std::span<const int> FinCategory::hom(int x, int y) const {
  const auto& v = out_[x];
  auto lo = std::partition_point(v.begin(), v.end(), [&](int f) { return arrows_[f].tgt < y; });
  auto hi = std::partition_point(lo, v.end(), [&](int f) { return arrows_[f].tgt <= y; });
  return {v.data() + (lo - v.begin()), static_cast<std::size_t>(hi - lo)};
}

int FinCategory::find_object(std::string_view name) const {
  auto it = obj_index_.find(std::string(name));
  return it == obj_index_.end() ? -1 : it->second;
}

int FinCategory::find_arrow(std::string_view name) const {
  auto it = arr_index_.find(std::string(name));
  return it == arr_index_.end() ? -1 : it->second;
}

int FinCategory::inverse(int f) const {
  for (int g : hom(tgt(f), src(f)))
    if (compose(g, f) == id(src(f)) && compose(f, g) == id(tgt(f))) return g;
  return -1;
}

CategoryData FinCategory::data() const {
  CategoryData d;
  d.objects = objects_;
  d.arrows = arrows_;
  d.identity = identity_;
  for (int f = 0; f < num_arrows(); ++f) {
    if (is_identity(f)) continue;
    for (int g : out_[tgt(f)]) {
      if (is_identity(g)) continue;
      d.compose.push_back({g, f, compose(g, f)});
    }
  }
  return d;
}

std::optional<Error> check_category_laws(const FinCategory& c, bool units) {
  for (int x = 0; x < c.num_objects(); ++x) {
    int i = c.id(x);
    if (i < 0 || i >= c.num_arrows()) return Error(ErrorKind::MissingIdentity, c.object(x));
    if (c.src(i) != x || c.tgt(i) != x) return Error(ErrorKind::BadIdentity, c.object(x));
  }
  for (int f = 0; f < c.num_arrows(); ++f) {
    for (int g : c.out(c.tgt(f))) {
      int gf = c.compose(g, f);
      if (gf < 0 || gf >= c.num_arrows())
        return Error(ErrorKind::MissingComposite, c.arrow_id(g) + " o " + c.arrow_id(f));
      if (c.src(gf) != c.src(f) || c.tgt(gf) != c.tgt(g))
        return Error(ErrorKind::EndpointMismatch, c.arrow_id(g) + " o " + c.arrow_id(f));
    }
  }
  for (int f = 0; units && f < c.num_arrows(); ++f) {
    if (c.compose(c.id(c.tgt(f)), f) != f || c.compose(f, c.id(c.src(f))) != f)
      return Error(ErrorKind::UnitLawViolation, c.arrow_id(f));
  }
  for (int f = 0; f < c.num_arrows(); ++f)
    for (int g : c.out(c.tgt(f)))
      for (int h : c.out(c.tgt(g)))
        if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
          return Error(ErrorKind::AssociativityViolation,
                       tuple_id({c.arrow_id(h), c.arrow_id(g), c.arrow_id(f)}));
  return std::nullopt;
}

FinCategory validate_category(const CategoryData& raw, const Caps& caps) {
  const int n = static_cast<int>(raw.objects.size());
  const int m = static_cast<int>(raw.arrows.size());
  if (m > caps.max_arrows)
    throw Error(ErrorKind::SizeLimitExceeded, std::to_string(m) + " arrows > cap " + std::to_string(caps.max_arrows));
  {
    std::set<std::string> seen;
    for (const auto& o : raw.objects)
      if (!seen.insert(o).second) throw Error(ErrorKind::DuplicateId, "object " + o);
    seen.clear();
    for (const auto& a : raw.arrows)
      if (!seen.insert(a.id).second) throw Error(ErrorKind::DuplicateId, "arrow " + a.id);
  }
  for (const auto& a : raw.arrows)
    if (a.src < 0 || a.src >= n || a.tgt < 0 || a.tgt >= n) throw Error(ErrorKind::UnknownId, "endpoint of " + a.id);
  if (static_cast<int>(raw.identity.size()) != n) throw Error(ErrorKind::MissingIdentity, "identity table size");
  for (int x = 0; x < n; ++x) {
    int i = raw.identity[x];
    if (i < 0) throw Error(ErrorKind::MissingIdentity, raw.objects[x]);
    if (i >= m || raw.arrows[i].src != x || raw.arrows[i].tgt != x)
      throw Error(ErrorKind::BadIdentity, raw.objects[x]);
  }
  std::map<std::pair<int, int>, int> table;
  for (const auto& [g, f, gf] : raw.compose) {
    if (g < 0 || g >= m || f < 0 || f >= m || gf < 0 || gf >= m) throw Error(ErrorKind::UnknownId, "compose entry");
    if (raw.arrows[f].tgt != raw.arrows[g].src)
      throw Error(ErrorKind::NonComposableEntry, tuple_id({raw.arrows[g].id, raw.arrows[f].id}));
    if (raw.arrows[gf].src != raw.arrows[f].src || raw.arrows[gf].tgt != raw.arrows[g].tgt)
      throw Error(ErrorKind::EndpointMismatch, tuple_id({raw.arrows[g].id, raw.arrows[f].id, raw.arrows[gf].id}));
    auto [it, fresh] = table.emplace(std::make_pair(g, f), gf);
    if (!fresh && it->second != gf)
      throw Error(ErrorKind::ConflictingEntry, tuple_id({raw.arrows[g].id, raw.arrows[f].id}));
  }
  auto is_id = [&](int a) { return raw.identity[raw.arrows[a].src] == a; };
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      if (raw.arrows[f].tgt != raw.arrows[g].src || table.count({g, f})) continue;
      if (is_id(g)) table[{g, f}] = f;
      else if (is_id(f)) table[{g, f}] = g;
      else throw Error(ErrorKind::MissingComposite, tuple_id({raw.arrows[g].id, raw.arrows[f].id}));
    }
  FinCategory c(raw.objects, raw.arrows, raw.identity, [&](int g, int f) { return table.at({g, f}); });
  if (auto e = check_category_laws(c)) throw *e;
  return c;
}

bool operator==(const FinFunctor& a, const FinFunctor& b) {
  return a.source == b.source && a.target == b.target && a.obj == b.obj && a.arr == b.arr;
}

std::optional<Error> check_functor(const FinFunctor& F) {
  const auto& A = *F.source;
  const auto& B = *F.target;
  if (static_cast<int>(F.obj.size()) != A.num_objects() || static_cast<int>(F.arr.size()) != A.num_arrows())
    return Error(ErrorKind::FunctorLawViolation, "map sizes");
  for (int x = 0; x < A.num_objects(); ++x)
    if (F.obj[x] < 0 || F.obj[x] >= B.num_objects()) return Error(ErrorKind::FunctorLawViolation, "object " + A.object(x));
  for (int f = 0; f < A.num_arrows(); ++f) {
    int Ff = F.arr[f];
    if (Ff < 0 || Ff >= B.num_arrows()) return Error(ErrorKind::FunctorLawViolation, "arrow " + A.arrow_id(f));
    if (B.src(Ff) != F.obj[A.src(f)] || B.tgt(Ff) != F.obj[A.tgt(f)])
      return Error(ErrorKind::FunctorLawViolation, "endpoints of " + A.arrow_id(f));
  }
  for (int x = 0; x < A.num_objects(); ++x)
    if (F.arr[A.id(x)] != B.id(F.obj[x])) return Error(ErrorKind::FunctorLawViolation, "identity at " + A.object(x));
  for (int f = 0; f < A.num_arrows(); ++f)
    for (int g : A.out(A.tgt(f)))
      if (F.arr[A.compose(g, f)] != B.compose(F.arr[g], F.arr[f]))
        return Error(ErrorKind::FunctorLawViolation, "composite " + tuple_id({A.arrow_id(g), A.arrow_id(f)}));
  return std::nullopt;
}

FinFunctor identity_functor(const Cat& c) {
  FinFunctor F{c, c, std::vector<int>(c->num_objects()), std::vector<int>(c->num_arrows())};
  std::iota(F.obj.begin(), F.obj.end(), 0);
  std::iota(F.arr.begin(), F.arr.end(), 0);
  return F;
}

FinFunctor compose(const FinFunctor& g, const FinFunctor& f) {
  if (f.target.get() != g.source.get())
    throw Error(ErrorKind::TargetMismatch, "functor composition");
  FinFunctor h{f.source, g.target, std::vector<int>(f.obj.size()), std::vector<int>(f.arr.size())};
  for (std::size_t x = 0; x < f.obj.size(); ++x) h.obj[x] = g.obj[f.obj[x]];
  for (std::size_t a = 0; a < f.arr.size(); ++a) h.arr[a] = g.arr[f.arr[a]];
  return h;
}

FinFunctor constant_functor(const Cat& source, const Cat& target, int object) {
  return FinFunctor{source, target, std::vector<int>(source->num_objects(), object),
                    std::vector<int>(source->num_arrows(), target->id(object))};
}

namespace {

struct FunctorSearch {
  const FinCategory& A;
  const FinCategory& B;
  const std::function<bool(const FinFunctor&)>& fn;
  FinFunctor cur;
  std::vector<int> order;                                   // non-identity arrows
  std::vector<std::vector<std::array<int, 3>>> constraints;  // per position in `order`
  std::vector<std::vector<int>> obj_checks;                  // arrows whose later endpoint is x
  bool stop = false;

  FunctorSearch(const Cat& a, const Cat& b, const std::function<bool(const FinFunctor&)>& f)
      : A(*a), B(*b), fn(f), cur{a, b, std::vector<int>(a->num_objects(), -1), std::vector<int>(a->num_arrows(), -1)} {
    std::vector<int> rank(A.num_arrows(), -1);
    for (int f2 = 0; f2 < A.num_arrows(); ++f2)
      if (!A.is_identity(f2)) {
        rank[f2] = static_cast<int>(order.size());
        order.push_back(f2);
      }
    constraints.assign(order.size(), {});
    for (int f2 = 0; f2 < A.num_arrows(); ++f2)
      for (int g : A.out(A.tgt(f2))) {
        int gf = A.compose(g, f2);
        int k = std::max({rank[f2], rank[g], rank[gf]});
        if (k >= 0) constraints[k].push_back({g, f2, gf});
      }
    obj_checks.assign(A.num_objects(), {});
    for (int f2 : order) obj_checks[std::max(A.src(f2), A.tgt(f2))].push_back(f2);
  }

  void objects(int x) {
    if (stop) return;
    if (x == A.num_objects()) {
      for (int y = 0; y < A.num_objects(); ++y) cur.arr[A.id(y)] = B.id(cur.obj[y]);
      arrows(0);
      return;
    }
    for (int b = 0; b < B.num_objects() && !stop; ++b) {
      cur.obj[x] = b;
      bool ok = true;
      for (int f2 : obj_checks[x])
        if (B.hom(cur.obj[A.src(f2)], cur.obj[A.tgt(f2)]).empty()) {
          ok = false;
          break;
        }
      if (ok) objects(x + 1);
    }
    cur.obj[x] = -1;
  }

  void arrows(std::size_t k) {
    if (stop) return;
    if (k == order.size()) {
      if (!fn(cur)) stop = true;
      return;
    }
    int f2 = order[k];
    for (int b : B.hom(cur.obj[A.src(f2)], cur.obj[A.tgt(f2)])) {
      cur.arr[f2] = b;
      bool ok = true;
      for (const auto& [g, f1, gf] : constraints[k])
        if (cur.arr[gf] != B.compose(cur.arr[g], cur.arr[f1])) {
          ok = false;
          break;
        }
      if (ok) arrows(k + 1);
      if (stop) break;
    }
    cur.arr[f2] = -1;
  }
};

}  // namespace

void for_each_functor(const Cat& a, const Cat& b, const std::function<bool(const FinFunctor&)>& fn) {
  FunctorSearch s(a, b, fn);
  s.objects(0);
}

long count_functors(const Cat& a, const Cat& b, long limit) {
  long n = 0;
  for_each_functor(a, b, [&](const FinFunctor&) { return ++n != limit; });
  return n;
}

std::optional<Error> check_nat(const NatTransform& t) {
  const auto& F = t.from;
  const auto& G = t.to;
  if (F.source.get() != G.source.get() || F.target.get() != G.target.get())
    return Error(ErrorKind::NaturalityViolation, "functors not parallel");
  const auto& A = *F.source;
  const auto& B = *F.target;
  if (static_cast<int>(t.comp.size()) != A.num_objects()) return Error(ErrorKind::NaturalityViolation, "component count");
  for (int x = 0; x < A.num_objects(); ++x) {
    int c = t.comp[x];
    if (c < 0 || c >= B.num_arrows() || B.src(c) != F.obj[x] || B.tgt(c) != G.obj[x])
      return Error(ErrorKind::NaturalityViolation, "component at " + A.object(x));
  }
  for (int f = 0; f < A.num_arrows(); ++f)
    if (B.compose(G.arr[f], t.comp[A.src(f)]) != B.compose(t.comp[A.tgt(f)], F.arr[f]))
      return Error(ErrorKind::NaturalityViolation, "square at " + A.arrow_id(f));
  return std::nullopt;
}

NatTransform identity_nat(const FinFunctor& f) {
  NatTransform t{f, f, std::vector<int>(f.obj.size())};
  for (std::size_t x = 0; x < f.obj.size(); ++x) t.comp[x] = f.target->id(f.obj[x]);
  return t;
}

NatTransform vcompose(const NatTransform& beta, const NatTransform& alpha) {
  NatTransform t{alpha.from, beta.to, std::vector<int>(alpha.comp.size())};
  const auto& B = *alpha.from.target;
  for (std::size_t x = 0; x < alpha.comp.size(); ++x) t.comp[x] = B.compose(beta.comp[x], alpha.comp[x]);
  return t;
}

NatTransform whisker_left(const FinFunctor& g, const NatTransform& alpha) {
  NatTransform t{compose(g, alpha.from), compose(g, alpha.to), std::vector<int>(alpha.comp.size())};
  for (std::size_t x = 0; x < alpha.comp.size(); ++x) t.comp[x] = g.arr[alpha.comp[x]];
  return t;
}

NatTransform whisker_right(const NatTransform& alpha, const FinFunctor& h) {
  NatTransform t{compose(alpha.from, h), compose(alpha.to, h), std::vector<int>(h.obj.size())};
  for (std::size_t x = 0; x < h.obj.size(); ++x) t.comp[x] = alpha.comp[h.obj[x]];
  return t;
}

bool operator==(const NatTransform& a, const NatTransform& b) {
  return a.from == b.from && a.to == b.to && a.comp == b.comp;
}

void for_each_nat(const FinFunctor& from, const FinFunctor& to, const std::function<bool(const NatTransform&)>& fn) {
  const auto& A = *from.source;
  const auto& B = *from.target;
  NatTransform t{from, to, std::vector<int>(A.num_objects(), -1)};
  bool stop = false;
  std::function<void(int)> go = [&](int x) {
    if (stop) return;
    if (x == A.num_objects()) {
      if (!fn(t)) stop = true;
      return;
    }
    for (int c : B.hom(from.obj[x], to.obj[x])) {
      t.comp[x] = c;
      bool ok = true;
      for (int k = 0; k < A.num_arrows() && ok; ++k) {
        const int s = A.src(k), d = A.tgt(k);
        if (std::max(s, d) != x) continue;
        ok = B.compose(to.arr[k], t.comp[s]) == B.compose(t.comp[d], from.arr[k]);
      }
      if (ok) go(x + 1);
      if (stop) return;
    }
    t.comp[x] = -1;
  };
  go(0);
}

std::string SetFunctor::label(int x, int i) const {
  if (x < static_cast<int>(labels.size()) && i < static_cast<int>(labels[x].size())) return labels[x][i];
  return std::to_string(i);
}

std::optional<Error> check_set_functor(const SetFunctor& h, const Caps& caps) {
  const auto& A = *h.source;
  if (static_cast<int>(h.size.size()) != A.num_objects() || static_cast<int>(h.map.size()) != A.num_arrows())
    return Error(ErrorKind::FunctorLawViolation, "set functor table sizes");
  for (int x = 0; x < A.num_objects(); ++x)
    if (h.size[x] < 0 || h.size[x] > caps.max_set_size)
      return Error(ErrorKind::SizeLimitExceeded, "set at " + A.object(x));
  for (int f = 0; f < A.num_arrows(); ++f) {
    if (static_cast<int>(h.map[f].size()) != h.size[A.src(f)])
      return Error(ErrorKind::FunctorLawViolation, "domain of " + A.arrow_id(f));
    for (int v : h.map[f])
      if (v < 0 || v >= h.size[A.tgt(f)]) return Error(ErrorKind::FunctorLawViolation, "codomain of " + A.arrow_id(f));
  }
  for (int x = 0; x < A.num_objects(); ++x)
    for (int i = 0; i < h.size[x]; ++i)
      if (h.map[A.id(x)][i] != i) return Error(ErrorKind::FunctorLawViolation, "identity at " + A.object(x));
  for (int f = 0; f < A.num_arrows(); ++f)
    for (int g : A.out(A.tgt(f))) {
      int gf = A.compose(g, f);
      for (int i = 0; i < h.size[A.src(f)]; ++i)
        if (h.map[gf][i] != h.map[g][h.map[f][i]])
          return Error(ErrorKind::FunctorLawViolation, "composite " + tuple_id({A.arrow_id(g), A.arrow_id(f)}));
    }
  return std::nullopt;
}

SetFunctor constant_set_functor(const Cat& c, int n) {
  SetFunctor h{c, std::vector<int>(c->num_objects(), n), {}, {}};
  std::vector<int> idv(n);
  std::iota(idv.begin(), idv.end(), 0);
  h.map.assign(c->num_arrows(), idv);
  return h;
}

SetFunctor compose(const SetFunctor& h, const FinFunctor& f) {
  SetFunctor r{f.source, {}, {}, {}};
  for (int x : f.obj) r.size.push_back(h.size[x]);
  for (int a : f.arr) r.map.push_back(h.map[a]);
  if (!h.labels.empty())
    for (int x : f.obj) r.labels.push_back(h.labels[x]);
  return r;
}

FinCategory empty_category() {
  return FinCategory({}, {}, {}, [](int, int) { return -1; });
}

FinCategory terminal_category() {
  return FinCategory({"*"}, {{"1_*", 0, 0}}, {0}, [](int, int) { return 0; });
}

FinCategory discrete_category(int n) {
  std::vector<std::string> objs;
  std::vector<ArrowRec> arrs;
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    objs.push_back(std::to_string(i));
    arrs.push_back({"1_" + std::to_string(i), i, i});
    ids.push_back(i);
  }
  return FinCategory(objs, arrs, ids, [](int g, int) { return g; });
}

FinCategory walking_arrow() {
  return FinCategory({"0", "1"}, {{"1_0", 0, 0}, {"1_1", 1, 1}, {"u", 0, 1}}, {0, 1},
                     [](int g, int f) { return g == 2 || f == 2 ? 2 : g; });
}

FinCategory poset_category(const std::vector<std::vector<bool>>& leq, const std::vector<std::string>& names) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::string> objs(n);
  for (int i = 0; i < n; ++i) objs[i] = names.empty() ? std::to_string(i) : names[i];
  std::vector<ArrowRec> arrs;
  std::vector<int> ids(n);
  std::vector<std::vector<int>> idx(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) {
        idx[i][j] = static_cast<int>(arrs.size());
        if (i == j) ids[i] = idx[i][j];
        arrs.push_back({i == j ? "1_" + objs[i] : objs[i] + "<" + objs[j], i, j});
      }
  return FinCategory(objs, arrs, ids, [&](int g, int f) { return idx[arrs[f].src][arrs[g].tgt]; });
}

FinCategory chain_category(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return poset_category(leq);
}

FinCategory monoid_category(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::vector<ArrowRec> arrs;
  for (int i = 0; i < n; ++i) arrs.push_back({i == 0 ? "e" : "m" + std::to_string(i), 0, 0});
  return FinCategory({"*"}, arrs, {0}, [&](int g, int f) { return table[g][f]; });
}

FinCategory cyclic_group_category(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return monoid_category(t);
}

FinCategory free_category(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::string> objs;
  for (int i = 0; i < n; ++i) objs.push_back(std::to_string(i));
  std::vector<std::vector<int>> paths;  // edge sequences in traversal order
  std::vector<ArrowRec> arrs;
  std::vector<int> ids(n);
  std::map<std::vector<int>, int> index;
  std::vector<int> start_of;  // for empty paths
  for (int i = 0; i < n; ++i) {
    ids[i] = static_cast<int>(arrs.size());
    arrs.push_back({"1_" + objs[i], i, i});
    paths.push_back({});
    start_of.push_back(i);
  }
  std::vector<std::vector<int>> out(n);
  for (std::size_t e = 0; e < edges.size(); ++e) out[edges[e].first].push_back(static_cast<int>(e));
  std::function<void(int, int, std::vector<int>&)> dfs = [&](int s, int v, std::vector<int>& p) {
    for (int e : out[v]) {
      p.push_back(e);
      if (arrs.size() > 4096) throw Error(ErrorKind::SizeLimitExceeded, "free category paths");
      std::string name;
      for (auto it = p.rbegin(); it != p.rend(); ++it) name += (name.empty() ? "e" : ".e") + std::to_string(*it);
      index[p] = static_cast<int>(arrs.size());
      arrs.push_back({name, s, edges[e].second});
      paths.push_back(p);
      start_of.push_back(s);
      dfs(s, edges[e].second, p);
      p.pop_back();
    }
  };
  for (int s = 0; s < n; ++s) {
    std::vector<int> p;
    dfs(s, s, p);
  }
  return FinCategory(objs, arrs, ids, [&](int g, int f) {
    if (paths[g].empty()) return f;
    if (paths[f].empty()) return g;
    std::vector<int> p = paths[f];
    p.insert(p.end(), paths[g].begin(), paths[g].end());
    return index.at(p);
  });
}

FinCategory opposite(const FinCategory& c) {
  std::vector<ArrowRec> arrs;
  for (int f = 0; f < c.num_arrows(); ++f) arrs.push_back({c.arrow_id(f), c.tgt(f), c.src(f)});
  std::vector<int> ids;
  for (int x = 0; x < c.num_objects(); ++x) ids.push_back(c.id(x));
  return FinCategory(c.objects(), arrs, ids, [&](int g, int f) { return c.compose(f, g); });
}

FinFunctor opposite(const FinFunctor& f, const Cat& src_op, const Cat& tgt_op) {
  return FinFunctor{src_op, tgt_op, f.obj, f.arr};
}

ProductResult product(const Cat& a, const Cat& b) {
  const int na = a->num_objects(), nb = b->num_objects(), mb = b->num_arrows();
  std::vector<std::string> objs;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) objs.push_back(tuple_id({a->object(x), b->object(y)}));
  std::vector<ArrowRec> arrs;
  for (int f = 0; f < a->num_arrows(); ++f)
    for (int g = 0; g < mb; ++g)
      arrs.push_back({tuple_id({a->arrow_id(f), b->arrow_id(g)}), a->src(f) * nb + b->src(g), a->tgt(f) * nb + b->tgt(g)});
  std::vector<int> ids;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) ids.push_back(a->id(x) * mb + b->id(y));
  auto c = make_cat(FinCategory(objs, arrs, ids, [&](int g, int f) {
    return a->compose(g / mb, f / mb) * mb + b->compose(g % mb, f % mb);
  }));
  ProductResult r{c, {c, a, {}, {}}, {c, b, {}, {}}};
  for (int x = 0; x < c->num_objects(); ++x) {
    r.pi1.obj.push_back(x / nb);
    r.pi2.obj.push_back(x % nb);
  }
  for (int f = 0; f < c->num_arrows(); ++f) {
    r.pi1.arr.push_back(f / mb);
    r.pi2.arr.push_back(f % mb);
  }
  return r;
}

CoproductResult coproduct(const Cat& a, const Cat& b) {
  const int na = a->num_objects(), ma = a->num_arrows();
  std::vector<std::string> objs;
  std::vector<ArrowRec> arrs;
  std::vector<int> ids;
  for (int x = 0; x < na; ++x) objs.push_back(tuple_id({"0", a->object(x)}));
  for (int x = 0; x < b->num_objects(); ++x) objs.push_back(tuple_id({"1", b->object(x)}));
  for (int f = 0; f < ma; ++f) arrs.push_back({tuple_id({"0", a->arrow_id(f)}), a->src(f), a->tgt(f)});
  for (int f = 0; f < b->num_arrows(); ++f) arrs.push_back({tuple_id({"1", b->arrow_id(f)}), na + b->src(f), na + b->tgt(f)});
  for (int x = 0; x < na; ++x) ids.push_back(a->id(x));
  for (int x = 0; x < b->num_objects(); ++x) ids.push_back(ma + b->id(x));
  auto c = make_cat(FinCategory(objs, arrs, ids, [&](int g, int f) {
    if (f < ma) return a->compose(g, f);
    return ma + b->compose(g - ma, f - ma);
  }));
  CoproductResult r{c, {a, c, {}, {}}, {b, c, {}, {}}};
  for (int x = 0; x < na; ++x) r.in1.obj.push_back(x);
  for (int f = 0; f < ma; ++f) r.in1.arr.push_back(f);
  for (int x = 0; x < b->num_objects(); ++x) r.in2.obj.push_back(na + x);
  for (int f = 0; f < b->num_arrows(); ++f) r.in2.arr.push_back(ma + f);
  return r;
}

FinFunctor product_functor(const FinFunctor& f, const FinFunctor& g, const Cat& src, const Cat& tgt) {
  const int nb = g.source->num_objects(), mb = g.source->num_arrows();
  const int nd = g.target->num_objects(), md = g.target->num_arrows();
  FinFunctor h{src, tgt, std::vector<int>(src->num_objects()), std::vector<int>(src->num_arrows())};
  for (int x = 0; x < src->num_objects(); ++x) h.obj[x] = f.obj[x / nb] * nd + g.obj[x % nb];
  for (int a = 0; a < src->num_arrows(); ++a) h.arr[a] = f.arr[a / mb] * md + g.arr[a % mb];
  return h;
}

FinFunctor pairing(const FinFunctor& f, const FinFunctor& g, const Cat& prod) {
  const int nb = g.target->num_objects(), mb = g.target->num_arrows();
  FinFunctor h{f.source, prod, std::vector<int>(f.obj.size()), std::vector<int>(f.arr.size())};
  for (std::size_t x = 0; x < f.obj.size(); ++x) h.obj[x] = f.obj[x] * nb + g.obj[x];
  for (std::size_t a = 0; a < f.arr.size(); ++a) h.arr[a] = f.arr[a] * mb + g.arr[a];
  return h;
}

std::vector<int> hom_positions(const FinCategory& c) {
  std::vector<int> pos(c.num_arrows());
  for (int x = 0; x < c.num_objects(); ++x) {
    const auto& o = c.out(x);
    int run = 0;
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (i > 0 && c.tgt(o[i]) != c.tgt(o[i - 1])) run = 0;
      pos[o[i]] = run++;
    }
  }
  return pos;
}

bool is_full_and_faithful(const FinFunctor& f) {
  const auto& A = *f.source;
  const auto& B = *f.target;
  for (int x = 0; x < A.num_objects(); ++x)
    for (int y = 0; y < A.num_objects(); ++y) {
      auto h = A.hom(x, y);
      if (h.size() != B.hom(f.obj[x], f.obj[y]).size()) return false;
      std::set<int> img;
      for (int a : h) img.insert(f.arr[a]);
      if (img.size() != h.size()) return false;
    }
  return true;
}

bool is_connected(const FinCategory& c) {
  if (c.num_objects() == 0) return false;
  UnionFind uf(c.num_objects());
  int comps = c.num_objects();
  for (int f = 0; f < c.num_arrows(); ++f)
    if (uf.unite(c.src(f), c.tgt(f))) --comps;
  return comps == 1;
}

}  // namespace exq
