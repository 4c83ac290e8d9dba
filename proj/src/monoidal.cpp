#include "exq/monoidal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

namespace exq {

int StrictMonCategory::tensor_objs(const std::vector<int>& xs) const {
  int r = unit;
  for (int x : xs) r = tensor_obj(r, x);
  return r;
}

int StrictMonCategory::tensor_arrs(const std::vector<int>& fs) const {
  int r = base->id(unit);
  for (int f : fs) r = tensor_arr(r, f);
  return r;
}

std::optional<Error> check_monoidal(const StrictMonCategory& v) {
  const auto& C = *v.base;
  auto bad = [](const std::string& w) { return Error(ErrorKind::MonoidalLawViolation, w); };
  if (auto e = check_functor(v.tensor)) return e;
  const int n = C.num_objects(), m = C.num_arrows();
  const int I = v.unit;
  for (int x = 0; x < n; ++x)
    if (v.tensor_obj(I, x) != x || v.tensor_obj(x, I) != x) return bad("unit law at " + C.object(x));
  for (int f = 0; f < m; ++f)
    if (v.tensor_arr(C.id(I), f) != f || v.tensor_arr(f, C.id(I)) != f) return bad("unit law at " + C.arrow_id(f));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (v.tensor_obj(v.tensor_obj(x, y), z) != v.tensor_obj(x, v.tensor_obj(y, z)))
          return bad("associativity at " + tuple_id({C.object(x), C.object(y), C.object(z)}));
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g)
      for (int h = 0; h < m; ++h)
        if (v.tensor_arr(v.tensor_arr(f, g), h) != v.tensor_arr(f, v.tensor_arr(g, h)))
          return bad("associativity at " + tuple_id({C.arrow_id(f), C.arrow_id(g), C.arrow_id(h)}));
  if (!v.symmetric()) return std::nullopt;
  if (static_cast<int>(v.symmetry.size()) != n * n) return bad("symmetry table size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int s = v.sigma(x, y);
      if (C.src(s) != v.tensor_obj(x, y) || C.tgt(s) != v.tensor_obj(y, x)) return bad("symmetry endpoints");
      if (C.compose(v.sigma(y, x), s) != C.id(v.tensor_obj(x, y))) return bad("symmetry is not involutive");
      for (int z = 0; z < n; ++z) {
        int lhs = v.sigma(x, v.tensor_obj(y, z));
        int rhs = C.compose(v.tensor_arr(C.id(y), v.sigma(x, z)), v.tensor_arr(v.sigma(x, y), C.id(z)));
        if (lhs != rhs) return bad("hexagon at " + tuple_id({C.object(x), C.object(y), C.object(z)}));
      }
    }
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      int lhs = C.compose(v.sigma(C.tgt(f), C.tgt(g)), v.tensor_arr(f, g));
      int rhs = C.compose(v.tensor_arr(g, f), v.sigma(C.src(f), C.src(g)));
      if (lhs != rhs) return bad("symmetry not natural at " + tuple_id({C.arrow_id(f), C.arrow_id(g)}));
    }
  return std::nullopt;
}

StrictMonCategory make_monoidal(const Cat& base, int unit, const std::function<int(int, int)>& obj,
                                const std::function<int(int, int)>& arr, std::vector<int> symmetry) {
  auto pr = product(base, base);
  const int n = base->num_objects(), m = base->num_arrows();
  StrictMonCategory v{base, unit, FinFunctor{pr.cat, base, std::vector<int>(n * n), std::vector<int>(m * m)},
                      std::move(symmetry)};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) v.tensor.obj[x * n + y] = obj(x, y);
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) v.tensor.arr[f * m + g] = arr(f, g);
  return v;
}

StrictMonCategory terminal_monoidal() {
  return make_monoidal(make_cat(terminal_category()), 0, [](int, int) { return 0; }, [](int, int) { return 0; },
                       {0});
}

namespace {

bool commutative(const std::vector<std::vector<int>>& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

std::vector<std::string> element_names(int n) {
  std::vector<std::string> r;
  for (int i = 0; i < n; ++i) r.push_back(i == 0 ? "e" : "m" + std::to_string(i));
  return r;
}

}  // namespace

StrictMonCategory discrete_monoidal(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  auto names = element_names(n);
  std::vector<ArrowRec> arrs;
  std::vector<int> ids;
  for (int i = 0; i < n; ++i) {
    arrs.push_back({"1_" + names[i], i, i});
    ids.push_back(i);
  }
  auto base = make_cat(FinCategory(names, arrs, ids, [](int g, int) { return g; }));
  std::vector<int> sym;
  if (commutative(table)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) sym.push_back(table[x][y]);
  }
  auto op = [&](int a, int b) { return table[a][b]; };
  return make_monoidal(base, 0, op, op, sym);
}

StrictMonCategory one_object_monoidal(const std::vector<std::vector<int>>& table) {
  if (!commutative(table)) throw Error(ErrorKind::MonoidalLawViolation, "one-object tensor needs a commutative monoid");
  auto base = make_cat(monoid_category(table));
  return make_monoidal(base, 0, [](int, int) { return 0; }, [&](int f, int g) { return table[f][g]; }, {0});
}

StrictMonCategory thin_monoidal(const std::vector<std::vector<bool>>& leq, int unit,
                                const std::function<int(int, int)>& op) {
  auto base = make_cat(poset_category(leq));
  const auto& C = *base;
  const int n = C.num_objects();
  auto arrow = [&](int x, int y) {
    auto h = C.hom(x, y);
    if (h.empty()) throw Error(ErrorKind::MonoidalLawViolation, "operation is not monotone");
    return h[0];
  };
  std::vector<int> sym;
  bool comm = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) comm = comm && op(x, y) == op(y, x);
  if (comm)
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) sym.push_back(C.id(op(x, y)));
  return make_monoidal(
      base, unit, op,
      [&](int f, int g) { return arrow(op(C.src(f), C.src(g)), op(C.tgt(f), C.tgt(g))); }, sym);
}

namespace {

// Greatest lower bound (dir = +1) or least upper bound (dir = -1) of x and y, or -1.
int bound(const std::vector<std::vector<bool>>& leq, int x, int y, bool meet) {
  const int n = static_cast<int>(leq.size());
  auto le = [&](int a, int b) { return meet ? leq[a][b] : leq[b][a]; };
  for (int m = 0; m < n; ++m) {
    if (!le(m, x) || !le(m, y)) continue;
    bool best = true;
    for (int z = 0; z < n && best; ++z)
      if (le(z, x) && le(z, y) && !le(z, m)) best = false;
    if (best) return m;
  }
  return -1;
}

StrictMonCategory lattice_monoidal(const std::vector<std::vector<bool>>& leq, bool meet) {
  const int n = static_cast<int>(leq.size());
  int unit = -1;
  for (int t = 0; t < n && unit < 0; ++t) {
    bool ok = true;
    for (int z = 0; z < n; ++z) ok = ok && (meet ? leq[z][t] : leq[t][z]);
    if (ok) unit = t;
  }
  if (unit < 0) throw Error(ErrorKind::NoProductStructure, meet ? "no top element" : "no bottom element");
  std::vector<int> table(n * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      table[x * n + y] = bound(leq, x, y, meet);
      if (table[x * n + y] < 0) throw Error(ErrorKind::NoProductStructure, meet ? "missing meet" : "missing join");
    }
  return thin_monoidal(leq, unit, [table, n](int x, int y) { return table[x * n + y]; });
}

}  // namespace

StrictMonCategory meet_monoidal(const std::vector<std::vector<bool>>& leq) { return lattice_monoidal(leq, true); }
StrictMonCategory join_monoidal(const std::vector<std::vector<bool>>& leq) { return lattice_monoidal(leq, false); }

StrictMonCategory sign_monoidal() {
  // arrow 2x+s: object x, sign s
  std::vector<ArrowRec> arrs{{"1_+", 0, 0}, {"n_+", 0, 0}, {"1_-", 1, 1}, {"n_-", 1, 1}};
  auto base = make_cat(FinCategory({"+", "-"}, arrs, {0, 2}, [](int g, int f) { return (g & ~1) | ((g ^ f) & 1); }));
  std::vector<int> sym;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) sym.push_back(2 * (x ^ y) + (x & y));
  return make_monoidal(base, 0, [](int x, int y) { return x ^ y; },
                       [](int f, int g) { return 2 * ((f >> 1) ^ (g >> 1)) + ((f ^ g) & 1); }, sym);
}

StrictMonCategory product_monoidal(const StrictMonCategory& v, const StrictMonCategory& w) {
  auto pr = product(v.base, w.base);
  const int nw = w.base->num_objects(), mw = w.base->num_arrows();
  std::vector<int> sym;
  if (v.symmetric() && w.symmetric()) {
    const int nv = v.base->num_objects();
    for (int x = 0; x < nv * nw; ++x)
      for (int y = 0; y < nv * nw; ++y) sym.push_back(v.sigma(x / nw, y / nw) * mw + w.sigma(x % nw, y % nw));
  }
  return make_monoidal(
      pr.cat, v.unit * nw + w.unit,
      [&](int x, int y) { return v.tensor_obj(x / nw, y / nw) * nw + w.tensor_obj(x % nw, y % nw); },
      [&](int f, int g) { return v.tensor_arr(f / mw, g / mw) * mw + w.tensor_arr(f % mw, g % mw); }, sym);
}

std::optional<Error> check_colax(const ColaxMonFunctor& F) {
  const auto& V = *F.V;
  const auto& W = *F.W;
  const auto& A = *V.base;
  const auto& B = *W.base;
  auto bad = [](const std::string& w) { return Error(ErrorKind::MonoidalLawViolation, w); };
  if (F.F.source.get() != V.base.get() || F.F.target.get() != W.base.get())
    return Error(ErrorKind::TargetMismatch, "colax functor boundary");
  if (auto e = check_functor(F.F)) return e;
  const int n = A.num_objects();
  if (F.nullary < 0 || F.nullary >= B.num_arrows() || B.src(F.nullary) != F.F.obj[V.unit] || B.tgt(F.nullary) != W.unit)
    return bad("nullary map endpoints");
  if (static_cast<int>(F.binary.size()) != n * n) return bad("binary table size");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c = F.bin(x, y);
      if (c < 0 || c >= B.num_arrows() || B.src(c) != F.F.obj[V.tensor_obj(x, y)] ||
          B.tgt(c) != W.tensor_obj(F.F.obj[x], F.F.obj[y]))
        return bad("binary map endpoints at " + tuple_id({A.object(x), A.object(y)}));
    }
  for (int f = 0; f < A.num_arrows(); ++f)
    for (int g = 0; g < A.num_arrows(); ++g) {
      int lhs = B.compose(W.tensor_arr(F.F.arr[f], F.F.arr[g]), F.bin(A.src(f), A.src(g)));
      int rhs = B.compose(F.bin(A.tgt(f), A.tgt(g)), F.F.arr[V.tensor_arr(f, g)]);
      if (lhs != rhs) return bad("binary map not natural at " + tuple_id({A.arrow_id(f), A.arrow_id(g)}));
    }
  for (int x = 0; x < n; ++x) {
    const int fx = F.F.obj[x];
    if (B.compose(W.tensor_arr(F.nullary, B.id(fx)), F.bin(V.unit, x)) != B.id(fx) ||
        B.compose(W.tensor_arr(B.id(fx), F.nullary), F.bin(x, V.unit)) != B.id(fx))
      return bad("counit law at " + A.object(x));
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int lhs = B.compose(W.tensor_arr(F.bin(x, y), B.id(F.F.obj[z])), F.bin(V.tensor_obj(x, y), z));
        int rhs = B.compose(W.tensor_arr(B.id(fx), F.bin(y, z)), F.bin(x, V.tensor_obj(y, z)));
        if (lhs != rhs) return bad("coassociativity at " + tuple_id({A.object(x), A.object(y), A.object(z)}));
      }
  }
  return std::nullopt;
}

std::optional<Error> check_symmetric_colax(const ColaxMonFunctor& F) {
  if (auto e = check_colax(F)) return e;
  const auto& V = *F.V;
  const auto& W = *F.W;
  if (!V.symmetric() || !W.symmetric()) return Error(ErrorKind::MonoidalLawViolation, "not symmetric");
  const auto& B = *W.base;
  const int n = V.base->num_objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int lhs = B.compose(F.bin(y, x), F.F.arr[V.sigma(x, y)]);
      int rhs = B.compose(W.sigma(F.F.obj[x], F.F.obj[y]), F.bin(x, y));
      if (lhs != rhs) return Error(ErrorKind::MonoidalLawViolation, "binary map does not respect symmetry");
    }
  return std::nullopt;
}

ColaxMonFunctor identity_colax(const MonCat& v) {
  ColaxMonFunctor F{v, v, identity_functor(v->base), v->base->id(v->unit), {}};
  const int n = v->base->num_objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) F.binary.push_back(v->base->id(v->tensor_obj(x, y)));
  return F;
}

ColaxMonFunctor terminal_colax(const MonCat& v) {
  auto one = std::make_shared<const StrictMonCategory>(terminal_monoidal());
  const int n = v->base->num_objects();
  return ColaxMonFunctor{v, one, constant_functor(v->base, one->base, 0), 0, std::vector<int>(n * n, 0)};
}

std::optional<ColaxMonFunctor> thin_colax(const MonCat& v, const MonCat& w, const std::vector<int>& obj) {
  const auto& A = *v->base;
  const auto& B = *w->base;
  auto arrow = [&](int x, int y) {
    auto h = B.hom(x, y);
    return h.empty() ? -1 : h[0];
  };
  FinFunctor F{v->base, w->base, obj, std::vector<int>(A.num_arrows())};
  for (int k = 0; k < A.num_arrows(); ++k) {
    F.arr[k] = arrow(obj[A.src(k)], obj[A.tgt(k)]);
    if (F.arr[k] < 0) return std::nullopt;
  }
  ColaxMonFunctor r{v, w, F, arrow(obj[v->unit], w->unit), {}};
  if (r.nullary < 0) return std::nullopt;
  const int n = A.num_objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int c = arrow(obj[v->tensor_obj(x, y)], w->tensor_obj(obj[x], obj[y]));
      if (c < 0) return std::nullopt;
      r.binary.push_back(c);
    }
  return r;
}

std::vector<ColaxMonFunctor> all_thin_colax(const MonCat& v, const MonCat& w) {
  const int n = v->base->num_objects(), m = w->base->num_objects();
  std::vector<ColaxMonFunctor> out;
  std::vector<int> obj(n, 0);
  for (;;) {
    if (auto F = thin_colax(v, w, obj)) out.push_back(*F);
    int i = 0;
    while (i < n && ++obj[i] == m) obj[i++] = 0;
    if (i == n) break;
  }
  return out;
}

ColaxMonFunctor product_colax(const ColaxMonFunctor& F, const ColaxMonFunctor& G) {
  auto V = std::make_shared<const StrictMonCategory>(product_monoidal(*F.V, *G.V));
  auto W = std::make_shared<const StrictMonCategory>(product_monoidal(*F.W, *G.W));
  const int n2 = G.V->base->num_objects(), mw2 = G.W->base->num_arrows();
  ColaxMonFunctor r{V, W, product_functor(F.F, G.F, V->base, W->base), F.nullary * mw2 + G.nullary, {}};
  const int n = V->base->num_objects();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) r.binary.push_back(F.bin(x / n2, y / n2) * mw2 + G.bin(x % n2, y % n2));
  return r;
}

int fbar(const ColaxMonFunctor& F, const std::vector<int>& zs) {
  const auto& W = *F.W;
  const auto& B = *W.base;
  if (zs.empty()) return F.nullary;
  if (zs.size() == 1) return B.id(F.F.obj[zs[0]]);
  std::vector<int> prefix(zs.begin(), zs.end() - 1);
  const int last = zs.back();
  return B.compose(W.tensor_arr(fbar(F, prefix), B.id(F.F.obj[last])), F.bin(F.V->tensor_objs(prefix), last));
}

NullaryResult condition_nullary(const ColaxMonFunctor& F) {
  const auto& V = *F.V;
  const auto& A = *V.base;
  const auto& B = *F.W->base;
  for (int x = 0; x < A.num_objects(); ++x)
    for (int f : B.hom(F.F.obj[x], F.W->unit)) {
      int count = 0;
      for (int g : A.hom(x, V.unit))
        if (B.compose(F.nullary, F.F.arr[g]) == f) ++count;
      if (count != 1) return {false, x, f, count};
    }
  return {};
}

MonFact fact_monoidal(const ColaxMonFunctor& F, int X, int f, int Y1, int Y2) {
  const auto& V = *F.V;
  const auto& W = *F.W;
  const auto& A = *V.base;
  const auto& B = *W.base;
  if (B.src(f) != F.F.obj[X] || B.tgt(f) != W.tensor_obj(Y1, Y2))
    throw Error(ErrorKind::EndpointMismatch, B.arrow_id(f) + " is not an arrow FX -> Y1⊗Y2");
  MonFact out;
  std::vector<std::string> names;
  std::map<std::array<int, 5>, int> index;
  for (int z1 = 0; z1 < A.num_objects(); ++z1)
    for (int z2 = 0; z2 < A.num_objects(); ++z2)
      for (int g : A.hom(X, V.tensor_obj(z1, z2))) {
        const int base = B.compose(F.bin(z1, z2), F.F.arr[g]);
        for (int h1 : B.hom(F.F.obj[z1], Y1))
          for (int h2 : B.hom(F.F.obj[z2], Y2)) {
            if (B.compose(W.tensor_arr(h1, h2), base) != f) continue;
            index[{g, z1, z2, h1, h2}] = static_cast<int>(out.objects.size());
            out.objects.push_back({g, z1, z2, h1, h2});
            names.push_back(tuple_id({A.arrow_id(g), A.object(z1), A.object(z2), B.arrow_id(h1), B.arrow_id(h2)}));
          }
      }
  std::vector<ArrowRec> arrows;
  std::vector<std::array<int, 2>> ks;
  std::vector<int> ids(out.objects.size(), -1);
  std::map<std::array<int, 4>, int> arrow_index;
  for (int o = 0; o < static_cast<int>(out.objects.size()); ++o) {
    const auto [g, z1, z2, h1, h2] = out.objects[o];
    for (int k1 : A.out(z1))
      for (int k2 : A.out(z2)) {
        const int w1 = A.tgt(k1), w2 = A.tgt(k2);
        const int g2 = A.compose(V.tensor_arr(k1, k2), g);
        for (int h1b : B.hom(F.F.obj[w1], Y1)) {
          if (B.compose(h1b, F.F.arr[k1]) != h1) continue;
          for (int h2b : B.hom(F.F.obj[w2], Y2)) {
            if (B.compose(h2b, F.F.arr[k2]) != h2) continue;
            const int o2 = index.at({g2, w1, w2, h1b, h2b});
            if (o2 == o && A.is_identity(k1) && A.is_identity(k2)) ids[o] = static_cast<int>(arrows.size());
            arrow_index[{o, o2, k1, k2}] = static_cast<int>(arrows.size());
            arrows.push_back({tuple_id({A.arrow_id(k1), A.arrow_id(k2)}) + ":" + names[o] + "->" + names[o2], o, o2});
            ks.push_back({k1, k2});
          }
        }
      }
  }
  out.cat = make_cat(FinCategory(names, arrows, ids, [&](int y, int x) {
    return arrow_index.at({arrows[x].src, arrows[y].tgt, A.compose(ks[y][0], ks[x][0]), A.compose(ks[y][1], ks[x][1])});
  }));
  return out;
}

MonExactResult is_exact_colax_monoidal(const ColaxMonFunctor& F) {
  MonExactResult r;
  r.nullary = condition_nullary(F);
  r.exact = r.nullary.holds;
  if (!r.exact) return r;
  const auto& W = *F.W;
  const auto& B = *W.base;
  const int nv = F.V->base->num_objects(), nw = B.num_objects();
  for (int x = 0; x < nv; ++x)
    for (int y1 = 0; y1 < nw; ++y1)
      for (int y2 = 0; y2 < nw; ++y2)
        for (int f : B.hom(F.F.obj[x], W.tensor_obj(y1, y2))) {
          auto fc = fact_monoidal(F, x, f, y1, y2);
          if (fc.cat->num_objects() == 0 || !is_connected(*fc.cat)) {
            r.exact = false;
            r.witness = std::array<int, 4>{x, f, y1, y2};
            return r;
          }
        }
  return r;
}

namespace {

std::string list_name(const FinCategory& c, const std::vector<int>& xs, bool arrows) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + (arrows ? c.arrow_id(xs[i]) : c.object(xs[i]));
  return s + "]";
}

Truncation truncate(const Cat& v, int L, bool symmetric, const Caps& caps) {
  const auto& C = *v;
  Truncation t;
  std::map<std::vector<int>, int> obj_index;
  t.by_length.assign(L + 1, {});
  std::vector<std::string> objs;
  for (int len = 0; len <= L; ++len) {
    std::vector<int> xs(len, 0);
    for (;;) {
      if (C.num_objects() == 0 && len > 0) break;
      obj_index[xs] = static_cast<int>(t.lists.size());
      t.by_length[len].push_back(static_cast<int>(t.lists.size()));
      t.lists.push_back(xs);
      objs.push_back(list_name(C, xs, false));
      if (static_cast<long>(t.lists.size()) > caps.max_cells) throw Error(ErrorKind::SizeLimitExceeded, "truncation");
      int i = len - 1;
      while (i >= 0 && ++xs[i] == C.num_objects()) xs[i--] = 0;
      if (i < 0) break;
    }
  }
  std::vector<ArrowRec> arrs;
  std::vector<int> ids(t.lists.size(), -1);
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> arr_index;  // (perm, comps)
  for (int o = 0; o < static_cast<int>(t.lists.size()); ++o) {
    const auto& zs = t.lists[o];
    const int n = static_cast<int>(zs.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      // components k_j: Z_j -> Z'_perm[j], all choices
      std::vector<int> pick(n, 0);
      for (;;) {
        bool valid = true;
        std::vector<int> comps(n), tgt(n);
        for (int j = 0; j < n && valid; ++j) {
          const auto& out = C.out(zs[j]);
          if (out.empty()) valid = false;
          else {
            comps[j] = out[pick[j]];
            tgt[perm[j]] = C.tgt(comps[j]);
          }
        }
        if (valid) {
          const int o2 = obj_index.at(tgt);
          const int k = static_cast<int>(arrs.size());
          bool is_id = o2 == o;
          for (int j = 0; j < n && is_id; ++j) is_id = perm[j] == j && C.is_identity(comps[j]);
          if (is_id) ids[o] = k;
          std::string pname;
          if (symmetric) {
            pname = "<";
            for (int j = 0; j < n; ++j) pname += (j ? " " : "") + std::to_string(perm[j]);
            pname += ">";
          }
          arrs.push_back({pname + list_name(C, comps, true) + ":" + objs[o], o, o2});
          arr_index[{perm, comps}] = k;
          t.perm.push_back(perm);
          t.comps.push_back(comps);
          if (static_cast<long>(arrs.size()) > caps.max_cells) throw Error(ErrorKind::SizeLimitExceeded, "truncation");
        }
        int i = n - 1;
        while (i >= 0 && ++pick[i] == static_cast<int>(C.out(zs[i]).size())) pick[i--] = 0;
        if (i < 0 || !valid) break;
      }
    } while (symmetric && std::next_permutation(perm.begin(), perm.end()));
  }
  {
    std::vector<long> in_count(t.lists.size(), 0), out_count(t.lists.size(), 0);
    for (const auto& a : arrs) {
      ++out_count[a.src];
      ++in_count[a.tgt];
    }
    long pairs = 0;
    for (std::size_t o = 0; o < t.lists.size(); ++o) pairs += in_count[o] * out_count[o];
    if (pairs > caps.max_cells) throw Error(ErrorKind::SizeLimitExceeded, "truncation composition table");
  }
  const auto& perms = t.perm;
  const auto& comps = t.comps;
  t.cat = make_cat(FinCategory(objs, arrs, ids, [&](int y, int x) {
    const int n = static_cast<int>(perms[x].size());
    std::vector<int> p(n), k(n);
    for (int j = 0; j < n; ++j) {
      p[j] = perms[y][perms[x][j]];
      k[j] = C.compose(comps[y][perms[x][j]], comps[x][j]);
    }
    return arr_index.at({p, k});
  }));
  const int no = static_cast<int>(t.lists.size());
  t.concat.assign(static_cast<std::size_t>(no) * no, -1);
  for (int a = 0; a < no; ++a)
    for (int b = 0; b < no; ++b) {
      if (static_cast<int>(t.lists[a].size() + t.lists[b].size()) > L) {
        ++t.excluded;
        continue;
      }
      auto xs = t.lists[a];
      xs.insert(xs.end(), t.lists[b].begin(), t.lists[b].end());
      t.concat[a * no + b] = obj_index.at(xs);
    }
  return t;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::uint32_t>(x)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

// Symmetry isomorphism ⊗_j A_j -> ⊗_i A_ρ(i) in a symmetric strict monoidal category.
int permutation_arrow(const StrictMonCategory& W, const std::vector<int>& objs, const std::vector<int>& rho) {
  const auto& B = *W.base;
  const int n = static_cast<int>(objs.size());
  std::vector<int> cur(n);
  std::iota(cur.begin(), cur.end(), 0);
  int arrow = B.id(W.tensor_objs(objs));
  for (int i = 0; i < n; ++i) {
    int p = static_cast<int>(std::find(cur.begin(), cur.end(), rho[i]) - cur.begin());
    for (; p > i; --p) {
      std::vector<int> parts;
      for (int m = 0; m < p - 1; ++m) parts.push_back(B.id(objs[cur[m]]));
      parts.push_back(W.sigma(objs[cur[p - 1]], objs[cur[p]]));
      for (int m = p + 1; m < n; ++m) parts.push_back(B.id(objs[cur[m]]));
      arrow = B.compose(W.tensor_arrs(parts), arrow);
      std::swap(cur[p - 1], cur[p]);
    }
  }
  return arrow;
}


struct SweepStats {
  long instances = 0;
  long connected_mon = 0;
  long connected_sym = 0;
  long not_ess_surj = 0;
  long pi0_mismatch = 0;
  long ill_defined = 0;
};

struct ListIndex {
  std::vector<std::vector<int>> lists;
  std::vector<std::vector<int>> by_length;
  std::map<std::vector<int>, int> index;
};

ListIndex list_index(int num_objects, int L) {
  ListIndex r;
  r.by_length.assign(L + 1, {});
  for (int len = 0; len <= L; ++len) {
    if (num_objects == 0 && len > 0) break;
    std::vector<int> xs(len, 0);
    for (;;) {
      r.index[xs] = static_cast<int>(r.lists.size());
      r.by_length[len].push_back(static_cast<int>(r.lists.size()));
      r.lists.push_back(xs);
      int i = len - 1;
      while (i >= 0 && ++xs[i] == num_objects) xs[i--] = 0;
      if (i < 0) break;
    }
  }
  return r;
}

// Enumerates, for fixed X and arity n, the objects of every Fact category of F̄_n at X at once,
// bucketed by (Y1..Yn, f). Connectivity uses single-coordinate moves; the symmetric version
// adds adjacent transpositions.
SweepStats sweep(const ColaxMonFunctor& F, const ListIndex& li, int X, int n, bool symmetric, const Caps& caps) {
  const auto& V = *F.V;
  const auto& W = *F.W;
  const auto& A = *V.base;
  const auto& B = *W.base;
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (symmetric && std::next_permutation(p.begin(), p.end()));
  }
  std::map<std::vector<int>, int> perm_index;
  for (std::size_t i = 0; i < perms.size(); ++i) perm_index[perms[i]] = static_cast<int>(i);
  std::vector<int> out_pos(B.num_arrows());
  for (int y = 0; y < B.num_objects(); ++y)
    for (std::size_t i = 0; i < B.out(y).size(); ++i) out_pos[B.out(y)[i]] = static_cast<int>(i);
  const auto homA = hom_positions(A);

  const auto& zlists = li.by_length[n];
  const int nz = static_cast<int>(zlists.size()), np = static_cast<int>(perms.size());
  std::vector<int> zpos(li.lists.size(), -1);
  for (int i = 0; i < nz; ++i) zpos[zlists[i]] = i;
  std::vector<long> start(static_cast<std::size_t>(nz) * np + 1, 0);
  std::vector<std::vector<int>> radix(static_cast<std::size_t>(nz) * np);
  std::vector<int> tensorZ(nz), lead(static_cast<std::size_t>(nz) * np);  // lead = σ_ρ∘F̄_n(Z)
  for (int zi = 0; zi < nz; ++zi) {
    const auto& zs = li.lists[zlists[zi]];
    tensorZ[zi] = V.tensor_objs(zs);
    const int fb = fbar(F, zs);
    std::vector<int> fz;
    for (int z : zs) fz.push_back(F.F.obj[z]);
    for (int pi = 0; pi < np; ++pi) {
      lead[zi * np + pi] = symmetric ? B.compose(permutation_arrow(W, fz, perms[pi]), fb) : fb;
      long size = static_cast<long>(A.hom(X, tensorZ[zi]).size());
      auto& r = radix[zi * np + pi];
      for (int i = 0; i < n; ++i) {
        r.push_back(static_cast<int>(B.out(fz[perms[pi][i]]).size()));
        size *= r.back();
      }
      start[zi * np + pi + 1] = start[zi * np + pi] + size;
      if (start[zi * np + pi + 1] > caps.max_cells)
        throw Error(ErrorKind::SizeLimitExceeded, "monoidal Fact enumeration");
    }
  }
  const int N = static_cast<int>(start.back());
  auto encode = [&](int zi, int pi, int gpos, const std::vector<int>& hpos) {
    long idx = gpos;
    const auto& r = radix[zi * np + pi];
    for (int i = 0; i < n; ++i) idx = idx * r[i] + hpos[i];
    return static_cast<int>(start[zi * np + pi] + idx);
  };

  // value of an object: (Y1..Yn, f)
  std::unordered_map<std::vector<int>, int, VecHash> bucket_of;
  std::vector<int> bucket(N);
  auto value = [&](int zi, int pi, int g, const std::vector<int>& h) {
    std::vector<int> key;
    for (int x : h) key.push_back(B.tgt(x));
    key.push_back(B.compose(W.tensor_arrs(h), B.compose(lead[zi * np + pi], F.F.arr[g])));
    return key;
  };
  UnionFind uf_sym(N), uf_mon(N), uf_iso(N);
  SweepStats st;
  std::vector<int> hpos(n), h(n), h2(n), ids(n);
  for (int pass = 0; pass < 2; ++pass) {
    for (int zi = 0; zi < nz; ++zi) {
      const auto& zs = li.lists[zlists[zi]];
      const auto gs = A.hom(X, tensorZ[zi]);
      for (int j = 0; j < n; ++j) ids[j] = A.id(zs[j]);
      for (int pi = 0; pi < np; ++pi) {
        const auto& rho = perms[pi];
        const auto& r = radix[zi * np + pi];
        for (int gp = 0; gp < static_cast<int>(gs.size()); ++gp) {
          std::fill(hpos.begin(), hpos.end(), 0);
          for (;;) {
            for (int i = 0; i < n; ++i) h[i] = B.out(F.F.obj[zs[rho[i]]])[hpos[i]];
            const int o = encode(zi, pi, gp, hpos);
            if (pass == 0) {
              auto key = value(zi, pi, gs[gp], h);
              auto [it, fresh] = bucket_of.try_emplace(std::move(key), static_cast<int>(bucket_of.size()));
              bucket[o] = it->second;
            } else {
              auto link = [&](int o2, UnionFind* extra) {
                if (bucket[o2] != bucket[o]) ++st.ill_defined;
                uf_sym.unite(o, o2);
                if (extra) extra->unite(o, o2);
              };
              // coordinate moves
              for (int j = 0; j < n; ++j) {
                const int i = static_cast<int>(std::find(rho.begin(), rho.end(), j) - rho.begin());
                for (int k : A.out(zs[j])) {
                  if (A.is_identity(k)) continue;
                  auto zs2 = zs;
                  zs2[j] = A.tgt(k);
                  const int zi2 = zpos[li.index.at(zs2)];
                  auto parts = ids;
                  parts[j] = k;
                  const int g2 = A.compose(V.tensor_arrs(parts), gs[gp]);
                  for (int hb : B.hom(F.F.obj[zs2[j]], B.tgt(h[i]))) {
                    if (B.compose(hb, F.F.arr[k]) != h[i]) continue;
                    auto hp2 = hpos;
                    hp2[i] = out_pos[hb];
                    link(encode(zi2, pi, homA[g2], hp2), pi == 0 ? &uf_mon : nullptr);
                  }
                }
              }
              // adjacent transpositions
              if (symmetric)
                for (int j = 0; j + 1 < n; ++j) {
                  auto zs2 = zs;
                  std::swap(zs2[j], zs2[j + 1]);
                  const int zi2 = zpos[li.index.at(zs2)];
                  auto parts = ids;
                  parts.erase(parts.begin() + j + 1);
                  parts[j] = V.sigma(zs[j], zs[j + 1]);
                  const int g2 = A.compose(V.tensor_arrs(parts), gs[gp]);
                  auto rho2 = rho;
                  for (int& x : rho2) x = x == j ? j + 1 : x == j + 1 ? j : x;
                  link(encode(zi2, perm_index.at(rho2), homA[g2], hpos), &uf_iso);
                }
            }
            int i = n - 1;
            while (i >= 0 && ++hpos[i] == r[i]) hpos[i--] = 0;
            if (i < 0) break;
          }
        }
      }
    }
  }

  // per bucket
  const int nb = static_cast<int>(bucket_of.size());
  std::vector<std::vector<int>> members(nb);
  for (int o = 0; o < N; ++o) members[bucket[o]].push_back(o);
  // an object has the identity permutation iff it lies in a (zi, 0) block
  std::vector<char> is_id(N, 0);
  for (int zi = 0; zi < nz; ++zi)
    for (long o = start[zi * np]; o < start[zi * np + 1]; ++o) is_id[o] = 1;
  for (int b = 0; b < nb; ++b) {
    std::map<int, int> mon_to_sym;
    std::map<int, char> iso_has_id;
    std::map<int, char> sym_roots;
    bool injective = true;
    for (int o : members[b]) {
      sym_roots[uf_sym.find(o)] = 1;
      auto& flag = iso_has_id[uf_iso.find(o)];
      if (is_id[o]) {
        flag = 1;
        auto [it, fresh] = mon_to_sym.try_emplace(uf_mon.find(o), uf_sym.find(o));
        if (!fresh && it->second != uf_sym.find(o)) ++st.ill_defined;
      }
    }
    std::map<int, int> hit;
    for (auto [m, s] : mon_to_sym)
      if (hit[s]++) injective = false;
    bool ess = true;
    for (auto [root, flag] : iso_has_id) ess = ess && flag;
    if (!ess) ++st.not_ess_surj;
    if (!injective || hit.size() != sym_roots.size()) ++st.pi0_mismatch;
    if (sym_roots.size() == 1) ++st.connected_sym;
    if (mon_to_sym.size() == 1) ++st.connected_mon;
  }
  // instances: every Y tuple and every f: FX -> ⊗Y, including those with empty Fact
  std::vector<int> ys(n, 0);
  const int nw = B.num_objects();
  for (;;) {
    st.instances += static_cast<long>(B.hom(F.F.obj[X], W.tensor_objs(ys)).size());
    int i = n - 1;
    while (i >= 0 && ++ys[i] == nw) ys[i--] = 0;
    if (i < 0) break;
  }
  return st;
}

}  // namespace

Truncation truncated_free_monoidal(const Cat& v, int L, const Caps& caps) { return truncate(v, L, false, caps); }
Truncation truncated_free_symmetric(const Cat& v, int L, const Caps& caps) { return truncate(v, L, true, caps); }

NaryReport nary_connectedness_oracle(const ColaxMonFunctor& F, int n_max, int L, const Caps& caps) {
  NaryReport rep;
  const auto li = list_index(F.V->base->num_objects(), std::min(n_max, L));
  for (int n = 0; n <= n_max; ++n) {
    AritySummary s{n, 0, 0, 0};
    for (int x = 0; x < F.V->base->num_objects(); ++x) {
      if (n > L) {
        std::vector<int> ys(n, 0);
        const int nw = F.W->base->num_objects();
        for (;;) {
          s.skipped += static_cast<long>(F.W->base->hom(F.F.obj[x], F.W->tensor_objs(ys)).size());
          int i = n - 1;
          while (i >= 0 && ++ys[i] == nw) ys[i--] = 0;
          if (i < 0) break;
        }
        continue;
      }
      auto st = sweep(F, li, x, n, false, caps);
      s.instances += st.instances;
      s.connected += st.connected_mon;
    }
    rep.per_arity.push_back(s);
  }
  auto holds = [&](int n) {
    const auto& s = rep.per_arity[n];
    return s.skipped == 0 && s.connected == s.instances;
  };
  for (int n = 0; n <= n_max; ++n) rep.all_connected = rep.all_connected && holds(n);
  if (n_max >= 2 && holds(0) && holds(2))
    for (int n = 0; n <= n_max; ++n) rep.implication_holds = rep.implication_holds && (holds(n) || rep.per_arity[n].skipped > 0);
  return rep;
}

SymmetricReport check_symmetric_reduction(const ColaxMonFunctor& F, int n_max, int L, const Caps& caps) {
  if (!F.V->symmetric() || !F.W->symmetric())
    throw Error(ErrorKind::MonoidalLawViolation, "symmetric reduction needs symmetric categories");
  SymmetricReport rep;
  const int top = std::min(n_max, L);
  const auto li = list_index(F.V->base->num_objects(), top);
  for (int n = 0; n <= top; ++n)
    for (int x = 0; x < F.V->base->num_objects(); ++x) {
      auto st = sweep(F, li, x, n, true, caps);
      rep.instances += st.instances;
      rep.not_essentially_surjective += st.not_ess_surj;
      rep.pi0_mismatches += st.pi0_mismatch;
      rep.ill_defined += st.ill_defined;
    }
  return rep;
}

namespace {

MonCat share(StrictMonCategory v) { return std::make_shared<const StrictMonCategory>(std::move(v)); }

std::vector<std::vector<bool>> chain_order(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i][j] = true;
  return leq;
}

MonCat random_thin(Rng& rng, int max_arrows) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const int n = rng.uniform(1, 4);
    auto leq = rng.coin(0.3) ? chain_order(n) : random_order(rng, n);
    int arrows = 0;
    for (auto& row : leq)
      for (bool b : row) arrows += b;
    if (arrows > max_arrows) continue;
    try {
      return share(rng.coin() ? meet_monoidal(leq) : join_monoidal(leq));
    } catch (const Error&) {
    }
  }
  return share(meet_monoidal(chain_order(1)));
}

std::vector<std::vector<std::vector<int>>> monoids(bool commutative_only) {
  std::vector<std::vector<std::vector<int>>> r;
  for (auto& t : small_monoids())
    if (!commutative_only || commutative(t)) r.push_back(t);
  return r;
}

MonCat random_monoidal(Rng& rng, int max_arrows, bool symmetric) {
  for (;;) {
    MonCat v;
    switch (rng.uniform(0, 5)) {
      case 0: v = share(terminal_monoidal()); break;
      case 1: v = random_thin(rng, max_arrows); break;
      case 2: v = share(discrete_monoidal(rng.pick(monoids(symmetric)))); break;
      case 3: v = share(one_object_monoidal(rng.pick(monoids(true)))); break;
      case 4: v = share(sign_monoidal()); break;
      default: {
        auto a = random_monoidal(rng, max_arrows, symmetric);
        auto b = random_monoidal(rng, max_arrows, symmetric);
        if (a->base->num_arrows() * b->base->num_arrows() <= max_arrows) v = share(product_monoidal(*a, *b));
      }
    }
    if (v && v->base->num_arrows() <= max_arrows) return v;
  }
}

// Monoid homomorphisms M -> N.
std::vector<std::vector<int>> monoid_maps(const std::vector<std::vector<int>>& m, const std::vector<std::vector<int>>& n) {
  std::vector<std::vector<int>> out;
  const int a = static_cast<int>(m.size()), b = static_cast<int>(n.size());
  std::vector<int> phi(a, 0);
  for (;;) {
    bool ok = phi[0] == 0;
    for (int x = 0; x < a && ok; ++x)
      for (int y = 0; y < a && ok; ++y) ok = phi[m[x][y]] == n[phi[x]][phi[y]];
    if (ok) out.push_back(phi);
    int i = 0;
    while (i < a && ++phi[i] == b) phi[i++] = 0;
    if (i == a) break;
  }
  return out;
}

ColaxMonFunctor monoid_map_colax(Rng& rng, bool symmetric) {
  const auto& ms = monoids(symmetric);
  const auto& m = rng.pick(ms);
  const auto& n = rng.pick(ms);
  auto V = share(discrete_monoidal(m));
  auto W = share(discrete_monoidal(n));
  auto phi = rng.pick(monoid_maps(m, n));
  ColaxMonFunctor F{V, W, FinFunctor{V->base, W->base, phi, phi}, W->base->id(W->unit), {}};
  for (std::size_t x = 0; x < m.size(); ++x)
    for (std::size_t y = 0; y < m.size(); ++y) F.binary.push_back(W->base->id(n[phi[x]][phi[y]]));
  return F;
}

// Monoid map between one-object categories with binary map an invertible t and nullary map t^-1.
ColaxMonFunctor twisted_colax(Rng& rng) {
  const auto ms = monoids(true);
  const auto& m = rng.pick(ms);
  const auto& n = rng.pick(ms);
  auto V = share(one_object_monoidal(m));
  auto W = share(one_object_monoidal(n));
  auto phi = rng.pick(monoid_maps(m, n));
  std::vector<std::array<int, 2>> units;
  for (std::size_t t = 0; t < n.size(); ++t)
    for (std::size_t u = 0; u < n.size(); ++u)
      if (n[t][u] == 0) units.push_back({static_cast<int>(t), static_cast<int>(u)});
  std::vector<std::array<int, 2>> unit_list(units.begin(), units.end());
  auto tu = rng.pick(unit_list);
  return ColaxMonFunctor{V, W, FinFunctor{V->base, W->base, {0}, phi}, tu[1], {tu[0]}};
}

ColaxMonFunctor draw_colax(Rng& rng, int max_arrows, bool symmetric, int depth) {
  for (;;) {
    std::optional<ColaxMonFunctor> F;
    switch (rng.uniform(0, depth > 0 ? 4 : 5)) {
      case 0: F = identity_colax(random_monoidal(rng, max_arrows, symmetric)); break;
      case 1: F = terminal_colax(random_monoidal(rng, max_arrows, symmetric)); break;
      case 2: {
        auto all = all_thin_colax(random_thin(rng, max_arrows), random_thin(rng, max_arrows));
        F = rng.pick(all);
        break;
      }
      case 3: F = monoid_map_colax(rng, symmetric); break;
      case 4: F = twisted_colax(rng); break;
      default: {
        auto a = draw_colax(rng, max_arrows, symmetric, depth + 1);
        auto b = draw_colax(rng, max_arrows, symmetric, depth + 1);
        if (a.V->base->num_arrows() * b.V->base->num_arrows() <= max_arrows &&
            a.W->base->num_arrows() * b.W->base->num_arrows() <= max_arrows)
          F = product_colax(a, b);
      }
    }
    if (!F || F->V->base->num_arrows() > max_arrows || F->W->base->num_arrows() > max_arrows) continue;
    auto err = symmetric ? check_symmetric_colax(*F) : check_colax(*F);
    if (err) throw *err;
    return *F;
  }
}

}  // namespace

ColaxMonFunctor random_colax(Rng& rng, int max_arrows) { return draw_colax(rng, max_arrows, false, 0); }
ColaxMonFunctor random_symmetric_colax(Rng& rng, int max_arrows) { return draw_colax(rng, max_arrows, true, 0); }

}  // namespace exq
