#include "exq/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace exq {

namespace {

Error parse_error(const std::string& m) { return Error(ErrorKind::Parse, m); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw parse_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string str(const json& j, const char* what) {
  if (!j.is_string()) throw parse_error(std::string(what) + " must be a string");
  return j.get<std::string>();
}

int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

int object_of(const FinCategory& c, const json& j) {
  const int x = c.find_object(str(j, "object name"));
  if (x < 0) throw Error(ErrorKind::UnknownId, "object " + j.get<std::string>());
  return x;
}

int arrow_of(const FinCategory& c, const json& j) {
  const int f = c.find_arrow(str(j, "arrow id"));
  if (f < 0) throw Error(ErrorKind::UnknownId, "arrow " + j.get<std::string>());
  return f;
}

// {name: value} for every object / arrow, no more and no less.
template <class Fn>
void each_named(const json& j, const char* what, int n, const std::function<int(const std::string&)>& find, Fn fn) {
  if (!j.is_object()) throw parse_error(std::string(what) + " must be an object");
  if (static_cast<int>(j.size()) != n) throw parse_error(std::string(what) + " is not total");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int k = find(it.key());
    if (k < 0) throw Error(ErrorKind::UnknownId, std::string(what) + " key " + it.key());
    fn(k, it.value());
  }
}

void by_object(const FinCategory& c, const json& j, const char* what, const std::function<void(int, const json&)>& fn) {
  each_named(j, what, c.num_objects(), [&](const std::string& s) { return c.find_object(s); }, fn);
}

void by_arrow(const FinCategory& c, const json& j, const char* what, const std::function<void(int, const json&)>& fn) {
  each_named(j, what, c.num_arrows(), [&](const std::string& s) { return c.find_arrow(s); }, fn);
}

json name_table(const std::vector<std::string>& names) { return json(names); }

}  // namespace

json to_json(const FinCategory& c) {
  const CategoryData d = c.data();
  json arrows = json::array(), identity = json::array(), comp = json::array();
  for (const auto& a : d.arrows) arrows.push_back({{"id", a.id}, {"src", d.objects[a.src]}, {"tgt", d.objects[a.tgt]}});
  for (int i : d.identity) identity.push_back(d.arrows[i].id);
  for (const auto& [g, f, gf] : d.compose) comp.push_back({d.arrows[g].id, d.arrows[f].id, d.arrows[gf].id});
  return {{"objects", name_table(d.objects)}, {"arrows", arrows}, {"identity", identity}, {"compose", comp}};
}

Cat category_from_json(const json& j, const Caps& caps, long max_arrows) {
  CategoryData d;
  std::map<std::string, int> obj, arr;
  for (const auto& o : field(j, "objects")) {
    d.objects.push_back(str(o, "object name"));
    obj.emplace(d.objects.back(), static_cast<int>(d.objects.size()) - 1);
  }
  auto obj_index = [&](const json& o) {
    auto it = obj.find(str(o, "endpoint"));
    if (it == obj.end()) throw Error(ErrorKind::UnknownId, "object " + o.get<std::string>());
    return it->second;
  };
  for (const auto& a : field(j, "arrows")) {
    d.arrows.push_back({str(field(a, "id"), "arrow id"), obj_index(field(a, "src")), obj_index(field(a, "tgt"))});
    arr.emplace(d.arrows.back().id, static_cast<int>(d.arrows.size()) - 1);
  }
  auto arr_index = [&](const json& a) {
    auto it = arr.find(str(a, "arrow id"));
    if (it == arr.end()) throw Error(ErrorKind::UnknownId, "arrow " + a.get<std::string>());
    return it->second;
  };
  const json& ids = field(j, "identity");
  if (!ids.is_array()) throw parse_error("\"identity\" must list one arrow per object");
  for (const auto& i : ids) d.identity.push_back(arr_index(i));
  d.identity.resize(d.objects.size(), -1);
  for (const auto& t : field(j, "compose")) {
    if (!t.is_array() || t.size() != 3) throw parse_error("compose entries are [g, f, gf]");
    d.compose.push_back({arr_index(t[0]), arr_index(t[1]), arr_index(t[2])});
  }
  Caps c = caps;
  if (max_arrows >= 0) c.max_arrows = static_cast<int>(max_arrows);
  return make_cat(validate_category(d, c));
}

bool same_category(const FinCategory& a, const FinCategory& b) {
  if (a.objects() != b.objects() || a.num_arrows() != b.num_arrows()) return false;
  for (int f = 0; f < a.num_arrows(); ++f)
    if (a.arrow_id(f) != b.arrow_id(f) || a.src(f) != b.src(f) || a.tgt(f) != b.tgt(f)) return false;
  for (int x = 0; x < a.num_objects(); ++x)
    if (a.id(x) != b.id(x)) return false;
  for (int f = 0; f < a.num_arrows(); ++f)
    for (int g : a.out(a.tgt(f)))
      if (a.compose(g, f) != b.compose(g, f)) return false;
  return true;
}

json functor_maps(const FinFunctor& f) {
  json om = json::object(), am = json::object();
  for (int x = 0; x < f.source->num_objects(); ++x) om[f.source->object(x)] = f.target->object(f.obj[x]);
  for (int a = 0; a < f.source->num_arrows(); ++a) am[f.source->arrow_id(a)] = f.target->arrow_id(f.arr[a]);
  return {{"obj_map", om}, {"arr_map", am}};
}

FinFunctor functor_from_maps(const json& j, const Cat& source, const Cat& target) {
  FinFunctor f{source, target, std::vector<int>(source->num_objects()), std::vector<int>(source->num_arrows())};
  by_object(*source, field(j, "obj_map"), "obj_map", [&](int x, const json& v) { f.obj[x] = object_of(*target, v); });
  by_arrow(*source, field(j, "arr_map"), "arr_map", [&](int a, const json& v) { f.arr[a] = arrow_of(*target, v); });
  if (auto e = check_functor(f)) throw *e;
  return f;
}

json to_json(const FinFunctor& f) {
  json j = functor_maps(f);
  j["source"] = to_json(*f.source);
  j["target"] = to_json(*f.target);
  return j;
}

FinFunctor functor_from_json(const json& j, const Caps& caps) {
  return functor_from_maps(j, category_from_json(field(j, "source"), caps), category_from_json(field(j, "target"), caps));
}

json to_json(const NatTransform& t) {
  json c = json::object();
  for (int x = 0; x < t.from.source->num_objects(); ++x) c[t.from.source->object(x)] = t.from.target->arrow_id(t.comp[x]);
  return {{"components", c}};
}

NatTransform nat_from_json(const json& j, const FinFunctor& from, const FinFunctor& to) {
  NatTransform t{from, to, std::vector<int>(from.source->num_objects())};
  by_object(*from.source, field(j, "components"), "components",
            [&](int x, const json& v) { t.comp[x] = arrow_of(*from.target, v); });
  if (auto e = check_nat(t)) throw *e;
  return t;
}

json to_json(const LaxSquare& sq) {
  return {{"P", to_json(*sq.P)},      {"A", to_json(*sq.A)},      {"B", to_json(*sq.B)},      {"C", to_json(*sq.C)},
          {"p", functor_maps(sq.p)},  {"q", functor_maps(sq.q)},  {"f", functor_maps(sq.f)},  {"g", functor_maps(sq.g)},
          {"phi", to_json(sq.phi)}};
}

LaxSquare square_from_json(const json& j, const Caps& caps) {
  LaxSquare sq;
  sq.P = category_from_json(field(j, "P"), caps);
  sq.A = category_from_json(field(j, "A"), caps);
  sq.B = category_from_json(field(j, "B"), caps);
  sq.C = category_from_json(field(j, "C"), caps);
  sq.p = functor_from_maps(field(j, "p"), sq.P, sq.A);
  sq.q = functor_from_maps(field(j, "q"), sq.P, sq.B);
  sq.f = functor_from_maps(field(j, "f"), sq.A, sq.C);
  sq.g = functor_from_maps(field(j, "g"), sq.B, sq.C);
  sq.phi = nat_from_json(field(j, "phi"), compose(sq.f, sq.p), compose(sq.g, sq.q));
  if (auto e = check_square(sq)) throw *e;
  return sq;
}

json to_json(const SetFunctor& h) {
  json om = json::object(), am = json::object();
  for (int x = 0; x < h.source->num_objects(); ++x) {
    json elems = json::array();
    for (int i = 0; i < h.size[x]; ++i) elems.push_back(h.label(x, i));
    om[h.source->object(x)] = elems;
  }
  for (int a = 0; a < h.source->num_arrows(); ++a) am[h.source->arrow_id(a)] = h.map[a];
  return {{"source", to_json(*h.source)}, {"obj_map", om}, {"arr_map", am}};
}

SetFunctor setfunctor_from_json(const json& j, const Caps& caps, const Cat& source) {
  Cat c = category_from_json(field(j, "source"), caps);
  if (source) {
    if (!same_category(*c, *source)) throw Error(ErrorKind::TargetMismatch, "set functor lives on a different category");
    c = source;
  }
  SetFunctor h{c, std::vector<int>(c->num_objects()), std::vector<std::vector<int>>(c->num_arrows()),
               std::vector<std::vector<std::string>>(c->num_objects())};
  by_object(*c, field(j, "obj_map"), "obj_map", [&](int x, const json& v) {
    if (!v.is_array()) throw parse_error("obj_map values are lists of element names");
    for (const auto& e : v) h.labels[x].push_back(e.is_string() ? e.get<std::string>() : e.dump());
    h.size[x] = static_cast<int>(v.size());
  });
  by_arrow(*c, field(j, "arr_map"), "arr_map", [&](int a, const json& v) {
    if (!v.is_array()) throw parse_error("arr_map values are lists of element indices");
    for (const auto& e : v) h.map[a].push_back(integer(e, "element index"));
  });
  if (auto e = check_set_functor(h, caps)) throw *e;
  return h;
}

json to_json(const StrictMonCategory& v) {
  const auto& B = *v.base;
  json j = to_json(B);
  json to = json::array(), ta = json::array();
  for (int x = 0; x < B.num_objects(); ++x) {
    json row = json::array();
    for (int y = 0; y < B.num_objects(); ++y) row.push_back(B.object(v.tensor_obj(x, y)));
    to.push_back(row);
  }
  for (int f = 0; f < B.num_arrows(); ++f) {
    json row = json::array();
    for (int g = 0; g < B.num_arrows(); ++g) row.push_back(B.arrow_id(v.tensor_arr(f, g)));
    ta.push_back(row);
  }
  j["unit"] = B.object(v.unit);
  j["tensor"] = {{"obj", to}, {"arr", ta}};
  if (v.symmetric()) {
    json s = json::array();
    for (int x = 0; x < B.num_objects(); ++x) {
      json row = json::array();
      for (int y = 0; y < B.num_objects(); ++y) row.push_back(B.arrow_id(v.sigma(x, y)));
      s.push_back(row);
    }
    j["symmetry"] = s;
  }
  return j;
}

namespace {

template <class Fn>
std::vector<int> square_table(const json& j, int n, const char* what, Fn cell) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) throw parse_error(std::string(what) + " must be square");
  std::vector<int> out;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw parse_error(std::string(what) + " must be square");
    for (const auto& e : row) out.push_back(cell(e));
  }
  return out;
}

}  // namespace

MonCat monoidal_from_json(const json& j, const Caps& caps) {
  Cat base = category_from_json(j, caps);
  const auto& B = *base;
  const int unit = object_of(B, field(j, "unit"));
  const json& t = field(j, "tensor");
  const auto to = square_table(field(t, "obj"), B.num_objects(), "tensor.obj", [&](const json& e) { return object_of(B, e); });
  const auto ta = square_table(field(t, "arr"), B.num_arrows(), "tensor.arr", [&](const json& e) { return arrow_of(B, e); });
  std::vector<int> sym;
  if (j.contains("symmetry"))
    sym = square_table(j.at("symmetry"), B.num_objects(), "symmetry", [&](const json& e) { return arrow_of(B, e); });
  const int n = B.num_objects(), m = B.num_arrows();
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const int a = ta[f * m + g];
      if (B.src(a) != to[B.src(f) * n + B.src(g)] || B.tgt(a) != to[B.tgt(f) * n + B.tgt(g)])
        throw Error(ErrorKind::MonoidalLawViolation, "tensor of " + B.arrow_id(f) + " and " + B.arrow_id(g) + " has wrong ends");
    }
  auto v = std::make_shared<const StrictMonCategory>(make_monoidal(
      base, unit, [&](int x, int y) { return to[x * n + y]; }, [&](int f, int g) { return ta[f * m + g]; }, sym));
  if (auto e = check_monoidal(*v)) throw *e;
  return v;
}

json to_json(const ColaxMonFunctor& F) {
  json j = functor_maps(F.F);
  j["V"] = to_json(*F.V);
  j["W"] = to_json(*F.W);
  j["nullary"] = F.W->base->arrow_id(F.nullary);
  json b = json::array();
  const int n = F.V->base->num_objects();
  for (int x = 0; x < n; ++x) {
    json row = json::array();
    for (int y = 0; y < n; ++y) row.push_back(F.W->base->arrow_id(F.bin(x, y)));
    b.push_back(row);
  }
  j["binary"] = b;
  return j;
}

ColaxMonFunctor colax_from_json(const json& j, const Caps& caps) {
  ColaxMonFunctor F;
  F.V = monoidal_from_json(field(j, "V"), caps);
  F.W = monoidal_from_json(field(j, "W"), caps);
  F.F = functor_from_maps(j, F.V->base, F.W->base);
  const auto& W = *F.W->base;
  F.nullary = arrow_of(W, field(j, "nullary"));
  F.binary = square_table(field(j, "binary"), F.V->base->num_objects(), "binary", [&](const json& e) { return arrow_of(W, e); });
  if (j.value("symmetric", false)) {
    if (auto e = check_symmetric_colax(F)) throw *e;
  } else if (auto e = check_colax(F)) {
    throw *e;
  }
  return F;
}

json to_json(const Fin2Category& x) {
  const auto& one = *x.one();
  const auto& two = *x.two();
  json j = to_json(one);
  json cells = j["arrows"];
  j.erase("arrows");
  j["one_cells"] = cells;
  json tc = json::array(), tid = json::array(), vc = json::array(), hc = json::array();
  for (int t = 0; t < two.num_arrows(); ++t)
    tc.push_back({{"id", two.arrow_id(t)}, {"src", one.arrow_id(two.src(t))}, {"tgt", one.arrow_id(two.tgt(t))}});
  for (int f = 0; f < one.num_arrows(); ++f) tid.push_back(two.arrow_id(two.id(f)));
  for (const auto& [b, a, ba] : two.data().compose) vc.push_back({two.arrow_id(b), two.arrow_id(a), two.arrow_id(ba)});
  for (int a = 0; a < x.num_two_cells(); ++a)
    for (int b : x.two_cells_from(x.obj_tgt(a))) hc.push_back({two.arrow_id(b), two.arrow_id(a), two.arrow_id(x.hcomp(b, a))});
  j["two_cells"] = tc;
  j["two_identity"] = tid;
  j["vcompose"] = vc;
  j["hcompose"] = hc;
  return j;
}

Cat2 cat2_from_json(const json& j, const Caps& caps) {
  json oj = {{"objects", field(j, "objects")}, {"arrows", field(j, "one_cells")}, {"identity", field(j, "identity")},
             {"compose", field(j, "compose")}};
  Cat one = category_from_json(oj, caps);
  json tj = json::object();
  json objs = json::array();
  for (int f = 0; f < one->num_arrows(); ++f) objs.push_back(one->arrow_id(f));
  tj["objects"] = objs;
  tj["arrows"] = field(j, "two_cells");
  tj["identity"] = field(j, "two_identity");
  tj["compose"] = field(j, "vcompose");
  Cat two = category_from_json(tj, caps, caps.max_cells);
  std::map<std::pair<int, int>, int> table;
  for (const auto& t : field(j, "hcompose")) {
    if (!t.is_array() || t.size() != 3) throw parse_error("hcompose entries are [beta, alpha, beta*alpha]");
    const int b = arrow_of(*two, t[0]), a = arrow_of(*two, t[1]), ba = arrow_of(*two, t[2]);
    if (one->tgt(two->src(a)) != one->src(two->src(b)))
      throw Error(ErrorKind::NonComposableEntry, "hcompose " + two->arrow_id(b) + " " + two->arrow_id(a));
    if (!table.emplace(std::make_pair(b, a), ba).second && table[{b, a}] != ba)
      throw Error(ErrorKind::ConflictingEntry, "hcompose " + two->arrow_id(b) + " " + two->arrow_id(a));
  }
  for (int a = 0; a < two->num_arrows(); ++a)
    for (int b = 0; b < two->num_arrows(); ++b)
      if (one->tgt(two->src(a)) == one->src(two->src(b)) && !table.count({b, a}))
        throw Error(ErrorKind::MissingComposite, "hcompose " + two->arrow_id(b) + " " + two->arrow_id(a));
  auto x = make_cat2(Fin2Category(one, two, [&](int b, int a) { return table.at({b, a}); }));
  if (auto e = check_2category(*x)) throw *e;
  return x;
}

json to_json(const Cat2Functor& s) {
  const auto& P = *s.P;
  json val = json::object(), on1 = json::object(), on2 = json::object();
  for (int x = 0; x < P.num_objects(); ++x) val[P.one()->object(x)] = to_json(*s.value[x]);
  for (int f = 0; f < P.num_cells(); ++f) on1[P.one()->arrow_id(f)] = functor_maps(s.on_one[f]);
  for (int t = 0; t < P.num_two_cells(); ++t) on2[P.two()->arrow_id(t)] = to_json(s.on_two[t]);
  return {{"P", to_json(P)}, {"contravariant", s.contravariant}, {"value", val}, {"on_one", on1}, {"on_two", on2}};
}

Cat2Functor cat2functor_from_json(const json& j, const Caps& caps, const Cat2& P) {
  Cat2Functor s;
  s.P = cat2_from_json(field(j, "P"), caps);
  if (P) {
    if (!same_category(*s.P->one(), *P->one()) || !same_category(*s.P->two(), *P->two()))
      throw Error(ErrorKind::TargetMismatch, "2-functors live on different 2-categories");
    s.P = P;
  }
  const auto& one = *s.P->one();
  const auto& two = *s.P->two();
  const json& cj = field(j, "contravariant");
  if (!cj.is_boolean()) throw parse_error("\"contravariant\" must be a boolean");
  s.contravariant = cj.get<bool>();
  s.value.resize(one.num_objects());
  s.on_one.resize(one.num_arrows());
  s.on_two.resize(two.num_arrows());
  by_object(one, field(j, "value"), "value", [&](int x, const json& v) { s.value[x] = category_from_json(v, caps); });
  by_arrow(one, field(j, "on_one"), "on_one", [&](int f, const json& v) {
    const int from = s.contravariant ? one.tgt(f) : one.src(f), to = s.contravariant ? one.src(f) : one.tgt(f);
    s.on_one[f] = functor_from_maps(v, s.value[from], s.value[to]);
  });
  by_arrow(two, field(j, "on_two"), "on_two",
           [&](int t, const json& v) { s.on_two[t] = nat_from_json(v, s.on_one[two.src(t)], s.on_one[two.tgt(t)]); });
  if (auto e = check_cat2functor(s)) throw *e;
  return s;
}

json to_json(const CrossedDouble& x) {
  const auto& D = x.dbl;
  const auto& X0 = *D.X0;
  const auto& X1 = *D.X1;
  json hc_obj = json::object(), hc_arr = json::object();
  const auto& apex = *D.composable.apex;
  for (int a = 0; a < apex.num_arrows(); ++a) {
    const int beta = D.composable.proj_left.arr[a], delta = D.composable.proj_right.arr[a];
    hc_arr[tuple_id({X1.arrow_id(delta), X1.arrow_id(beta)})] = X1.arrow_id(D.hcompose.arr[a]);
    if (apex.is_identity(a))
      hc_obj[tuple_id({X1.object(X1.src(delta)), X1.object(X1.src(beta))})] = X1.object(D.hcompose.obj[apex.src(a)]);
  }
  json chosen = json::array();
  for (int h = 0; h < D.num_horizontal(); ++h)
    for (int v : X0.out(D.d0.obj[h])) {
      const auto& c = x.at(h, v);
      chosen.push_back({X1.object(h), X0.arrow_id(v), X0.arrow_id(c.lambda), X1.object(c.rho), X1.arrow_id(c.kappa)});
    }
  return {{"X0", to_json(X0)},
          {"X1", to_json(X1)},
          {"d0", functor_maps(D.d0)},
          {"d1", functor_maps(D.d1)},
          {"s0", functor_maps(D.s0)},
          {"hcompose", {{"obj_map", hc_obj}, {"arr_map", hc_arr}}},
          {"chosen", chosen}};
}

Crossed crossed_from_json(const json& j, const Caps& caps) {
  Cat X0 = category_from_json(field(j, "X0"), caps);
  Cat X1 = category_from_json(field(j, "X1"), caps, caps.max_cells);
  FinFunctor d0 = functor_from_maps(field(j, "d0"), X1, X0);
  FinFunctor d1 = functor_from_maps(field(j, "d1"), X1, X0);
  FinFunctor s0 = functor_from_maps(field(j, "s0"), X0, X1);
  std::map<std::pair<int, int>, int> hc;
  const json& hj = field(j, "hcompose");
  const json& am = field(hj, "arr_map");
  if (!am.is_object()) throw parse_error("hcompose.arr_map must be an object");
  std::map<std::string, std::pair<int, int>> pair_key;
  for (int a = 0; a < X1->num_arrows(); ++a)
    for (int b = 0; b < X1->num_arrows(); ++b)
      if (d0.arr[b] == d1.arr[a]) pair_key[tuple_id({X1->arrow_id(a), X1->arrow_id(b)})] = {a, b};
  for (auto it = am.begin(); it != am.end(); ++it) {
    auto k = pair_key.find(it.key());
    if (k == pair_key.end()) throw Error(ErrorKind::NonComposableEntry, "hcompose key " + it.key());
    hc[k->second] = arrow_of(*X1, it.value());
  }
  if (hc.size() != pair_key.size()) throw Error(ErrorKind::MissingComposite, "hcompose is not total on composable squares");
  DoubleCategory D = make_double(X0, X1, d0, d1, s0, [&](int delta, int beta) { return hc.at({delta, beta}); });
  if (hj.contains("obj_map")) {
    const json& om = hj.at("obj_map");
    if (!om.is_object()) throw parse_error("hcompose.obj_map must be an object");
    for (auto it = om.begin(); it != om.end(); ++it) {
      bool found = false;
      for (int k = 0; k < X1->num_objects() && !found; ++k)
        for (int h = 0; h < X1->num_objects() && !found; ++h) {
          if (tuple_id({X1->object(k), X1->object(h)}) != it.key()) continue;
          found = true;
          if (D.hcomp_h(k, h) != object_of(*X1, it.value()))
            throw Error(ErrorKind::ConflictingEntry, "hcompose.obj_map at " + it.key());
        }
      if (!found) throw Error(ErrorKind::UnknownId, "hcompose.obj_map key " + it.key());
    }
  }
  std::map<std::pair<int, int>, ChosenSquare> chosen;
  for (const auto& c : field(j, "chosen")) {
    if (!c.is_array() || c.size() != 5) throw parse_error("chosen entries are [h, v, lambda, rho, kappa]");
    const int h = object_of(*X1, c[0]), v = arrow_of(*X0, c[1]);
    ChosenSquare s{arrow_of(*X0, c[2]), object_of(*X1, c[3]), arrow_of(*X1, c[4])};
    if (!chosen.emplace(std::make_pair(h, v), s).second)
      throw Error(ErrorKind::ConflictingEntry, "chosen square for " + X1->object(h) + ", " + X0->arrow_id(v));
  }
  auto x = make_crossed_ptr(make_crossed(std::move(D), [&](int h, int v) {
    auto it = chosen.find({h, v});
    if (it == chosen.end()) throw Error(ErrorKind::ChosenSquareMismatch, "no chosen square for " + X1->object(h) + ", " + X0->arrow_id(v));
    return it->second;
  }));
  std::size_t expected = 0;
  for (int h = 0; h < x->dbl.num_horizontal(); ++h) expected += X0->out(x->dbl.d0.obj[h]).size();
  if (expected != chosen.size()) throw Error(ErrorKind::ChosenSquareMismatch, "chosen squares with a mistyped (h, v)");
  if (auto e = validate_crossed(*x, false)) throw *e;
  return x;
}

json to_json(const CrossedDblFunctor& f) {
  return {{"source", to_json(*f.source)}, {"target", to_json(*f.target)}, {"f0", functor_maps(f.f0)}, {"f1", functor_maps(f.f1)}};
}

json to_json(const HarnessInstance& inst) {
  return {{"description", inst.description}, {"f", to_json(inst.f)}, {"g", to_json(inst.g)}};
}

HarnessInstance harness_instance_from_json(const json& j, const Caps& caps) {
  HarnessInstance inst;
  inst.description = j.value("description", "");
  const json& fj = field(j, "f");
  const json& gj = field(j, "g");
  Crossed C = crossed_from_json(field(fj, "target"), caps);
  if (field(gj, "target") != fj.at("target")) throw Error(ErrorKind::TargetMismatch, "f and g have different targets");
  auto leg = [&](const json& lj) {
    CrossedDblFunctor F;
    F.source = crossed_from_json(field(lj, "source"), caps);
    F.target = C;
    F.f0 = functor_from_maps(field(lj, "f0"), F.source->dbl.X0, C->dbl.X0);
    F.f1 = functor_from_maps(field(lj, "f1"), F.source->dbl.X1, C->dbl.X1);
    if (auto e = check_crossed_functor(F)) throw *e;
    return F;
  };
  inst.f = leg(fj);
  inst.g = leg(gj);
  return inst;
}

json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw parse_error(path + ": " + e.what());
  }
}

std::string digest(const json& j) { return hex64(fnv1a(j.dump())); }

}  // namespace exq
