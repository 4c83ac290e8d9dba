#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "exq/exact.hpp"
#include "exq/report.hpp"

using namespace exq;

namespace {

struct Global {
  std::uint64_t seed = 0;
  std::string caps;
  std::string format = "text";
  std::string out;
};

// "12" sets the generator size; otherwise key=value pairs.
void parse_caps(const std::string& spec, SuiteConfig& c) {
  if (spec.empty()) return;
  auto number = [](const std::string& v, const std::string& key) {
    try {
      std::size_t used = 0;
      const long n = std::stol(v, &used);
      if (used != v.size() || n <= 0) throw std::invalid_argument(v);
      return n;
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidConfig, "cap " + key + " must be a positive integer, got '" + v + "'");
    }
  };
  if (spec.find('=') == std::string::npos) {
    c.gen_arrows = static_cast<int>(number(spec, "gen"));
    return;
  }
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::InvalidConfig, "cap entry '" + item + "' is not key=value");
    const std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    const long n = number(v, k);
    if (k == "gen") c.gen_arrows = static_cast<int>(n);
    else if (k == "arrows") c.caps.max_arrows = static_cast<int>(n);
    else if (k == "set") c.caps.max_set_size = static_cast<int>(n);
    else if (k == "kan") c.caps.kan_set_size = static_cast<int>(n);
    else if (k == "functors") c.caps.max_set_functors = n;
    else if (k == "cells") c.caps.max_cells = n;
    else throw Error(ErrorKind::InvalidConfig, "unknown cap " + k);
  }
}

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw Error(ErrorKind::InvalidConfig, "cannot write " + g.out);
  f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

const std::vector<std::string> kinds = {"category", "functor", "square", "setfunctor", "monoidal", "colax",
                                        "2category", "cat2functor", "crossed", "crossed-pullback"};

json generate(const std::string& kind, std::uint64_t seed, const SuiteConfig& c, const std::string& guarantee) {
  Rng rng(splitmix64(seed ^ fnv1a(kind)));
  const int n = c.gen_arrows;
  if (kind == "category") return to_json(*random_category(rng, n));
  if (kind == "functor")
    for (;;) {
      auto a = random_category(rng, n), b = random_category(rng, n);
      if (auto f = random_functor(rng, a, b)) return to_json(*f);
    }
  if (kind == "square") return to_json(guarantee == "comma" ? random_comma_square(rng, n) : random_square(rng, n));
  if (kind == "setfunctor") return to_json(random_set_functor(rng, random_category(rng, n), 2));
  if (kind == "monoidal") return to_json(*random_colax(rng, std::min(n, 8)).V);
  if (kind == "colax") return to_json(random_colax(rng, std::min(n, 8)));
  if (kind == "2category") return to_json(*random_2category(rng, 4, n));
  if (kind == "cat2functor") {
    auto P = random_2category(rng, 4, n);
    auto S = random_cat2functor(rng, P, true);
    auto T = random_cat2functor(rng, P, false);
    return {{"S", to_json(S)}, {"T", to_json(T)}};
  }
  if (kind == "crossed") return to_json(*random_crossed(rng, n));
  if (kind == "crossed-pullback") return to_json(random_harness_instance(rng, false));
  throw Error(ErrorKind::InvalidKind, kind);
}

std::string validate(const std::string& kind, const json& j, const Caps& caps, bool require_s0) {
  std::ostringstream out;
  if (kind == "category") {
    auto c = category_from_json(j, caps);
    out << "valid category: " << c->num_objects() << " objects, " << c->num_arrows() << " arrows\n";
  } else if (kind == "functor") {
    auto f = functor_from_json(j, caps);
    out << "valid functor: " << f.source->num_arrows() << " -> " << f.target->num_arrows() << " arrows\n";
  } else if (kind == "square") {
    square_from_json(j, caps);
    out << "valid lax square\n";
  } else if (kind == "setfunctor") {
    auto h = setfunctor_from_json(j, caps);
    out << "valid set functor on " << h.source->num_objects() << " objects\n";
  } else if (kind == "monoidal") {
    monoidal_from_json(j, caps);
    out << "valid strict monoidal category\n";
  } else if (kind == "colax") {
    colax_from_json(j, caps);
    out << "valid colax monoidal functor\n";
  } else if (kind == "2category") {
    auto x = cat2_from_json(j, caps);
    out << "valid 2-category: " << x->num_objects() << " objects, " << x->num_cells() << " 1-cells, "
        << x->num_two_cells() << " 2-cells\n";
  } else if (kind == "cat2functor") {
    if (j.contains("S")) {
      auto S = cat2functor_from_json(j.at("S"), caps);
      cat2functor_from_json(j.at("T"), caps, S.P);
      out << "valid pair of 2-functors into Cat\n";
    } else {
      cat2functor_from_json(j, caps);
      out << "valid 2-functor into Cat\n";
    }
  } else if (kind == "crossed") {
    auto x = crossed_from_json(j, caps);
    const bool s0 = is_s0_compatible(*x);
    if (require_s0 && !s0) throw Error(ErrorKind::ChosenSquareMismatch, "chosen squares at identities are not s0");
    out << "valid crossed double category; s0-compatible: " << (s0 ? "yes" : "no") << "\n";
  } else if (kind == "crossed-pullback") {
    auto inst = harness_instance_from_json(j, caps);
    pullback_crossed(inst.f, inst.g);
    out << "valid cospan of crossed double functors; g discrete fibration: "
        << (is_discrete_fibration_dbl(inst.g) ? "yes" : "no")
        << ", f objectwise opfibration: " << (is_objectwise_opfibration(inst.f) ? "yes" : "no") << "\n";
  } else {
    throw Error(ErrorKind::InvalidKind, kind);
  }
  return out.str();
}

json witness(const LaxSquare& sq, const ExactResult& r) {
  if (!r.witness) return nullptr;
  return {{"a", sq.A->object(r.witness->a)},
          {"gamma", sq.C->arrow_id(r.witness->gamma)},
          {"b", sq.B->object(r.witness->b)},
          {"components", r.witness->components.count}};
}

int exactness(const Global& g, const SuiteConfig& c, const std::string& file, const std::string& method) {
  const auto sq = square_from_json(parse_json_file(file), c.caps);
  json r = json::object();
  bool verdict = true;
  if (method == "all" || method == "fact") {
    const auto e = is_exact(sq);
    r["fact"] = e.exact;
    if (!e.exact) r["witness"] = witness(sq, e);
    verdict = e.exact;
  }
  if (method == "all" || method == "profunctor") r["profunctor"] = is_exact_via_profunctor(sq, c.caps);
  if (method == "all" || method == "initial") r["initial"] = is_exact_via_initial(sq);
  if (method == "all" || method == "final") r["final"] = is_exact_via_final(sq);
  if (method == "all" || method == "kan") {
    const auto kt = kan_transport(sq, c.caps);
    r["kan"] = kt.holds;
    r["kan_functors_tried"] = kt.functors_tried;
  }
  if (method != "all") verdict = r[method].get<bool>();
  r["exact"] = verdict;
  if (g.format == "json") {
    emit(g, dump(r));
  } else {
    std::ostringstream out;
    out << (verdict ? "exact" : "not exact") << "\n";
    for (auto it = r.begin(); it != r.end(); ++it)
      if (it.key() != "exact") out << "  " << it.key() << ": " << it.value().dump() << "\n";
    emit(g, out.str());
  }
  return verdict ? 0 : 1;
}

int kan_extend(const Global& g, const SuiteConfig& c, const std::string& ffile, const std::string& hfile) {
  const auto f = functor_from_json(parse_json_file(ffile), c.caps);
  const auto h = setfunctor_from_json(parse_json_file(hfile), c.caps, f.source);
  const auto r = left_kan(f, h, c.caps);
  if (g.format == "json") {
    emit(g, dump(to_json(r.extension)));
  } else {
    std::ostringstream out;
    const auto& B = *f.target;
    for (int b = 0; b < B.num_objects(); ++b) {
      out << B.object(b) << ":";
      for (int i = 0; i < r.extension.size[b]; ++i) out << " " << r.extension.label(b, i);
      out << "\n";
    }
    emit(g, out.str());
  }
  return 0;
}

int monoidal(const Global& g, const SuiteConfig& c, const std::string& file, int arity, int L) {
  const auto F = colax_from_json(parse_json_file(file), c.caps);
  const auto e = is_exact_colax_monoidal(F);
  const auto o = nary_connectedness_oracle(F, arity, L, c.caps);
  json r = {{"exact", e.exact}, {"nullary", e.nullary.holds}, {"oracle_all_connected", o.all_connected}};
  json per = json::array();
  for (const auto& a : o.per_arity)
    per.push_back({{"arity", a.arity}, {"instances", a.instances}, {"connected", a.connected}, {"skipped", a.skipped}});
  r["arities"] = per;
  if (e.witness) {
    const auto& W = *F.W->base;
    const auto& V = *F.V->base;
    r["witness"] = {V.object((*e.witness)[0]), W.arrow_id((*e.witness)[1]), W.object((*e.witness)[2]),
                    W.object((*e.witness)[3])};
  }
  if (g.format == "json") {
    emit(g, dump(r));
  } else {
    std::ostringstream out;
    out << (e.exact ? "exact" : "not exact") << " (nullary condition " << (e.nullary.holds ? "holds" : "fails") << ")\n";
    for (const auto& a : o.per_arity)
      out << "  arity " << a.arity << ": " << a.connected << "/" << a.instances << " connected, " << a.skipped
          << " skipped\n";
    emit(g, out.str());
  }
  return e.exact ? 0 : 1;
}

int laxcoend(const Global& g, const SuiteConfig& c, const std::vector<std::string>& files) {
  Cat2Functor S, T;
  if (files.size() == 1) {
    const json j = parse_json_file(files[0]);
    if (!j.contains("S") || !j.contains("T")) throw Error(ErrorKind::Parse, "expected fields \"S\" and \"T\"");
    S = cat2functor_from_json(j.at("S"), c.caps);
    T = cat2functor_from_json(j.at("T"), c.caps, S.P);
  } else {
    S = cat2functor_from_json(parse_json_file(files[0]), c.caps);
    T = cat2functor_from_json(parse_json_file(files[1]), c.caps, S.P);
  }
  if (!S.contravariant || T.contravariant) throw Error(ErrorKind::InvalidConfig, "S must be contravariant, T covariant");
  const auto L = lax_coend(S, T, c.caps);
  const auto o = pi0_coend_oracle(S, T, c.caps);
  if (g.format == "json") {
    emit(g, dump({{"lax_coend", to_json(*L)},
                  {"components", o.components},
                  {"oracle_classes", o.oracle_classes},
                  {"bijection", o.bijection}}));
  } else {
    std::ostringstream out;
    out << "lax coend: " << L->num_objects() << " objects, " << L->num_arrows() << " arrows, " << o.components
        << " components; set-level coend " << o.oracle_classes << " classes; "
        << (o.bijection ? "bijection" : "MISMATCH") << "\n";
    emit(g, out.str());
  }
  return o.bijection ? 0 : 1;
}

int codescent_compute(const Global& g, const SuiteConfig& c, const std::string& file) {
  const auto x = crossed_from_json(parse_json_file(file), c.caps);
  const auto cd = codescent(*x);
  if (g.format == "json") {
    emit(g, dump({{"codescent", to_json(*cd.cat())}, {"s0_compatible", is_s0_compatible(*x)}}));
  } else {
    std::ostringstream out;
    out << "codescent: " << cd.cat()->num_objects() << " objects, " << cd.cat()->num_arrows() << " arrows\n";
    emit(g, out.str());
  }
  return 0;
}

int codescent_pullback(const Global& g, const SuiteConfig& c, const std::string& file) {
  const auto inst = harness_instance_from_json(parse_json_file(file), c.caps);
  const auto r = evaluate_harness_instance(inst);
  if (!r.note.empty()) throw Error(ErrorKind::LawViolation, r.note);
  json j = {{"discrete_fibration", r.discrete_fibration}, {"objectwise_opfibration", r.objectwise_opfibration},
            {"s0_compatible", r.strict},                  {"hypotheses", r.asserted},
            {"exact", r.exact},                           {"transpose_exact", r.transpose_exact}};
  if (g.format == "json") {
    emit(g, dump(j));
  } else {
    std::ostringstream out;
    out << "codescent square " << (r.exact ? "exact" : "not exact") << "; hypotheses "
        << (r.asserted ? "hold" : "do not hold") << "; other orientation " << (r.transpose_exact ? "exact" : "not exact")
        << "\n";
    emit(g, out.str());
  }
  return r.asserted && !r.exact ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exq: exact squares, Kan extensions and codescent on finite categories"};
  app.fallthrough();
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "generator and suite seed");
  app.add_option("--caps", g.caps, "generator size, or gen=,arrows=,set=,kan=,functors=,cells=");
  app.add_option("--format", g.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "write output to a file");

  std::string kind, file, file2, method = "all", guarantee, suites;
  std::vector<std::string> files;
  bool require_s0 = false;
  int arity = 4, trunc = 4, instances = -1;

  auto* val = app.add_subcommand("validate", "validate a document");
  val->add_option("kind", kind)->required()->check(CLI::IsMember(kinds));
  val->add_option("file", file)->required();
  val->add_flag("--require-s0", require_s0, "crossed: also require identity chosen squares to be s0");

  auto* gen = app.add_subcommand("generate", "emit a random lawful instance");
  gen->add_option("kind", kind)->required();
  gen->add_option("--guarantee", guarantee, "square: 'comma' for an exact comma square")->check(CLI::IsMember({"comma"}));

  auto* ex = app.add_subcommand("exactness", "decide exactness of a lax square");
  auto* ex_check = ex->add_subcommand("check", "check a square document");
  ex->require_subcommand(1);
  ex_check->add_option("square", file)->required();
  ex_check->add_option("--method", method)->check(CLI::IsMember({"all", "fact", "profunctor", "initial", "final", "kan"}));

  auto* kan = app.add_subcommand("kan", "pointwise left Kan extensions");
  auto* kan_ext = kan->add_subcommand("extend", "Lan_f h");
  kan->require_subcommand(1);
  kan_ext->add_option("functor", file)->required();
  kan_ext->add_option("setfunctor", file2)->required();

  auto* mon = app.add_subcommand("monoidal", "exactness of a colax monoidal functor");
  auto* mon_check = mon->add_subcommand("check", "check a colax functor document");
  mon->require_subcommand(1);
  mon_check->add_option("colax", file)->required();
  mon_check->add_option("--arity", arity, "largest arity for the oracle")->check(CLI::Range(0, 6));
  mon_check->add_option("--truncation", trunc, "list length bound")->check(CLI::Range(1, 6));

  auto* lax = app.add_subcommand("laxcoend", "lax coend of S: P^op -> Cat and T: P -> Cat");
  lax->add_option("files", files, "one file with S and T, or two files")->required()->expected(1, 2);

  auto* cod = app.add_subcommand("codescent", "codescent of crossed double categories");
  cod->require_subcommand(1);
  auto* cod_c = cod->add_subcommand("compute", "codescent object of a crossed double category");
  cod_c->add_option("crossed", file)->required();
  auto* cod_p = cod->add_subcommand("pullback", "exactness of the codescent square of a pullback");
  cod_p->add_option("cospan", file)->required();

  auto* suite = app.add_subcommand("suite", "run property suites");
  suite->add_option("--method", suites, "comma-separated suite names (default: all)");
  suite->add_option("--instances", instances, "instances per suite")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    SuiteConfig c;
    c.seed = g.seed;
    c.format = g.format;
    parse_caps(g.caps, c);
    if (auto e = check_config(c)) throw *e;

    if (*val) {
      const std::string text = validate(kind, parse_json_file(file), c.caps, require_s0);
      emit(g, g.format == "json" ? dump({{"valid", true}, {"message", text.substr(0, text.size() - 1)}}) : text);
      return 0;
    }
    if (*gen) {
      if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) throw Error(ErrorKind::InvalidKind, kind);
      if (!guarantee.empty() && kind != "square") throw Error(ErrorKind::InvalidConfig, "--guarantee applies to squares");
      emit(g, dump(generate(kind, g.seed, c, guarantee)));
      return 0;
    }
    if (*ex_check) return exactness(g, c, file, method);
    if (*kan_ext) return kan_extend(g, c, file, file2);
    if (*mon_check) {
      if (arity > trunc) throw Error(ErrorKind::InvalidConfig, "--arity must not exceed --truncation");
      return monoidal(g, c, file, arity, trunc);
    }
    if (*lax) return laxcoend(g, c, files);
    if (*cod_c) return codescent_compute(g, c, file);
    if (*cod_p) return codescent_pullback(g, c, file);
    if (*suite) {
      std::stringstream ss(suites);
      for (std::string s; std::getline(ss, s, ',');)
        if (!s.empty()) c.suites.push_back(s);
      c.instances = instances;
      const Report r = run_suite(c);
      emit(g, g.format == "json" ? dump(to_json(r)) : to_text(r));
      return r.holds() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: Parse: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
