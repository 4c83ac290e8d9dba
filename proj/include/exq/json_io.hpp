#pragma once

#include <string>

#include <json.hpp>

#include "exq/crossed.hpp"
#include "exq/kan.hpp"
#include "exq/monoidal.hpp"
#include "exq/square.hpp"
#include "exq/twocat.hpp"

namespace exq {

using json = nlohmann::json;

// Readers validate everything they build and throw Error (Parse for structural problems).
// Objects are named by their names, arrows by their ids; set elements by index.

json to_json(const FinCategory& c);
Cat category_from_json(const json& j, const Caps& caps = {}, long max_arrows = -1);
bool same_category(const FinCategory& a, const FinCategory& b);

// obj_map and arr_map only.
json functor_maps(const FinFunctor& f);
FinFunctor functor_from_maps(const json& j, const Cat& source, const Cat& target);
// With embedded "source" and "target".
json to_json(const FinFunctor& f);
FinFunctor functor_from_json(const json& j, const Caps& caps = {});

json to_json(const NatTransform& t);
NatTransform nat_from_json(const json& j, const FinFunctor& from, const FinFunctor& to);

json to_json(const LaxSquare& sq);
LaxSquare square_from_json(const json& j, const Caps& caps = {});

json to_json(const SetFunctor& h);
// When `source` is given the embedded source must describe the same category.
SetFunctor setfunctor_from_json(const json& j, const Caps& caps = {}, const Cat& source = nullptr);

json to_json(const StrictMonCategory& v);
MonCat monoidal_from_json(const json& j, const Caps& caps = {});
json to_json(const ColaxMonFunctor& F);
ColaxMonFunctor colax_from_json(const json& j, const Caps& caps = {});

json to_json(const Fin2Category& x);
Cat2 cat2_from_json(const json& j, const Caps& caps = {});
json to_json(const Cat2Functor& s);
Cat2Functor cat2functor_from_json(const json& j, const Caps& caps = {}, const Cat2& P = nullptr);

json to_json(const CrossedDouble& x);
// Typing and the crossed laws except s0-compatibility, which is reported separately.
Crossed crossed_from_json(const json& j, const Caps& caps = {});
json to_json(const CrossedDblFunctor& f);
json to_json(const HarnessInstance& inst);
HarnessInstance harness_instance_from_json(const json& j, const Caps& caps = {});

json parse_json_file(const std::string& path);
std::string digest(const json& j);

}  // namespace exq
