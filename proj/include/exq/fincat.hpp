#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "exq/common.hpp"

namespace exq {

struct ArrowRec {
  std::string id;
  int src = 0;
  int tgt = 0;
};

// Unvalidated description, as read from a document. Indices refer to `objects` / `arrows`.
struct CategoryData {
  std::vector<std::string> objects;
  std::vector<ArrowRec> arrows;
  std::vector<int> identity;                  // per object, -1 if absent
  std::vector<std::array<int, 3>> compose;    // (g, f, g∘f)
};

class FinCategory {
 public:
  using ComposeFn = std::function<int(int g, int f)>;

  FinCategory() = default;
  // Trusted constructor: `compose` is called on every composable pair and must return an arrow index.
  FinCategory(std::vector<std::string> objects, std::vector<ArrowRec> arrows, std::vector<int> identity,
              const ComposeFn& compose);

  int num_objects() const { return static_cast<int>(objects_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::string& object(int x) const { return objects_[x]; }
  const std::vector<std::string>& objects() const { return objects_; }
  const ArrowRec& arrow(int f) const { return arrows_[f]; }
  const std::string& arrow_id(int f) const { return arrows_[f].id; }
  int src(int f) const { return arrows_[f].src; }
  int tgt(int f) const { return arrows_[f].tgt; }
  int id(int x) const { return identity_[x]; }
  bool is_identity(int f) const { return identity_[arrows_[f].src] == f; }

  // g∘f, or -1 when tgt f != src g.
  int compose(int g, int f) const {
    if (arrows_[f].tgt != arrows_[g].src) return -1;
    return comp_[comp_offset_[f] + pos_in_out_[g]];
  }
  std::span<const int> hom(int x, int y) const;
  const std::vector<int>& out(int x) const { return out_[x]; }
  const std::vector<int>& in(int x) const { return in_[x]; }

  int find_object(std::string_view name) const;
  int find_arrow(std::string_view name) const;
  int inverse(int f) const;  // -1 if f is not invertible
  bool is_iso(int f) const { return inverse(f) >= 0; }

  CategoryData data() const;  // composites with an identity factor are omitted

 private:
  std::vector<std::string> objects_;
  std::vector<ArrowRec> arrows_;
  std::vector<int> identity_;
  std::vector<std::vector<int>> out_, in_;  // out_ sorted by target
  std::vector<int> pos_in_out_;
  std::vector<std::size_t> comp_offset_;
  std::vector<int> comp_;
  std::unordered_map<std::string, int> obj_index_, arr_index_;
};

using Cat = std::shared_ptr<const FinCategory>;

inline Cat make_cat(FinCategory c) { return std::make_shared<const FinCategory>(std::move(c)); }

// Checks identities, unit laws and associativity of an already-tabulated category.
// `units = false` skips the unit laws.
std::optional<Error> check_category_laws(const FinCategory& c, bool units = true);

FinCategory validate_category(const CategoryData& raw, const Caps& caps = {});

struct FinFunctor {
  Cat source, target;
  std::vector<int> obj, arr;

  int on_obj(int x) const { return obj[x]; }
  int on_arr(int f) const { return arr[f]; }
};

bool operator==(const FinFunctor& a, const FinFunctor& b);

std::optional<Error> check_functor(const FinFunctor& f);
FinFunctor identity_functor(const Cat& c);
FinFunctor compose(const FinFunctor& g, const FinFunctor& f);  // g∘f
FinFunctor constant_functor(const Cat& source, const Cat& target, int object);

// Calls `fn` on every functor A -> B; stops early when `fn` returns false.
void for_each_functor(const Cat& a, const Cat& b, const std::function<bool(const FinFunctor&)>& fn);
long count_functors(const Cat& a, const Cat& b, long limit = -1);

struct NatTransform {
  FinFunctor from, to;
  std::vector<int> comp;  // per object of the common source
};

std::optional<Error> check_nat(const NatTransform& t);
NatTransform identity_nat(const FinFunctor& f);
NatTransform vcompose(const NatTransform& beta, const NatTransform& alpha);  // beta after alpha
NatTransform whisker_left(const FinFunctor& g, const NatTransform& alpha);   // g∘alpha
NatTransform whisker_right(const NatTransform& alpha, const FinFunctor& h);  // alpha∘h
bool operator==(const NatTransform& a, const NatTransform& b);
// Every natural transformation from => to; stops when fn returns false.
void for_each_nat(const FinFunctor& from, const FinFunctor& to, const std::function<bool(const NatTransform&)>& fn);

// Functor into finite sets. Elements of the set at x are 0..size[x]-1.
struct SetFunctor {
  Cat source;
  std::vector<int> size;
  std::vector<std::vector<int>> map;  // per arrow, image of each element of the source set
  std::vector<std::vector<std::string>> labels;  // optional element names

  std::string label(int x, int i) const;
};

std::optional<Error> check_set_functor(const SetFunctor& h, const Caps& caps = {});
SetFunctor constant_set_functor(const Cat& c, int n);
SetFunctor compose(const SetFunctor& h, const FinFunctor& f);  // h∘f

// Standard categories.
FinCategory empty_category();
FinCategory terminal_category();
FinCategory discrete_category(int n);
FinCategory walking_arrow();
// Poset on 0..n-1 given by a reflexive, transitive relation leq[i][j].
FinCategory poset_category(const std::vector<std::vector<bool>>& leq, const std::vector<std::string>& names = {});
FinCategory chain_category(int n);
// One-object category of a monoid with elements 0..n-1, 0 the unit, table[a][b] = a·b.
FinCategory monoid_category(const std::vector<std::vector<int>>& table);
FinCategory cyclic_group_category(int n);
// Free category on an acyclic graph: arrows are paths.
FinCategory free_category(int n, const std::vector<std::pair<int, int>>& edges);

FinCategory opposite(const FinCategory& c);
FinFunctor opposite(const FinFunctor& f, const Cat& src_op, const Cat& tgt_op);

// Product objects are indexed a*|B|+b, arrows f*|B_1|+g.
struct ProductResult {
  Cat cat;
  FinFunctor pi1, pi2;
};
ProductResult product(const Cat& a, const Cat& b);
inline int product_index(int i, int j, int nb) { return i * nb + j; }

struct CoproductResult {
  Cat cat;
  FinFunctor in1, in2;
};
CoproductResult coproduct(const Cat& a, const Cat& b);

FinFunctor product_functor(const FinFunctor& f, const FinFunctor& g, const Cat& src, const Cat& tgt);
// <f, g>: X -> A×B
FinFunctor pairing(const FinFunctor& f, const FinFunctor& g, const Cat& prod);

// pos[f] = index of f within hom(src f, tgt f)
std::vector<int> hom_positions(const FinCategory& c);

bool is_full_and_faithful(const FinFunctor& f);
bool is_connected(const FinCategory& c);

}  // namespace exq
