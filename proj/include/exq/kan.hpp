#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <functional>
#include <vector>

#include "exq/fincat.hpp"

namespace exq {

// Shape of the colimits computing Lan_f, independent of the functor being extended.
// At b the entries are the objects (a, α: fa -> b) of f↓b, listed by a and then by hom order.
struct LanPlan {
  FinFunctor f;
  std::vector<std::vector<int>> entry_start;            // [b][a]
  std::vector<std::vector<std::array<int, 2>>> entries;  // [b][e] = (a, α)
  // [b]: (e, u, e') for u: a -> a' and e' = (a', α'), e = (a, α'∘fu)
  std::vector<std::vector<std::array<int, 3>>> relations;

  explicit LanPlan(const FinFunctor& f);
  int entry(int b, int a, int alpha_pos) const { return entry_start[b][a] + alpha_pos; }
};

struct KanResult {
  SetFunctor extension;
  std::vector<std::vector<int>> unit;  // [a][s] -> element of extension(fa)
  std::vector<std::vector<int>> raw_start;  // [b][e]
  std::vector<std::vector<int>> raw_class;  // [b][raw]
  std::vector<std::vector<std::array<int, 3>>> rep;  // [b][class] = (a, α, s), least raw member

  int class_of(const LanPlan& plan, int b, int a, int alpha_pos, int s) const {
    return raw_class[b][raw_start[b][plan.entry(b, a, alpha_pos)] + s];
  }
};

KanResult left_kan(const LanPlan& plan, const SetFunctor& h, const Caps& caps = {});
KanResult left_kan(const FinFunctor& f, const SetFunctor& h, const Caps& caps = {});

// Every h: C -> FinSet with |h(x)| <= max_size. Stops when fn returns false.
// Throws SizeLimitExceeded after `limit` functors when limit >= 0.
void for_each_set_functor(const Cat& c, int max_size, const std::function<bool(const SetFunctor&)>& fn,
                          long limit = -1);
// C(a, -), elements listed in hom order.
SetFunctor representable(const Cat& c, int a);
// Category of elements is nonempty and connected.
bool is_connected_set_functor(const SetFunctor& h);

// Chosen terminal object and binary products; prod[x*n+y] = (x×y, π1, π2).
struct ProductStructure {
  Cat cat;
  int terminal = -1;
  std::vector<std::array<int, 3>> prod;
};

std::optional<Error> check_product_structure(const ProductStructure& ps);
// Search for a product structure; first candidate in index order.
std::optional<ProductStructure> find_product_structure(const Cat& c);
// Throws NoProductStructure when `ps` fails its check or does not live on h's source.
bool preserves_finite_products(const SetFunctor& h, const ProductStructure& ps);
bool preserves_finite_products(const FinFunctor& f, const ProductStructure& src, const ProductStructure& tgt);

// Meet-semilattice on 0..n-1 given by its order; the product structure takes meets and the top.
ProductStructure meet_semilattice(const std::vector<std::vector<bool>>& leq, const std::vector<std::string>& names = {});

}  // namespace exq

namespace exq {

struct KanProductRow {
  std::uint64_t seed = 0;
  std::string description;
  int i_size = 0, j_size = 0;
  bool g_preserves = false;    // checked on the input
  bool lan_preserves = false;  // the asserted property
  std::string note;
};

struct KanProductReport {
  std::vector<KanProductRow> rows;
  long passed = 0;
  bool holds() const { return passed == static_cast<long>(rows.size()); }
};

// Meet-semilattices I, J (families of subsets closed under intersection, and products of these),
// product-preserving f: I -> J and g: I -> FinSet; Lan_f g must preserve finite products.
KanProductRow kan_product_row(std::uint64_t seed);
KanProductReport kan_product_suite(std::uint64_t seed, int n);

}  // namespace exq
