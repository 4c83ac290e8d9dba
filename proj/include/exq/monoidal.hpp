#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "exq/fincat.hpp"
#include "exq/gen.hpp"

namespace exq {

// Strict monoidal category; tensor is a functor on product(base, base) with its indexing.
struct StrictMonCategory {
  Cat base;
  int unit = 0;
  FinFunctor tensor;
  std::vector<int> symmetry;  // σ_{X,Y} at X*n+Y, empty when not symmetric

  int tensor_obj(int x, int y) const { return tensor.obj[x * base->num_objects() + y]; }
  int tensor_arr(int f, int g) const { return tensor.arr[f * base->num_arrows() + g]; }
  bool symmetric() const { return !symmetry.empty(); }
  int sigma(int x, int y) const { return symmetry[x * base->num_objects() + y]; }
  int tensor_objs(const std::vector<int>& xs) const;
  int tensor_arrs(const std::vector<int>& fs) const;
};

using MonCat = std::shared_ptr<const StrictMonCategory>;

std::optional<Error> check_monoidal(const StrictMonCategory& v);

// Builds the tensor functor from object and arrow tables.
StrictMonCategory make_monoidal(const Cat& base, int unit, const std::function<int(int, int)>& obj,
                                const std::function<int(int, int)>& arr, std::vector<int> symmetry = {});
StrictMonCategory terminal_monoidal();
// Monoid elements as a discrete category; symmetric when the table is commutative.
StrictMonCategory discrete_monoidal(const std::vector<std::vector<int>>& table);
// One object; arrows the elements of a commutative monoid.
StrictMonCategory one_object_monoidal(const std::vector<std::vector<int>>& table);
// Poset with a monotone, associative, unital operation on elements.
StrictMonCategory thin_monoidal(const std::vector<std::vector<bool>>& leq, int unit,
                                const std::function<int(int, int)>& op);
// Meet as tensor, top as unit. Throws NoProductStructure when meets or top are missing.
StrictMonCategory meet_monoidal(const std::vector<std::vector<bool>>& leq);
// Join as tensor, bottom as unit.
StrictMonCategory join_monoidal(const std::vector<std::vector<bool>>& leq);
// Objects even/odd, each with automorphisms ±1; σ is -1 on (odd, odd).
StrictMonCategory sign_monoidal();
StrictMonCategory product_monoidal(const StrictMonCategory& v, const StrictMonCategory& w);

struct ColaxMonFunctor {
  MonCat V, W;
  FinFunctor F;
  int nullary = -1;         // F I -> I
  std::vector<int> binary;  // F(X⊗Y) -> FX⊗FY at X*|V|+Y
  int bin(int x, int y) const { return binary[x * V->base->num_objects() + y]; }
};

std::optional<Error> check_colax(const ColaxMonFunctor& F);
// Also requires both categories symmetric and F2∘F(σ) = σ∘F2.
std::optional<Error> check_symmetric_colax(const ColaxMonFunctor& F);

ColaxMonFunctor identity_colax(const MonCat& v);
ColaxMonFunctor terminal_colax(const MonCat& v);
// Monotone object map between thin monoidal categories; nullopt unless it is colax.
std::optional<ColaxMonFunctor> thin_colax(const MonCat& v, const MonCat& w, const std::vector<int>& obj);
std::vector<ColaxMonFunctor> all_thin_colax(const MonCat& v, const MonCat& w);
ColaxMonFunctor product_colax(const ColaxMonFunctor& F, const ColaxMonFunctor& G);

// F̄_n(Z1..Zn): F(Z1⊗...⊗Zn) -> FZ1⊗...⊗FZn; F̄_0 is the nullary map.
int fbar(const ColaxMonFunctor& F, const std::vector<int>& zs);

struct NullaryResult {
  bool holds = true;
  int X = -1, f = -1, solutions = 0;  // first violation
};
NullaryResult condition_nullary(const ColaxMonFunctor& F);

// Objects (g: X -> Z1⊗Z2, Z1, Z2, h1: FZ1 -> Y1, h2: FZ2 -> Y2) with (h1⊗h2)∘F̄2∘F(g) = f;
// arrows (k1, k2) with g' = (k1⊗k2)∘g and hi = hi'∘F(ki).
struct MonFact {
  Cat cat;
  std::vector<std::array<int, 5>> objects;  // (g, Z1, Z2, h1, h2)
};
MonFact fact_monoidal(const ColaxMonFunctor& F, int X, int f, int Y1, int Y2);

struct MonExactResult {
  bool exact = true;
  NullaryResult nullary;
  std::optional<std::array<int, 4>> witness;  // (X, f, Y1, Y2) with a disconnected Fact
};
MonExactResult is_exact_colax_monoidal(const ColaxMonFunctor& F);

// Lists over V of length <= L. In the symmetric version an arrow Z -> Z' is a permutation τ
// with components Z_j -> Z'_τ(j). Tensor is concatenation where the result fits.
struct Truncation {
  Cat cat;
  std::vector<std::vector<int>> lists;                 // per object
  std::vector<std::vector<int>> perm;                  // per arrow
  std::vector<std::vector<int>> comps;                 // per arrow
  std::vector<int> concat;                             // per object pair, -1 when longer than L
  long excluded = 0;                                   // pairs without a tensor
  std::vector<std::vector<int>> by_length;             // objects of each length
};
Truncation truncated_free_monoidal(const Cat& v, int L, const Caps& caps = {});
Truncation truncated_free_symmetric(const Cat& v, int L, const Caps& caps = {});

struct AritySummary {
  int arity = 0;
  long instances = 0;  // (X, (Yi), f)
  long connected = 0;
  long skipped = 0;    // needs tensors beyond the truncation
};

struct NaryReport {
  std::vector<AritySummary> per_arity;
  bool all_connected = true;
  bool implication_holds = true;  // P0 ∧ P2 ⇒ Pn for every checked n
};
NaryReport nary_connectedness_oracle(const ColaxMonFunctor& F, int n_max, int L, const Caps& caps = {});

struct SymmetricReport {
  long instances = 0;
  long not_essentially_surjective = 0;
  long pi0_mismatches = 0;
  long ill_defined = 0;
  bool holds() const { return not_essentially_surjective == 0 && pi0_mismatches == 0 && ill_defined == 0; }
};
SymmetricReport check_symmetric_reduction(const ColaxMonFunctor& F, int n_max, int L, const Caps& caps = {});

// Colax functors with bases of at most `max_arrows` arrows, drawn from identities, functors to 1,
// thin colax maps, monoid maps and products.
ColaxMonFunctor random_colax(Rng& rng, int max_arrows);
ColaxMonFunctor random_symmetric_colax(Rng& rng, int max_arrows);

}  // namespace exq
