#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "exq/gen.hpp"
#include "exq/kan.hpp"
#include "exq/square.hpp"

namespace exq {

// `one` holds objects and 1-cells. `two` has the 1-cells of `one` as its objects (same indices)
// and the 2-cells as arrows, composed vertically. Horizontal composition is tabulated.
class Fin2Category {
 public:
  using HcompFn = std::function<int(int beta, int alpha)>;

  Fin2Category() = default;
  // Trusted: `hcomp` is called on every horizontally composable pair (α first, then β).
  Fin2Category(Cat one, Cat two, const HcompFn& hcomp);

  const Cat& one() const { return one_; }
  const Cat& two() const { return two_; }
  int num_objects() const { return one_->num_objects(); }
  int num_cells() const { return one_->num_arrows(); }
  int num_two_cells() const { return two_->num_arrows(); }
  int cell_src(int t) const { return two_->src(t); }
  int cell_tgt(int t) const { return two_->tgt(t); }
  int obj_src(int t) const { return one_->src(two_->src(t)); }
  int obj_tgt(int t) const { return one_->tgt(two_->src(t)); }
  int id2(int f) const { return two_->id(f); }
  int vcomp(int beta, int alpha) const { return two_->compose(beta, alpha); }
  // β∘α horizontally; -1 when the 0-cells do not match.
  int hcomp(int beta, int alpha) const {
    if (obj_src(beta) != obj_tgt(alpha)) return -1;
    return table_[offset_[alpha] + pos_[beta]];
  }
  const std::vector<int>& two_cells_from(int x) const { return from_[x]; }

 private:
  Cat one_, two_;
  std::vector<std::vector<int>> from_;  // 2-cells by source object
  std::vector<int> pos_;
  std::vector<std::size_t> offset_;
  std::vector<int> table_;
};

using Cat2 = std::shared_ptr<const Fin2Category>;
inline Cat2 make_cat2(Fin2Category c) { return std::make_shared<const Fin2Category>(std::move(c)); }

// Typing of 2-cells, units, associativity and interchange of horizontal composition.
std::optional<Error> check_2category(const Fin2Category& x, bool units = true);

Fin2Category locally_discrete(const Cat& c);
// A 2-cell f => g exactly when leq[f][g]; leq must be a preorder on parallel arrows that is
// stable under composition on both sides.
Fin2Category locally_posetal(const Cat& c, const std::vector<std::vector<bool>>& leq);
// Least such preorder containing the given pairs of parallel arrows.
std::vector<std::vector<bool>> compatible_preorder(const FinCategory& c, const std::vector<std::pair<int, int>>& pairs);

// Hom category X(a, b); cells[i] is the 1-cell of X behind object i, and arrows map in order
// onto the 2-cells listed in two_cells.
struct HomCategory {
  Cat cat;
  std::vector<int> cells, two_cells;
  std::vector<int> local;  // per 1-cell of X, position in `cells` or -1
  std::vector<int> local2;  // per 2-cell of X, position in `two_cells` or -1
};
HomCategory hom_category(const Fin2Category& x, int a, int b);

struct Fin2Functor {
  Cat2 source, target;
  std::vector<int> obj, one, two;
};
std::optional<Error> check_2functor(const Fin2Functor& f);
Fin2Functor identity_2functor(const Cat2& c);
// A functor between underlying categories of locally discrete 2-categories.
Fin2Functor d_star(const FinFunctor& f, const Cat2& source, const Cat2& target);

// π0 applied to every hom category; arrow i is the class of its least 1-cell and keeps that name.
struct Pi0Star {
  Cat cat;
  std::vector<int> cls;  // per 1-cell
};
// Throws IllDefinedComposition if classes fail to compose.
Pi0Star pi0_star(const Fin2Category& x);
inline Cat obj_star(const Fin2Category& x) { return x.one(); }
// obj_*X -> π0*X, identity on objects.
FinFunctor pi0_comparison(const Fin2Category& x, const Pi0Star& p);
FinFunctor pi0_star(const Fin2Functor& f, const Pi0Star& source, const Pi0Star& target);
// π0(h) is a bijection on connected components.
bool inverted_by_pi0(const FinFunctor& h);

// φ: f∘p => g∘q with 1-cell components, strictly 2-natural.
struct LaxSquare2 {
  Cat2 P, A, B, C;
  Fin2Functor p, q, f, g;
  std::vector<int> phi;
};
std::optional<Error> check_square2(const LaxSquare2& sq);
LaxSquare2 d_star(const LaxSquare& sq);

// Objects (x, y: qx -> b, z: a -> px); arrows (h, h1: y1 => y2∘qh, h2: ph∘z1 => z2).
struct CFunctor {
  Cat F;
  HomCategory target;  // C(fa, gb)
  FinFunctor functor;  // F -> target.cat
  std::vector<std::array<int, 3>> objects;
};
CFunctor c_functor(const LaxSquare2& sq, int a, int b);

struct Pi0ExactResult {
  bool exact = true;
  int a = -1, b = -1;  // least failing pair
  bool surjective = true, injective = true;
};
Pi0ExactResult is_pi0_exact(const LaxSquare2& sq);

// A 2-functor P -> Cat, or P^op -> Cat when `contravariant` (1-cells reversed, 2-cells kept).
struct Cat2Functor {
  Cat2 P;
  bool contravariant = false;
  std::vector<Cat> value;
  std::vector<FinFunctor> on_one;
  std::vector<NatTransform> on_two;
};
std::optional<Error> check_cat2functor(const Cat2Functor& s);
Cat2Functor constant_cat2functor(const Cat2& P, bool contravariant, const Cat& k);
// P(x0, -) or, contravariantly, P(-, x0).
Cat2Functor representable_cat2functor(const Cat2& P, int x0, bool contravariant);
Cat2Functor product_cat2functor(const Cat2Functor& s, const Cat2Functor& t);
// Discrete categories from a set functor on π0*P (on its opposite when contravariant).
Cat2Functor discrete_cat2functor(const Cat2& P, bool contravariant, const SetFunctor& h);

// (1\\S) ×_P (1//T): objects (x, y ∈ Sx, z ∈ Tx), 1-cells (f, f1: y1 -> Sf y2, f2: Tf z1 -> z2),
// 2-cells α: f => g in P with S(α)∘f1 = g1 and f2 = g2∘T(α).
struct LaxCoendCarrier {
  Cat2 carrier;
  std::vector<std::array<int, 3>> objects;  // (x, y, z)
  std::vector<std::array<int, 5>> cells;    // (f, y2, z1, f1, f2)
  std::vector<int> base;                    // first object over each x

  int object(int x, int y, int z) const;
  int cell(int f, int y2, int z1, int f1, int f2) const;
  int two_cell(int src, int tgt, int alpha) const;

  std::map<std::array<int, 5>, int> cell_index;
  std::map<std::array<int, 3>, int> two_index;
  std::vector<int> t_size;
};
LaxCoendCarrier lax_coend_carrier(const Cat2Functor& S, const Cat2Functor& T, const Caps& caps = {});
// π0* of the carrier.
Cat lax_coend(const Cat2Functor& S, const Cat2Functor& T, const Caps& caps = {});

struct CoendOracleResult {
  int oracle_classes = 0;
  int components = 0;
  bool bijection = true;
};
// Set-level coend of π0S × π0T over the underlying category of P, against π0 of the lax coend.
CoendOracleResult pi0_coend_oracle(const Cat2Functor& S, const Cat2Functor& T, const Caps& caps = {});

struct LaxWedgeReport {
  bool axioms_hold = true;
  std::string failure;
  long vertices = 0;
  long wedges = 0;          // lax wedges found by direct enumeration, over all vertices
  long factorizations = 0;  // functors out of the lax coend, over all vertices
  bool factorization_holds = true;
};
// Checks the lax-wedge axioms of κ in the carrier, then for every vertex X that composing with κ
// is a bijection from functors lax_coend -> X onto lax wedges into X.
LaxWedgeReport check_universal_lax_wedge(const Cat2Functor& S, const Cat2Functor& T, const std::vector<Cat>& vertices,
                                         const Caps& caps = {});

// Locally posetal 2-category on a random category with at most max_objects objects.
Cat2 random_2category(Rng& rng, int max_objects, int max_arrows);
Cat2Functor random_cat2functor(Rng& rng, const Cat2& P, bool contravariant);

}  // namespace exq
