#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "exq/gen.hpp"
#include "exq/kan.hpp"
#include "exq/twocat.hpp"

namespace exq {

// X0 holds objects and vertical arrows; X1 holds horizontal arrows (its objects) and squares (its
// arrows, composed vertically). d1 is the left side (source), d0 the right side (target).
struct DoubleCategory {
  Cat X0, X1;
  FinFunctor d0, d1, s0;
  CommaResult composable;  // pairs (β, δ) with d0 β = d1 δ, β on the left
  FinFunctor hcompose;     // composable.apex -> X1
  std::unordered_map<std::uint64_t, int> pair_index;  // β*|squares|+δ -> arrow of composable.apex

  int num_horizontal() const { return X1->num_objects(); }
  int num_squares() const { return X1->num_arrows(); }
  // δ after β horizontally; -1 unless d0 β = d1 δ.
  int hcomp(int delta, int beta) const;
  int hcomp_h(int k, int h) const { return h < 0 || k < 0 ? -1 : X1->src(hcomp(X1->id(k), X1->id(h))); }
};

// `hc(δ, β)` is called on every pair with d0 β = d1 δ.
DoubleCategory make_double(Cat X0, Cat X1, FinFunctor d0, FinFunctor d1, FinFunctor s0,
                           const std::function<int(int delta, int beta)>& hc);
std::optional<Error> validate_double(const DoubleCategory& x);

// κ: h => ρ with left side λ and right side v.
struct ChosenSquare {
  int lambda = -1, rho = -1, kappa = -1;
};

struct CrossedDouble {
  DoubleCategory dbl;
  std::vector<std::vector<ChosenSquare>> chosen;  // [h][position of v in X0.out(d0 h)]
  std::vector<int> out_pos;                       // per vertical arrow

  const ChosenSquare& at(int h, int v) const { return chosen[h][out_pos[v]]; }
};
using Crossed = std::shared_ptr<const CrossedDouble>;
inline Crossed make_crossed_ptr(CrossedDouble x) { return std::make_shared<const CrossedDouble>(std::move(x)); }

CrossedDouble make_crossed(DoubleCategory x, const std::function<ChosenSquare(int h, int v)>& choose);
// Typing, opcartesian chosen squares, κ_{h,1} = 1, closure under vertical and horizontal composition,
// and unless `require_s0` is false, κ_{1_x,v} = s0(v).
std::optional<Error> validate_crossed(const CrossedDouble& x, bool require_s0 = true);
// κ_{1_x,v} = s0(v) for every object x and vertical v out of x.
bool is_s0_compatible(const CrossedDouble& x);

// Commutative squares of C with κ_{h,v} = (λ = 1, ρ = v∘h). Not s0-compatible unless C is discrete.
CrossedDouble sq_double(const Cat& c);
// Horizontal arrows are identities; squares are the arrows of C.
CrossedDouble horizontally_trivial(const Cat& c);
// Vertical arrows are identities; horizontal arrows and squares are the 1- and 2-cells of h.
CrossedDouble vertically_trivial(const Cat2& h);

struct CrossedDblFunctor {
  Crossed source, target;
  FinFunctor f0, f1;
};
// Commutes with d0, d1, s0 and horizontal composition, and preserves chosen squares.
std::optional<Error> check_crossed_functor(const CrossedDblFunctor& f);
CrossedDblFunctor identity_crossed_functor(const Crossed& x);
// Sq(u) between sq_double instances.
CrossedDblFunctor sq_functor(const FinFunctor& u, const Crossed& source, const Crossed& target);
// u on both levels between horizontally_trivial instances.
CrossedDblFunctor ht_functor(const FinFunctor& u, const Crossed& source, const Crossed& target);

struct CrossedProduct {
  Crossed cat;
  CrossedDblFunctor pi1, pi2;
};
CrossedProduct product_crossed(const Crossed& x, const Crossed& y);

// Objects of X; 1-cells are corners (f vertical, g horizontal with d1 g = tgt f), composed as
// (h,k)∘(f,g) = (λ_{g,h}∘f, k∘ρ_{g,h}). A 2-cell out of (f,g) is a square β with top g and
// identity right side; its target is (d1β∘f, bottom of β).
// Without s0-compatibility the identity corners are units only up to a 2-cell.
struct Corners {
  Cat2 cnr;
  bool strict = true;  // strictly unital
  std::vector<std::array<int, 2>> cells;      // (f, g)
  std::vector<std::array<int, 2>> two_cells;  // (source corner, β)
  std::unordered_map<std::uint64_t, int> cell_index, two_index;

  int corner(int f, int g) const;
  int two_cell(int c, int beta) const;
};
// Throws LawViolation when the result fails the 2-category laws (units checked after π0 when not strict).
Corners corners(const CrossedDouble& x);
Fin2Functor corners(const CrossedDblFunctor& f, const Corners& source, const Corners& target);

struct Codescent {
  Corners cnr;
  Pi0Star pi;
  FinFunctor q0;        // X0 -> cat
  std::vector<int> q1;  // per horizontal arrow h, an arrow q0(d1 h) -> q0(d0 h)
  const Cat& cat() const { return pi.cat; }
};
// Throws LawViolation when the canonical cocone fails its equations.
Codescent codescent(const CrossedDouble& x);
FinFunctor codescent(const CrossedDblFunctor& f, const Codescent& source, const Codescent& target);

// q1 s0 = 1, q1 preserves horizontal composition, q1 natural with respect to squares.
std::optional<std::string> cocone_error(const DoubleCategory& x, const FinFunctor& q0, const std::vector<int>& q1);

struct InitialityResult {
  long cocones = 0;
  long functors = 0;
  bool bijection = true;
};
// For every vertex Z: composing with (q0, q1) is a bijection from functors codescent -> Z onto cocones into Z.
InitialityResult check_codescent_initiality(const CrossedDouble& x, const std::vector<Cat>& vertices,
                                            const Caps& caps = {});

bool is_discrete_fibration_dbl(const CrossedDblFunctor& f);
bool is_objectwise_opfibration(const CrossedDblFunctor& f);

struct CrossedPullback {
  Crossed P;
  CrossedDblFunctor p, q;  // to the sources of f and g
};
// Componentwise; throws TargetMismatch or ChosenSquareMismatch.
CrossedPullback pullback_crossed(const CrossedDblFunctor& f, const CrossedDblFunctor& g);

// Fixed list of small categories: discrete, chains, monoids, parallel pairs and their opposites.
std::vector<Cat> small_category_corpus(int max_arrows);

struct HarnessInstance {
  CrossedDblFunctor f, g;
  std::string description;
};
HarnessInstance random_harness_instance(Rng& rng, bool allow_violations);

struct HardExactnessRow {
  std::uint64_t seed = 0;
  std::string description;
  bool discrete_fibration = false, objectwise_opfibration = false;
  bool strict = false;    // all four crossed double categories are s0-compatible
  bool asserted = false;  // both hypotheses hold and strict
  bool exact = false;
  bool transpose_exact = false;  // observational
  std::string note;              // error text when the instance could not be built
};

struct HardExactnessReport {
  std::vector<HardExactnessRow> rows;
  long asserted = 0, passed = 0, excluded = 0, transpose_exact = 0;
  long relaxed = 0, relaxed_exact = 0;  // hypotheses hold but some corner is not s0-compatible
  bool holds() const { return passed == asserted; }
};
// Generates instances until `n_asserted` satisfy both hypotheses; the rest are kept as excluded rows.
// Stops at the first asserted failure.
HardExactnessReport hard_exactness_harness(std::uint64_t seed, int n_asserted);
// Hypotheses, codescent square of the pullback and both verdicts.
HardExactnessRow evaluate_harness_instance(const HarnessInstance& inst);
HardExactnessRow hard_exactness_row(std::uint64_t seed);

Crossed random_crossed(Rng& rng, int max_arrows);

}  // namespace exq
