#pragma once

#include <array>
#include <optional>
#include <vector>

#include "exq/fincat.hpp"

namespace exq {

struct CommaResult {
  Cat apex;
  FinFunctor proj_left, proj_right;
  NatTransform two_cell;  // f∘proj_left => g∘proj_right
  std::vector<std::array<int, 3>> triples;  // apex object -> (a, γ, b)
};

// Objects (a, γ: fa -> gb, b); arrows (α, β) with g(β)∘γ = γ'∘f(α).
CommaResult comma(const FinFunctor& f, const FinFunctor& g);
CommaResult iso_comma(const FinFunctor& f, const FinFunctor& g);
// Strict pullback; triples hold (a, identity, b).
CommaResult pullback(const FinFunctor& f, const FinFunctor& g);

struct Partition {
  std::vector<int> label;  // per object, classes numbered by first occurrence
  int count = 0;
};
Partition pi0(const FinCategory& c);

// final: every b↓u connected; initial: every u↓b connected.
bool is_final_functor(const FinFunctor& u);
bool is_initial_functor(const FinFunctor& u);

bool is_opcartesian(const FinFunctor& p, int phi);
bool is_opfibration(const FinFunctor& p);
bool is_fibration(const FinFunctor& p);
bool is_discrete_opfibration(const FinFunctor& p);
bool is_discrete_fibration(const FinFunctor& p);
bool is_isofibration(const FinFunctor& p);

// left ⊣ right with unit: 1 => right∘left and counit: left∘right => 1.
struct Adjunction {
  FinFunctor left, right;
  NatTransform unit, counit;
};

std::optional<Error> check_adjunction(const Adjunction& adj);
// A left adjoint of f (f becomes the right adjoint), verified.
std::optional<Adjunction> find_left_adjoint(const FinFunctor& f, const Caps& caps = {});
// A right adjoint of f (f becomes the left adjoint), verified.
std::optional<Adjunction> find_right_adjoint(const FinFunctor& f, const Caps& caps = {});
// An isomorphism of categories a -> b, by exhaustive search.
std::optional<FinFunctor> find_isomorphism(const Cat& a, const Cat& b);

// Category of elements of h: C^op -> FinSet projected to C.
FinFunctor discrete_fibration_of(const SetFunctor& h, const Cat& c);
// Category of elements of h: C -> FinSet projected to C.
FinFunctor discrete_opfibration_of(const SetFunctor& h);

// Adjoint equivalence with f as left adjoint, when f is an equivalence.
std::optional<Adjunction> is_equivalence(const FinFunctor& f, const Caps& caps = {});

}  // namespace exq
