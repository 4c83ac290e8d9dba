#pragma once

#include "exq/constructions.hpp"

namespace exq {

//      p
//   P ---> A
// q |  φ   | f        φ: f∘p => g∘q
//   v      v
//   B ---> C
//      g
struct LaxSquare {
  Cat P, A, B, C;
  FinFunctor p, q, f, g;
  NatTransform phi;
};

std::optional<Error> check_square(const LaxSquare& sq);

// (P^op, B^op, A^op, C^op; q^op, p^op, g^op, f^op) with the same components read in C^op.
LaxSquare dual_square(const LaxSquare& sq);

LaxSquare square_from(const CommaResult& r, const FinFunctor& f, const FinFunctor& g);
LaxSquare comma_square(const FinFunctor& f, const FinFunctor& g);
LaxSquare pullback_square(const FinFunctor& f, const FinFunctor& g);
LaxSquare iso_comma_square(const FinFunctor& f, const FinFunctor& g);
LaxSquare identity_square(const Cat& c);
// Commuting square with identity 2-cell; throws NaturalityViolation when f∘p != g∘q.
LaxSquare commuting_square(const FinFunctor& p, const FinFunctor& q, const FinFunctor& f, const FinFunctor& g);
// The square read with p/f and q/g exchanged: (P, B, A, C; q, p, g, f). Only meaningful for identity 2-cells.
LaxSquare transpose_square(const LaxSquare& sq);
// Replace the apex by E through e: E -> P.
LaxSquare precompose_apex(const LaxSquare& sq, const FinFunctor& e);

}  // namespace exq
