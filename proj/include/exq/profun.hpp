#pragma once

#include <array>
#include <string>
#include <vector>

#include "exq/square.hpp"

namespace exq {

// A^op × B -> FinSet, drawn A -> B. Value index (a, b) -> a*|B| + b.
struct Profunctor {
  Cat source, target;
  std::vector<int> size;
  std::vector<std::vector<std::string>> names;
  // left[β][a][i]: β: b -> b' sends F(a,b) -> F(a,b')
  std::vector<std::vector<std::vector<int>>> left;
  // right[α][b][i]: α: a' -> a sends F(a,b) -> F(a',b)
  std::vector<std::vector<std::vector<int>>> right;

  int at(int a, int b) const { return a * target->num_objects() + b; }
  int count(int a, int b) const { return size[at(a, b)]; }
};

std::optional<Error> check_profunctor(const Profunctor& p);

enum class HomVariance {
  Companion,  // B(f,1): A -> B, (a, b) |-> B(fa, b)
  Conjoint,   // B(1,f): B -> A, (b, a) |-> B(b, fa)
};

// Elements of the value at a pair are listed in hom-set order.
Profunctor hom_profunctor(const FinFunctor& f, HomVariance v);
Profunctor hom_profunctor(const Cat& c);

// G∘F for F: A -> B and G: B -> C. Raw elements at (a,c) are triples (b, g ∈ G(b,c), s ∈ F(a,b)),
// ordered lexicographically; each class is named by its least member.
struct Composite {
  Profunctor value;
  Cat middle;
  std::vector<std::vector<int>> offset;     // per (a,c): per b, first raw index
  std::vector<std::vector<int>> stride_of;  // per (a,c): per b, |F(a,b)|
  std::vector<std::vector<int>> raw_class;  // per (a,c)
  std::vector<std::vector<std::array<int, 3>>> rep;  // per (a,c): per class

  int class_of(int a, int c, int b, int gi, int si) const;
};

Composite compose_profunctors(const Profunctor& g, const Profunctor& f, const Caps& caps = {});

// Per (a,b) element map between profunctors with the same boundary.
struct ProfMorphism {
  std::vector<std::vector<int>> comp;
};

bool is_iso(const ProfMorphism& m, const Profunctor& from, const Profunctor& to);
ProfMorphism inverse(const ProfMorphism& m, const Profunctor& from, const Profunctor& to);
ProfMorphism vcompose(const ProfMorphism& n, const ProfMorphism& m);
bool is_identity(const ProfMorphism& m);

// (F∘Hom_A) -> F and (Hom_B∘G) -> G.
ProfMorphism yoneda_right(const Composite& fh, const Profunctor& f);
ProfMorphism yoneda_left(const Composite& hg, const Profunctor& g);
// G∘m : G∘F -> G∘F' and n∘F : G∘F -> G'∘F
ProfMorphism whisker_left(const Composite& from, const Composite& to, const ProfMorphism& m);
ProfMorphism whisker_right(const Composite& from, const Composite& to, const ProfMorphism& n);
// (H∘G)∘F -> H∘(G∘F); `hg` is H∘G, `gf` is G∘F.
ProfMorphism associator(const Composite& hg_f, const Composite& hg, const Composite& h_gf, const Composite& gf);

struct PhiTilde {
  Composite source;                    // B(q,1)∘A(1,p)
  std::vector<std::vector<int>> comp;  // per (a,b): class -> arrow of C(fa,gb)
  bool well_defined = true;
  std::vector<bool> bijective;         // per (a,b)
  bool iso = true;
};

PhiTilde phi_tilde(const LaxSquare& sq, const Caps& caps = {});

struct AdjunctionCheck {
  bool unit_well_defined = true, counit_well_defined = true;
  bool triangle_left = false, triangle_right = false;
  bool holds() const { return unit_well_defined && counit_well_defined && triangle_left && triangle_right; }
};

// B(f,1) ⊣ B(1,f), triangle identities checked elementwise.
AdjunctionCheck check_hom_adjunction(const FinFunctor& f, const Caps& caps = {});

// |coend at (a,b)| against π0 of (q↓b)×_P(a↓p), built from comma and pullback constructions.
struct CoendPi0 {
  int coend_size = 0;
  int pi0_size = 0;
  bool bijection = false;
};
CoendPi0 coend_pi0_check(const LaxSquare& sq, int a, int b, const Caps& caps = {});

}  // namespace exq
