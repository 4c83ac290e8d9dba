#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <optional>
#include <string>
#include <vector>

#include "exq/kan.hpp"
#include "exq/square.hpp"

namespace exq {

// Objects (α: a -> px, x, β: qx -> b) with gβ∘φx∘fα = γ; arrows δ: x -> x' with pδ∘α = α' and β = β'∘qδ.
struct FactCategory {
  Cat cat;
  std::vector<std::array<int, 3>> objects;  // (α, x, β)
  std::vector<int> delta;                   // per arrow
};

FactCategory fact_category(const LaxSquare& sq, int a, int gamma, int b);

struct ExactCertificate {
  int a = -1, gamma = -1, b = -1;
  Partition components;  // of the witnessing Fact category
};

struct ExactResult {
  bool exact = true;
  std::optional<ExactCertificate> witness;  // least failing (a, b, γ) in index order
};

ExactResult is_exact(const LaxSquare& sq);
// Builds every Fact category explicitly; the reference the parallel kernel is tested against.
ExactResult is_exact_serial(const LaxSquare& sq);

bool is_exact_via_profunctor(const LaxSquare& sq, const Caps& caps = {});

// a↓p -> fa↓g, (α, x) |-> (φx∘fα, qx); initial for every a.
FinFunctor induced_initial(const LaxSquare& sq, int a);
bool is_exact_via_initial(const LaxSquare& sq);
// q↓b -> f↓gb, (x, β) |-> (px, gβ∘φx); final for every b.
FinFunctor induced_final(const LaxSquare& sq, int b);
bool is_exact_via_final(const LaxSquare& sq);

struct KanTransportResult {
  bool holds = true;
  bool small_family_holds = true;  // verdict of the size-capped enumeration alone
  long functors_tried = 0;
  std::optional<SetFunctor> witness;  // an h whose comparison fails
  int witness_b = -1;
};

// For each connected h: A -> FinSet with values of size <= caps.kan_set_size, and for each
// representable A(a,-), the comparison Lan_q(h∘p)(b) -> Lan_f h(gb) induced by φ is a well-defined bijection.
KanTransportResult kan_transport(const LaxSquare& sq, const Caps& caps = {});
bool is_exact_via_kan_transport(const LaxSquare& sq, const Caps& caps = {});
// Right Kan version, checked on the dual square.
bool is_exact_via_right_kan(const LaxSquare& sq, const Caps& caps = {});

struct MethodVerdicts {
  bool fact, profunctor, initial, final, kan, right_kan;
  bool agree() const {
    return fact == profunctor && fact == initial && fact == final && fact == kan && fact == right_kan;
  }
};
MethodVerdicts all_methods(const LaxSquare& sq, const Caps& caps = {});

}  // namespace exq

namespace exq {

struct PullbackRow {
  std::uint64_t seed = 0;
  std::string description;
  bool exact = false;            // pullback square
  bool iso_comma_exact = false;  // iso-comma square on the same legs
  bool precompose_checked = false;
  bool precompose_exact = false;  // apex precomposed with a functor having a fully faithful adjoint
  bool transpose_exact = false;   // observational
  std::string note;
};

struct PullbackSuiteReport {
  std::vector<PullbackRow> rows;
  long passed = 0, iso_comma_passed = 0, precomposed = 0, precompose_passed = 0, orientation_dependent = 0;
  // f: 1 -> 2 at the source, g: 1 -> 2 at the target
  bool counterexample_non_exact = false, counterexample_legs_rejected = false;
  bool holds() const {
    const long n = static_cast<long>(rows.size());
    return passed == n && iso_comma_passed == n && precompose_passed == precomposed && counterexample_non_exact &&
           counterexample_legs_rejected;
  }
};

// Pullback and iso-comma squares with a verified opfibration f or fibration g.
PullbackRow pullback_row(std::uint64_t seed);
PullbackSuiteReport pullback_exactness_suite(std::uint64_t seed, int n);
LaxSquare pullback_counterexample();

}  // namespace exq
