#pragma once

#include <string>
#include <vector>

#include "s5kit/error.hpp"
#include "s5kit/frame.hpp"

namespace s5kit {

// Powerset Boolean algebra on `atoms` generators with an explicit box table.
// Elements are subsets of {1..atoms} encoded as bitmasks (bit a-1 = atom a);
// box is materialized as one entry per subset, in numeric order, so corrupted
// tables can be represented and then rejected by the axiom checker.
struct S5Algebra {
  int atoms = 0;
  std::vector<int> box;

  int element_count() const { return 1 << atoms; }
  int top() const { return atoms == 0 ? 0 : ((1 << atoms) - 1); }
  int box_of(int element) const { return box[static_cast<std::size_t>(element)]; }
  int diamond_of(int element) const { return top() & ~box_of(top() & ~element); }

  bool operator==(const S5Algebra&) const = default;
};

// Full-table homomorphism; map[e] is the image of source element e.
struct AlgebraHom {
  S5Algebra source;
  S5Algebra target;
  std::vector<int> map;

  int operator()(int element) const { return map[static_cast<std::size_t>(element)]; }

  bool operator==(const AlgebraHom&) const = default;
};

struct S5AxiomFailure {
  std::string equation;
  int element = 0;
  int other = -1;  // second element for the pairwise law, -1 otherwise
};

// First counterexample per failing equation, in the checker's fixed order.
struct S5AxiomReport {
  std::vector<S5AxiomFailure> failures;
  bool pass() const { return failures.empty(); }
};

inline constexpr int kMaxAlgebraAtoms = 12;

S5Algebra make_algebra(int atoms, std::vector<int> box);

// Evaluates the four defining equations over all elements (and pairs for the
// meet law): box(top) = top, box(x&y) = box(x)&box(y), box(x) <= x,
// x <= box(diamond(x)).
S5AxiomReport check_s5_axioms(const S5Algebra& algebra);

S5Algebra frame_to_algebra(const FiniteFrame& frame);

// Recovers the frame whose worlds are the atoms, two being related iff one
// lies below the diamond of the other's singleton. Throws NotS5 when the
// axioms fail and NotEquivalence when the recovered relation is not an
// equivalence (a corrupted box table can pass the four equations yet induce a
// non-transitive relation).
FiniteFrame algebra_to_frame(const S5Algebra& algebra);

AlgebraHom make_algebra_hom(S5Algebra source, S5Algebra target, std::vector<int> map);
AlgebraHom identity_algebra_hom(const S5Algebra& algebra);
AlgebraHom compose(const AlgebraHom& second, const AlgebraHom& first);

// Contravariant duality on morphisms: a map of frames becomes the inverse
// image hom between the powerset algebras, in the opposite direction.
AlgebraHom pmorphism_to_hom(const PMorphism& f);
PMorphism hom_to_pmorphism(const AlgebraHom& h);

}  // namespace s5kit
