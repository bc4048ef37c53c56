#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "s5kit/action.hpp"
#include "s5kit/error.hpp"
#include "s5kit/surjection.hpp"

namespace s5kit {

// Contravariant set-valued functor on surjections, truncated at level N.
// carrier_sizes[n-1] is the size of the level-n carrier; for every surjection
// q: n ->> m with n <= N there is a materialized table for the map
// X(q): carrier(m) -> carrier(n). Identities are stored too.
struct TruncatedPresheaf {
  int N = 1;
  std::vector<int> carrier_sizes;
  std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables;

  int carrier_size(int level) const { return carrier_sizes[static_cast<std::size_t>(level) - 1]; }
  const std::vector<int>& table(const Surjection& q) const;
  int map_at(const Surjection& q, int element) const {
    return table(q)[static_cast<std::size_t>(element) - 1];
  }

  bool operator==(const TruncatedPresheaf&) const = default;
};

struct PresheafLawReport {
  struct IdentityFailure {
    int level = 1;
    int element = 1;
  };
  struct CompositionFailure {
    Surjection outer;  // some stored q
    Surjection inner;  // composed into it (elementary in the default sweep)
    int element = 1;   // witness in carrier(cod(outer))
  };
  std::vector<IdentityFailure> identity_failures;
  std::vector<CompositionFailure> composition_failures;
  bool pass() const { return identity_failures.empty() && composition_failures.empty(); }
};

// Shape check plus functoriality verification; throws BadInput on malformed
// tables and NotAModel when the laws fail.
TruncatedPresheaf make_presheaf(int N, std::vector<int> carrier_sizes,
                                std::unordered_map<Surjection, std::vector<int>, SurjectionHash>
                                    tables);
// Shape check only; lets tests and corpora build law-breaking mutants.
TruncatedPresheaf make_presheaf_unchecked(
    int N, std::vector<int> carrier_sizes,
    std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables);

// Identity tables plus composites against every elementary surjection
// (adjacent transpositions and one-point collapses). Elementary factors
// generate all surjections, so a clean sweep implies full functoriality; set
// `exhaustive` to check every composable pair instead.
PresheafLawReport presheaf_laws(const TruncatedPresheaf& presheaf, bool exhaustive = false);

// The right action of the level's symmetric group through the bijective
// transition maps.
SymmetricAction level_action(const TruncatedPresheaf& presheaf, int level);

// Element of a canonical lifting: an action element paired with a surjection
// onto the action's letters, stored as the least representative of its class.
struct LiftClass {
  int x = 1;
  Surjection q;

  friend bool operator==(const LiftClass&, const LiftClass&) = default;
  friend auto operator<=>(const LiftClass&, const LiftClass&) = default;
};

// Least pair reachable from (x, q) by sliding a group element between the two
// coordinates.
LiftClass canonical_pair(const SymmetricAction& a, int x, const Surjection& q,
                         int cap = kDefaultEnumerationCap);

// Witness moving (x1, q1) onto (x2, q2): the permutation is forced pointwise
// by the surjections, then checked; no group search happens.
std::optional<Permutation> equivalent_pairs(const SymmetricAction& a, int x1,
                                            const Surjection& q1, int x2, const Surjection& q2);

struct CanonicalLifting {
  TruncatedPresheaf presheaf;
  SymmetricAction action;
  std::vector<std::vector<LiftClass>> class_reps;  // per level, sorted
  std::vector<int> eta;                            // action element -> level-m index

  int index_of(int level, const LiftClass& rep) const;
};

CanonicalLifting canonical_lifting(const SymmetricAction& a, int N,
                                   int cap = kDefaultEnumerationCap);

struct LiftingReport {
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

// The three defining conditions of a lifting presentation: eta is an
// equivariant bijection onto level m, every element is reached from level m,
// and two reaches collide exactly when a group element moves one presentation
// onto the other.
LiftingReport verify_lifting_conditions(const TruncatedPresheaf& presheaf,
                                        const SymmetricAction& a, const std::vector<int>& eta,
                                        int cap = kDefaultEnumerationCap);

struct NatTransformation {
  std::vector<std::vector<int>> components;  // per level

  bool operator==(const NatTransformation&) const = default;
};

bool is_natural(const TruncatedPresheaf& source, const TruncatedPresheaf& target,
                const NatTransformation& xi);

// The unique natural map out of a lifting determined by an equivariant map on
// the presenting level. Throws NotEquivariant when mu breaks its premise and
// WitnessConflict when the alleged lifting fails well-definedness.
NatTransformation induced_transformation(const TruncatedPresheaf& lifting,
                                         const SymmetricAction& a, const std::vector<int>& eta,
                                         const TruncatedPresheaf& target,
                                         const std::vector<int>& mu,
                                         int cap = kDefaultEnumerationCap);

// Backtracking over generators (elements outside every non-bijective map's
// image) with naturality propagation; deterministic output order.
std::vector<NatTransformation> enumerate_nat_transformations(
    const TruncatedPresheaf& source, const TruncatedPresheaf& target,
    std::size_t step_budget = 1000000);

struct PresheafUnion {
  TruncatedPresheaf presheaf;
  std::vector<std::vector<int>> summand_of;  // per level, per element (1-based)
  std::vector<std::vector<int>> element_of;  // position within the summand
};

PresheafUnion disjoint_union_presheaves(const std::vector<TruncatedPresheaf>& parts,
                                        int level_when_empty = 1);

// n |-> surjections n ->> m with precomposition as transition action.
TruncatedPresheaf representable_presheaf(int m, int N, int cap = kDefaultEnumerationCap);

}  // namespace s5kit
