#pragma once

#include <string>
#include <vector>

#include "s5kit/error.hpp"
#include "s5kit/surjection.hpp"

namespace s5kit {

// Right action of the symmetric group on degree m letters, presented by the
// carrier permutations of the two standard generators: the transposition
// (1 2) and the cycle (1 2 ... m). Storage stays O(carrier); arbitrary group
// elements are applied by decomposing them into adjacent transpositions.
// Orientation convention, fixed once: apply(sigma, apply(tau, x)) =
// apply(tau o sigma, x). For m = 1 both generators are the identity.
struct SymmetricAction {
  int m = 1;
  int carrier = 0;
  std::vector<int> gen_swap;
  std::vector<int> gen_cycle;

  bool operator==(const SymmetricAction&) const = default;
};

struct ActionReport {
  std::vector<std::string> failures;
  bool pass() const { return failures.empty(); }
};

struct OrbitDecomposition {
  std::vector<int> orbit_of;  // 1-based ids in order of least member
  int orbit_count = 0;
};

// One orbit of a faithful action, laid out along the canonical action:
// elements[k] is the image of the base point under the k-th permutation in
// lexicographic order, so position lookup inverts the intertwiner.
struct CanonicalOrbit {
  int base = 1;
  std::vector<int> elements;
};

struct FaithfulSplit {
  SymmetricAction faithful;
  SymmetricAction rest;
  std::vector<int> faithful_elements;  // original labels, ascending
  std::vector<int> rest_elements;
};

// Shape validation only (degree, sizes, bijectivity); whether the tables
// assemble into a genuine action is validate_action's job.
SymmetricAction make_action(int m, int carrier, std::vector<int> gen_swap,
                            std::vector<int> gen_cycle);

// Tabulates all m! permutations from the generators and verifies that every
// product through them yields a consistent carrier table; consistency along
// all generator edges is equivalent to both action axioms plus the group
// presentation holding.
ActionReport validate_action(const SymmetricAction& a, int cap = kDefaultEnumerationCap);

// Carrier tables for every group element, aligned with
// enumerate_permutations(m). Throws NotEquivariant on inconsistent input.
std::vector<std::vector<int>> tabulate_action(const SymmetricAction& a,
                                              int cap = kDefaultEnumerationCap);

int apply(const SymmetricAction& a, const Permutation& sigma, int x);

OrbitDecomposition orbits(const SymmetricAction& a);

bool fix_is_trivial(const SymmetricAction& a, int x, int cap = kDefaultEnumerationCap);
std::vector<bool> fix_trivial_elements(const SymmetricAction& a,
                                       int cap = kDefaultEnumerationCap);
bool is_faithful(const SymmetricAction& a, int cap = kDefaultEnumerationCap);
bool is_transitive(const SymmetricAction& a);

// The group acting on itself by right composition, carrier indexed
// lexicographically (identity first).
SymmetricAction canonical_action(int m, int cap = kDefaultEnumerationCap);

// Splits off the elements with trivial stabilizer; both halves are closed
// under the action because stabilizers are constant along orbits.
FaithfulSplit faithful_part(const SymmetricAction& a, int cap = kDefaultEnumerationCap);

// Writes a faithful action as a disjoint union of copies of the canonical
// one, one orbit at a time, base point = least orbit element.
std::vector<CanonicalOrbit> decompose_faithful(const SymmetricAction& a,
                                               int cap = kDefaultEnumerationCap);

SymmetricAction action_disjoint_union(const SymmetricAction& a, const SymmetricAction& b);
SymmetricAction relabel_action(const SymmetricAction& a, const Permutation& relabel);

}  // namespace s5kit
