#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "s5kit/error.hpp"

namespace s5kit {

inline constexpr int kDefaultEnumerationCap = 6;

// Arrow n ->> m in the category of nonempty finite index sets {1..n} and
// surjective maps.  Values are 1-based throughout.
struct Surjection {
  int dom = 1;
  int cod = 1;
  std::vector<int> map;  // length dom, entries in 1..cod

  int operator()(int i) const { return map[static_cast<std::size_t>(i) - 1]; }
  bool is_bijective() const { return dom == cod; }

  friend bool operator==(const Surjection&, const Surjection&) = default;
  friend auto operator<=>(const Surjection&, const Surjection&) = default;
};

struct SurjectionHash {
  std::size_t operator()(const Surjection& q) const noexcept;
};

// Bijection {1..degree} -> {1..degree}.
struct Permutation {
  int degree = 0;
  std::vector<int> map;

  int operator()(int i) const { return map[static_cast<std::size_t>(i) - 1]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

Surjection make_surjection(std::vector<int> values, int cod);
Surjection identity_surjection(int n);
Permutation make_permutation(std::vector<int> values);
Permutation identity_permutation(int n);
Permutation inverse(const Permutation& p);

Surjection to_surjection(const Permutation& p);
Permutation to_permutation(const Surjection& q);  // requires dom == cod

// compose(q, p)(i) = q(p(i)); requires cod(p) == dom(q).
Surjection compose(const Surjection& q, const Surjection& p);
Permutation compose(const Permutation& a, const Permutation& b);

// All surjections n ->> m in lexicographic order of their image arrays.
std::vector<Surjection> enumerate_surjections(int n, int m);

// All permutations of degree n in lexicographic order; identity comes first.
std::vector<Permutation> enumerate_permutations(int n, int cap = kDefaultEnumerationCap);

// Coequalizer of a parallel pair f, g : k ->> n.  The codomain is labeled
// canonically: classes are numbered by first occurrence while scanning 1..n.
Surjection coequalizer_surj(const Surjection& f, const Surjection& g);

struct SurjectionPushout {
  Surjection left;   // n ->> r, satisfies left o f == right o g
  Surjection right;  // m ->> r
};

// Pushout of f : k ->> n and g : k ->> m, computed as the quotient of the
// disjoint sum n + m by the relation f(i) ~ g(i), labeled by first occurrence
// (n-side first).
SurjectionPushout pushout_surj(const Surjection& f, const Surjection& g);

}  // namespace s5kit
