#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "s5kit/frame.hpp"
#include "s5kit/lifting.hpp"

namespace s5kit {

// A truncated presheaf read as a multi-sorted structure: sort n is the level-n
// carrier and each surjection symbol f: n ->> m acts by its stored table
// M(f): M_m -> M_n.
using Structure = TruncatedPresheaf;

// A tuple naming one instance of an axiom: the sorts quantified over, the
// element ids, and the surjection symbols involved. `re_evaluate` replays the
// instance against a structure.
struct AxiomInstance {
  std::vector<int> sorts;
  std::vector<int> elements;
  std::vector<Surjection> surjections;
  std::string note;
};

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::vector<AxiomInstance> witnesses;
  std::optional<AxiomInstance> counterexample;
};

struct AxiomReport {
  std::string scope;  // which sorts the quantifiers ranged over
  std::vector<AxiomVerdict> verdicts;

  bool pass() const;
  const AxiomVerdict* find(const std::string& axiom) const;
};

// True when only the identity of S_sort fixes the element.
bool check_fix_trivial(const Structure& M, int sort, int element,
                       int cap = kDefaultEnumerationCap);
std::vector<int> fix_trivial_sort_elements(const Structure& M, int sort,
                                           int cap = kDefaultEnumerationCap);

// A presentation of an element from a fix-trivial one below it.
struct PresentingWitness {
  Surjection f;  // element's sort onto the presenting sort
  int y = 1;     // fix-trivial element with M(f)(y) = element
};
std::vector<PresentingWitness> presenting_witnesses(const Structure& M, int sort, int element,
                                                    int cap = kDefaultEnumerationCap);

// Verdicts: functoriality, faithful-cover (every element is presented by a
// fix-trivial one), collision-witness (two fix-trivial presentations of the
// same element are linked by a bijection), injectivity (derived: symbols act
// injectively).
AxiomReport check_T1(const Structure& M, int cap = kDefaultEnumerationCap);

// Verdicts: functoriality, unique-presenting-level (exactly one sort admits a
// fix-trivial presentation), collision-criterion (collisions of presentations
// along two surjections are witnessed). The criterion quantifies over
// fix-trivial sources by default; `collision_all_elements` widens it to every
// element of the presenting sort.
AxiomReport check_T2(const Structure& M, int cap = kDefaultEnumerationCap,
                     bool collision_all_elements = false);

// Verdicts: functoriality, equalizer-injectivity and equalizer-image (images
// of coequalizer maps are exactly the equalized elements), and
// pullback-injectivity and pullback-covering (pushout squares map to
// pullbacks of finite sets).
AxiomReport check_lex_preservation(const Structure& M, int cap = kDefaultEnumerationCap);

// Replays an instance of the named axiom; returns false when the tuple indeed
// falsifies it. Every counterexample the checkers emit re-evaluates to false.
bool re_evaluate(const Structure& M, const std::string& axiom, const AxiomInstance& instance,
                 int cap = kDefaultEnumerationCap);

struct Classification {
  std::map<int, int> cluster_counts;  // cluster size -> number of clusters
  FiniteFrame frame;
};

// Counts orbits of the fix-trivial part of every sort; the frame realizes the
// counts as clusters. Throws NotAModel when `require_model` is set and the
// structure fails check_T2, NonIntegralOrbit when a fix-trivial part is not a
// whole number of orbits.
Classification classify_model(const Structure& M, int cap = kDefaultEnumerationCap,
                              bool require_model = true);

// Disjoint union of canonical liftings, one per cluster size.
Structure model_from_frame(const ClusterFamily& sizes, int N, int cap = kDefaultEnumerationCap);

}  // namespace s5kit
