#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "s5kit/frame.hpp"
#include "s5kit/surjection.hpp"
#include "s5kit/theory.hpp"

namespace s5kit {

using Rng = std::mt19937_64;

// All canonical frames on exactly `worlds` worlds (restricted growth labels).
std::vector<FiniteFrame> enumerate_frames(int worlds);
// All canonical frames with 0..max_worlds worlds.
std::vector<FiniteFrame> enumerate_frames_up_to(int max_worlds);

// Every p-morphism between two fixed frames, by exhaustive filtering.
std::vector<PMorphism> enumerate_pmorphisms(const FiniteFrame& source, const FiniteFrame& target);

Surjection random_surjection(Rng& rng, int dom, int cod);
FiniteFrame random_frame(Rng& rng, int max_worlds, bool allow_empty = false);

// A parallel pair of p-morphisms with bounded cluster data, built through the
// family presentation so that both legs are valid by construction.
std::pair<PMorphism, PMorphism> random_parallel_pair(Rng& rng, int max_cluster_size,
                                                     int max_clusters);

// A single random family morphism onto the given target from a fresh source
// with `source_indices` clusters, each at most `max_source_extra` larger than
// the cluster it covers. An empty target forces an empty source.
FamilyMorphism random_family_morphism(Rng& rng, const ClusterFamily& target, int source_indices,
                                      int max_source_extra);

// A structure tagged with its provenance: the cluster multiset and truncation
// it was built from when genuine, or the verdict each checker is expected to
// reject when deliberately broken.
struct LabeledStructure {
  std::string name;
  TruncatedPresheaf structure;
  bool genuine = true;
  std::vector<int> sizes;
  int truncation = 1;
  std::string expected_t1;
  std::string expected_t2;
  std::string expected_lex;
};

// Every cluster multiset over {1..4} of size at most four, plus every size-five
// multiset over {1..3}, each realized at all truncations max(sizes)..5.
std::vector<LabeledStructure> genuine_structure_corpus();

// Broken structures of four kinds: liftings with no fix-trivial part, random
// single-value redirects, merges of two transition values, and transitions
// glued across summands. Deterministic for a fixed seed.
std::vector<LabeledStructure> mutant_structure_corpus(std::uint64_t seed);

}  // namespace s5kit
