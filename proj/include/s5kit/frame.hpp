#pragma once

#include <compare>
#include <vector>

#include "s5kit/surjection.hpp"

namespace s5kit {

// A finite frame whose accessibility relation is an equivalence: stored as
// the partition of {1..worlds} into blocks (clusters).  Block ids are
// contiguous, 1..B, numbered by first occurrence.  The empty frame is legal.
struct FiniteFrame {
  int worlds = 0;
  std::vector<int> block;  // length worlds

  int block_count() const;
  int block_of(int w) const { return block[static_cast<std::size_t>(w) - 1]; }
  bool related(int v, int w) const { return block_of(v) == block_of(w); }

  friend bool operator==(const FiniteFrame&, const FiniteFrame&) = default;
  friend auto operator<=>(const FiniteFrame&, const FiniteFrame&) = default;
};

// A map of frames sending each block onto a block of the target.
struct PMorphism {
  FiniteFrame source;
  FiniteFrame target;
  std::vector<int> map;  // length source.worlds

  int operator()(int w) const { return map[static_cast<std::size_t>(w) - 1]; }

  friend bool operator==(const PMorphism&, const PMorphism&) = default;
};

// Object of the equivalent family presentation: an index set {1..sizes.size()}
// together with one nonempty cluster size per index.
struct ClusterFamily {
  std::vector<int> sizes;

  int index_count() const { return static_cast<int>(sizes.size()); }
  int size_at(int i) const { return sizes[static_cast<std::size_t>(i) - 1]; }

  friend bool operator==(const ClusterFamily&, const ClusterFamily&) = default;
};

// Morphism of families: a reindexing map plus one component surjection per
// source index, landing in the indicated target cluster.
struct FamilyMorphism {
  ClusterFamily source;
  ClusterFamily target;
  std::vector<int> index_map;           // length source.index_count()
  std::vector<Surjection> components;   // components[i-1] : sizes[i-1] ->> target size

  int index_of(int i) const { return index_map[static_cast<std::size_t>(i) - 1]; }
  const Surjection& component(int i) const { return components[static_cast<std::size_t>(i) - 1]; }

  friend bool operator==(const FamilyMorphism&, const FamilyMorphism&) = default;
};

FiniteFrame make_frame(int worlds, std::vector<int> blocks);
ClusterFamily make_cluster_family(std::vector<int> sizes);

PMorphism make_pmorphism(const FiniteFrame& source, const FiniteFrame& target,
                         std::vector<int> map);
PMorphism identity_pmorphism(const FiniteFrame& f);
PMorphism compose(const PMorphism& g, const PMorphism& f);

FamilyMorphism make_family_morphism(const ClusterFamily& source, const ClusterFamily& target,
                                    std::vector<int> index_map,
                                    std::vector<Surjection> components);
FamilyMorphism identity_family_morphism(const ClusterFamily& f);
FamilyMorphism compose(const FamilyMorphism& g, const FamilyMorphism& f);

// Worlds of each summand keep their order; blocks are offset summand by
// summand, so the result is canonically labeled.
struct FrameCoproduct {
  FiniteFrame frame;
  std::vector<PMorphism> injections;
};
FrameCoproduct frame_coproduct(const std::vector<FiniteFrame>& parts);

// Coequalizer of parallel p-morphisms: quotient the target by the closure of
// { f(w) ~ g(w) }, then relate two classes when some block of the original
// target meets both.  Quotient worlds are numbered by least original world.
struct FrameCoequalizer {
  FiniteFrame frame;
  PMorphism projection;
};
FrameCoequalizer frame_coequalizer(const PMorphism& f, const PMorphism& g);

struct FramePushout {
  FiniteFrame frame;
  PMorphism left;
  PMorphism right;
};
FramePushout frame_pushout(const PMorphism& f, const PMorphism& g);

// Frame <-> family dictionary.  from_cluster_family lays clusters out
// contiguously in index order.
ClusterFamily to_cluster_family(const FiniteFrame& f);
FiniteFrame from_cluster_family(const ClusterFamily& c);

FamilyMorphism pmorphism_to_family(const PMorphism& f);
PMorphism family_to_pmorphism(const FamilyMorphism& m);

// Coequalizer computed entirely on the family side: first merge indices that
// the two index maps distinguish (pushing out the component pair each time),
// then coequalize the remaining parallel components fibrewise.
struct FamilyCoequalizer {
  ClusterFamily family;
  FamilyMorphism projection;
};
FamilyCoequalizer family_coequalizer(const FamilyMorphism& f, const FamilyMorphism& g);

// Multiset of cluster sizes, ascending.  Two frames are isomorphic exactly
// when their signatures agree.
std::vector<int> cluster_signature(const FiniteFrame& f);

}  // namespace s5kit
