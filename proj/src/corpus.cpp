#include "s5kit/corpus.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

namespace s5kit {

std::vector<FiniteFrame> enumerate_frames(int worlds) {
  std::vector<FiniteFrame> out;
  std::vector<int> acc;
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == worlds) {
      out.push_back(make_frame(worlds, acc));
      return;
    }
    for (int b = 1; b <= max_used + 1; ++b) {
      acc.push_back(b);
      self(self, pos + 1, std::max(max_used, b));
      acc.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<FiniteFrame> enumerate_frames_up_to(int max_worlds) {
  std::vector<FiniteFrame> out;
  for (int n = 0; n <= max_worlds; ++n) {
    auto batch = enumerate_frames(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<PMorphism> enumerate_pmorphisms(const FiniteFrame& source, const FiniteFrame& target) {
  std::vector<PMorphism> out;
  if (source.worlds == 0) {
    out.push_back(make_pmorphism(source, target, {}));
    return out;
  }
  if (target.worlds == 0) return out;
  std::vector<int> acc(static_cast<std::size_t>(source.worlds), 1);
  for (;;) {
    try {
      out.push_back(make_pmorphism(source, target, acc));
    } catch (const Error&) {
    }
    int i = 0;
    while (i < source.worlds && acc[static_cast<std::size_t>(i)] == target.worlds) {
      acc[static_cast<std::size_t>(i)] = 1;
      ++i;
    }
    if (i == source.worlds) break;
    ++acc[static_cast<std::size_t>(i)];
  }
  return out;
}

Surjection random_surjection(Rng& rng, int dom, int cod) {
  std::vector<int> values(static_cast<std::size_t>(dom));
  std::uniform_int_distribution<int> val(1, cod);
  for (auto& v : values) v = val(rng);
  // Force surjectivity by planting each codomain value at a distinct spot.
  std::vector<int> positions(static_cast<std::size_t>(dom));
  for (int i = 0; i < dom; ++i) positions[static_cast<std::size_t>(i)] = i;
  std::shuffle(positions.begin(), positions.end(), rng);
  for (int v = 1; v <= cod; ++v)
    values[static_cast<std::size_t>(positions[static_cast<std::size_t>(v) - 1])] = v;
  return make_surjection(std::move(values), cod);
}

FiniteFrame random_frame(Rng& rng, int max_worlds, bool allow_empty) {
  std::uniform_int_distribution<int> size_dist(allow_empty ? 0 : 1, max_worlds);
  const int n = size_dist(rng);
  std::vector<int> blocks;
  int used = 0;
  for (int w = 0; w < n; ++w) {
    std::uniform_int_distribution<int> b(1, used + 1);
    const int v = b(rng);
    used = std::max(used, v);
    blocks.push_back(v);
  }
  return make_frame(n, std::move(blocks));
}

std::pair<PMorphism, PMorphism> random_parallel_pair(Rng& rng, int max_cluster_size,
                                                     int max_clusters) {
  std::uniform_int_distribution<int> count(1, max_clusters);
  std::uniform_int_distribution<int> cluster(1, max_cluster_size);

  const int j_count = count(rng);
  std::vector<int> target_sizes;
  for (int j = 0; j < j_count; ++j) target_sizes.push_back(cluster(rng));
  const ClusterFamily target = make_cluster_family(std::move(target_sizes));

  const int i_count = count(rng);
  std::uniform_int_distribution<int> pick(1, j_count);
  std::uniform_int_distribution<int> extra(0, 2);
  std::vector<int> src_sizes, fi, gi;
  std::vector<Surjection> fc, gc;
  for (int i = 0; i < i_count; ++i) {
    const int a = pick(rng);
    const int b = pick(rng);
    const int dom = std::max(target.size_at(a), target.size_at(b)) + extra(rng);
    src_sizes.push_back(dom);
    fi.push_back(a);
    gi.push_back(b);
    fc.push_back(random_surjection(rng, dom, target.size_at(a)));
    gc.push_back(random_surjection(rng, dom, target.size_at(b)));
  }
  const ClusterFamily source = make_cluster_family(std::move(src_sizes));
  const FamilyMorphism f = make_family_morphism(source, target, std::move(fi), std::move(fc));
  const FamilyMorphism g = make_family_morphism(source, target, std::move(gi), std::move(gc));
  return {family_to_pmorphism(f), family_to_pmorphism(g)};
}

FamilyMorphism random_family_morphism(Rng& rng, const ClusterFamily& target, int source_indices,
                                      int max_source_extra) {
  if (target.index_count() == 0)
    return make_family_morphism(make_cluster_family({}), target, {}, {});
  std::uniform_int_distribution<int> pick(1, target.index_count());
  std::uniform_int_distribution<int> extra(0, max_source_extra);
  std::vector<int> src_sizes, index_map;
  std::vector<Surjection> components;
  for (int i = 0; i < source_indices; ++i) {
    const int j = pick(rng);
    const int dom = target.size_at(j) + extra(rng);
    src_sizes.push_back(dom);
    index_map.push_back(j);
    components.push_back(random_surjection(rng, dom, target.size_at(j)));
  }
  const ClusterFamily source = make_cluster_family(std::move(src_sizes));
  return make_family_morphism(source, target, std::move(index_map), std::move(components));
}

namespace {

std::string structure_name(const char* kind, const std::vector<int>& sizes, int N) {
  std::string out = kind;
  out += " {";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(sizes[i]);
  }
  out += "}@N=" + std::to_string(N);
  return out;
}

// Nondecreasing sequences of the given length over {1..top}.
void collect_multisets(int top, int length, int least, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == length) {
    out.push_back(acc);
    return;
  }
  for (int v = least; v <= top; ++v) {
    acc.push_back(v);
    collect_multisets(top, length, v, acc, out);
    acc.pop_back();
  }
}

TruncatedPresheaf union_from_cache(const std::vector<int>& sizes, int N,
                                   std::map<std::pair<int, int>, TruncatedPresheaf>& cache) {
  std::vector<TruncatedPresheaf> parts;
  for (int s : sizes) {
    auto it = cache.find({s, N});
    if (it == cache.end())
      it = cache.emplace(std::make_pair(s, N), canonical_lifting(canonical_action(s), N).presheaf)
               .first;
    parts.push_back(it->second);
  }
  return disjoint_union_presheaves(parts, N).presheaf;
}

TruncatedPresheaf redirect_value(const TruncatedPresheaf& p, const Surjection& q, int slot,
                                 int value) {
  auto tables = p.tables;
  tables[q][static_cast<std::size_t>(slot) - 1] = value;
  return make_presheaf_unchecked(p.N, p.carrier_sizes, std::move(tables));
}

SymmetricAction trivial_action(int m, int points) {
  std::vector<int> id(static_cast<std::size_t>(points));
  for (int i = 1; i <= points; ++i) id[static_cast<std::size_t>(i) - 1] = i;
  return make_action(m, points, id, std::vector<int>(id));
}

Surjection collapse_first_two(int m) {
  std::vector<int> map{1};
  for (int i = 1; i <= m; ++i) map.push_back(i);
  return make_surjection(std::move(map), m);
}

Surjection all_ones(int dom) { return make_surjection(std::vector<int>(static_cast<std::size_t>(dom), 1), 1); }

}  // namespace

std::vector<LabeledStructure> genuine_structure_corpus() {
  std::vector<std::vector<int>> multisets;
  std::vector<int> acc;
  for (int length = 1; length <= 4; ++length) collect_multisets(4, length, 1, acc, multisets);
  collect_multisets(3, 5, 1, acc, multisets);

  std::map<std::pair<int, int>, TruncatedPresheaf> cache;
  std::vector<LabeledStructure> out;
  for (const auto& sizes : multisets) {
    const int top = *std::max_element(sizes.begin(), sizes.end());
    for (int N = top; N <= 5; ++N)
      out.push_back({structure_name("genuine", sizes, N), union_from_cache(sizes, N, cache), true,
                     sizes, N, "", "", ""});
  }
  return out;
}

std::vector<LabeledStructure> mutant_structure_corpus(std::uint64_t seed) {
  std::vector<LabeledStructure> out;
  Rng rng(seed);

  // Liftings of trivial actions: valid functors whose elements all have a
  // nontrivial fixer, so nothing is presented at all.
  const std::vector<std::pair<int, int>> trivial_shapes = {{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}};
  for (const auto& [m, points] : trivial_shapes)
    for (int N = m; N <= 5; ++N)
      out.push_back({structure_name("trivial-lift", {m, points}, N),
                     canonical_lifting(trivial_action(m, points), N).presheaf, false, {}, N,
                     "faithful-cover", "unique-presenting-level", "equalizer-image"});
  for (int N = 2; N <= 4; ++N)
    out.push_back({structure_name("trivial-lift-mixed", {2, 1}, N),
                   disjoint_union_presheaves({representable_presheaf(2, N),
                                              canonical_lifting(trivial_action(2, 1), N).presheaf},
                                             N)
                       .presheaf,
                   false, {}, N, "faithful-cover", "unique-presenting-level", "equalizer-image"});

  // Single random redirects that break the functor laws.
  const std::vector<std::pair<std::vector<int>, int>> redirect_bases = {
      {{2}, 3},    {{2}, 4},    {{2}, 5},       {{3}, 3},    {{3}, 4},
      {{1, 2}, 3}, {{1, 2}, 4}, {{2, 2}, 3},    {{2, 2}, 4}, {{1, 1, 2}, 3},
      {{2, 3}, 4}, {{1, 2, 2}, 4}, {{3, 3}, 4}, {{1, 1}, 3}};
  for (const auto& [sizes, N] : redirect_bases) {
    const auto base = model_from_frame(make_cluster_family(sizes), N);
    std::vector<Surjection> keys;
    for (const auto& [q, tab] : base.tables)
      if (!tab.empty() && base.carrier_size(q.dom) >= 2) keys.push_back(q);
    std::sort(keys.begin(), keys.end());
    std::uniform_int_distribution<std::size_t> pick_key(0, keys.size() - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
      const Surjection& q = keys[pick_key(rng)];
      std::uniform_int_distribution<int> pick_slot(1, base.carrier_size(q.cod));
      std::uniform_int_distribution<int> pick_value(1, base.carrier_size(q.dom));
      const int slot = pick_slot(rng);
      const int value = pick_value(rng);
      if (value == base.map_at(q, slot)) continue;
      auto mutant = redirect_value(base, q, slot, value);
      if (presheaf_laws(mutant).pass()) continue;
      out.push_back({structure_name("redirect", sizes, N), std::move(mutant), false, {}, N,
                     "functoriality", "functoriality", "functoriality"});
      break;
    }
  }

  // Merging two transition values of fix-trivial sources: collisions without
  // a linking bijection. Truncated at least one level above the merged
  // symbol so a pushout square reaches it on both legs.
  const std::vector<std::tuple<std::vector<int>, int, int>> merge_bases = {
      {{2}, 4, 2},    {{2}, 5, 2},    {{3}, 5, 3},    {{1, 2}, 4, 2},
      {{1, 2}, 5, 2}, {{2, 2}, 4, 2}, {{2, 2}, 5, 2}, {{2, 3}, 5, 2}};
  for (const auto& [sizes, N, level] : merge_bases) {
    const auto base = model_from_frame(make_cluster_family(sizes), N);
    const auto fix = fix_trivial_sort_elements(base, level);
    const Surjection q0 = collapse_first_two(level);
    out.push_back({structure_name("merge", sizes, N),
                   redirect_value(base, q0, fix[1], base.map_at(q0, fix[0])), false, {}, N,
                   "collision-witness", "collision-criterion", "pullback-injectivity"});
  }

  // Gluing the bottom transition of one summand into another summand: the
  // target acquires a second presenting sort, the source loses its cover.
  for (int j = 2; j <= 4; ++j)
    for (int N = j; N <= 5; ++N)
      out.push_back({structure_name("glue", {1, j}, N),
                     redirect_value(model_from_frame(make_cluster_family({1, j}), N), all_ones(j),
                                    1, 2),
                     false, {}, N, "faithful-cover", "unique-presenting-level", "equalizer-image"});
  for (int N = 2; N <= 4; ++N)
    out.push_back({structure_name("glue", {1, 2, 2}, N),
                   redirect_value(model_from_frame(make_cluster_family({1, 2, 2}), N), all_ones(2),
                                  1, 2),
                   false, {}, N, "faithful-cover", "unique-presenting-level", "equalizer-image"});

  return out;
}

}  // namespace s5kit
