#include "s5kit/frame.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "s5kit/detail/union_find.hpp"

namespace s5kit {

int FiniteFrame::block_count() const {
  int b = 0;
  for (int v : block) b = std::max(b, v);
  return b;
}

FiniteFrame make_frame(int worlds, std::vector<int> blocks) {
  if (worlds < 0 || static_cast<int>(blocks.size()) != worlds)
    throw Error(ErrorCode::BadInput, "block array length must equal world count");
  int seen = 0;
  for (int b : blocks) {
    if (b < 1 || b > seen + 1)
      throw Error(ErrorCode::BadInput,
                  "block ids must be contiguous and numbered by first occurrence");
    seen = std::max(seen, b);
  }
  FiniteFrame f;
  f.worlds = worlds;
  f.block = std::move(blocks);
  return f;
}

ClusterFamily make_cluster_family(std::vector<int> sizes) {
  for (int s : sizes)
    if (s < 1) throw Error(ErrorCode::BadInput, "cluster sizes must be positive");
  ClusterFamily c;
  c.sizes = std::move(sizes);
  return c;
}

namespace {

std::vector<std::vector<int>> blocks_as_world_lists(const FiniteFrame& f) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(f.block_count()));
  for (int w = 1; w <= f.worlds; ++w)
    out[static_cast<std::size_t>(f.block_of(w)) - 1].push_back(w);
  return out;
}

}  // namespace

PMorphism make_pmorphism(const FiniteFrame& source, const FiniteFrame& target,
                         std::vector<int> map) {
  if (static_cast<int>(map.size()) != source.worlds)
    throw Error(ErrorCode::BadInput, "morphism table length must equal source world count");
  for (int v : map)
    if (v < 1 || v > target.worlds)
      throw Error(ErrorCode::OutOfRange, "world " + std::to_string(v) + " not in target");

  const auto source_blocks = blocks_as_world_lists(source);
  for (const auto& cluster : source_blocks) {
    const int rep = map[static_cast<std::size_t>(cluster.front()) - 1];
    const int target_block = target.block_of(rep);
    std::vector<bool> hit(static_cast<std::size_t>(target.worlds), false);
    for (int w : cluster) {
      const int v = map[static_cast<std::size_t>(w) - 1];
      if (target.block_of(v) != target_block)
        throw Error(ErrorCode::NotIntoOneClass,
                    "world " + std::to_string(w) + " leaves the class of its block image");
      hit[static_cast<std::size_t>(v) - 1] = true;
    }
    for (int v = 1; v <= target.worlds; ++v)
      if (target.block_of(v) == target_block && !hit[static_cast<std::size_t>(v) - 1])
        throw Error(ErrorCode::NotOnto,
                    "block of world " + std::to_string(cluster.front()) +
                        " misses target world " + std::to_string(v));
  }

  PMorphism f;
  f.source = source;
  f.target = target;
  f.map = std::move(map);
  return f;
}

PMorphism identity_pmorphism(const FiniteFrame& f) {
  std::vector<int> map(static_cast<std::size_t>(f.worlds));
  for (int w = 1; w <= f.worlds; ++w) map[static_cast<std::size_t>(w) - 1] = w;
  return make_pmorphism(f, f, std::move(map));
}

PMorphism compose(const PMorphism& g, const PMorphism& f) {
  if (f.target != g.source)
    throw Error(ErrorCode::SortMismatch, "p-morphisms do not compose");
  std::vector<int> map(static_cast<std::size_t>(f.source.worlds));
  for (int w = 1; w <= f.source.worlds; ++w) map[static_cast<std::size_t>(w) - 1] = g(f(w));
  return make_pmorphism(f.source, g.target, std::move(map));
}

FamilyMorphism make_family_morphism(const ClusterFamily& source, const ClusterFamily& target,
                                    std::vector<int> index_map,
                                    std::vector<Surjection> components) {
  const int n = source.index_count();
  if (static_cast<int>(index_map.size()) != n || static_cast<int>(components.size()) != n)
    throw Error(ErrorCode::BadInput, "family morphism arity mismatch");
  for (int i = 1; i <= n; ++i) {
    const int j = index_map[static_cast<std::size_t>(i) - 1];
    if (j < 1 || j > target.index_count())
      throw Error(ErrorCode::OutOfRange, "index image " + std::to_string(j) + " out of range");
    const Surjection& c = components[static_cast<std::size_t>(i) - 1];
    if (c.dom != source.size_at(i) || c.cod != target.size_at(j))
      throw Error(ErrorCode::SortMismatch,
                  "component " + std::to_string(i) + " has the wrong type");
  }
  FamilyMorphism m;
  m.source = source;
  m.target = target;
  m.index_map = std::move(index_map);
  m.components = std::move(components);
  return m;
}

FamilyMorphism identity_family_morphism(const ClusterFamily& f) {
  std::vector<int> idx(static_cast<std::size_t>(f.index_count()));
  std::vector<Surjection> comps;
  comps.reserve(idx.size());
  for (int i = 1; i <= f.index_count(); ++i) {
    idx[static_cast<std::size_t>(i) - 1] = i;
    comps.push_back(identity_surjection(f.size_at(i)));
  }
  return make_family_morphism(f, f, std::move(idx), std::move(comps));
}

FamilyMorphism compose(const FamilyMorphism& g, const FamilyMorphism& f) {
  if (f.target != g.source)
    throw Error(ErrorCode::SortMismatch, "family morphisms do not compose");
  std::vector<int> idx;
  std::vector<Surjection> comps;
  for (int i = 1; i <= f.source.index_count(); ++i) {
    idx.push_back(g.index_of(f.index_of(i)));
    comps.push_back(compose(g.component(f.index_of(i)), f.component(i)));
  }
  return make_family_morphism(f.source, g.target, std::move(idx), std::move(comps));
}

FrameCoproduct frame_coproduct(const std::vector<FiniteFrame>& parts) {
  FiniteFrame total;
  int world_offset = 0;
  int block_offset = 0;
  for (const auto& p : parts) {
    for (int w = 1; w <= p.worlds; ++w) total.block.push_back(p.block_of(w) + block_offset);
    world_offset += p.worlds;
    block_offset += p.block_count();
  }
  total.worlds = world_offset;

  FrameCoproduct out;
  out.frame = std::move(total);
  int offset = 0;
  for (const auto& p : parts) {
    std::vector<int> map(static_cast<std::size_t>(p.worlds));
    for (int w = 1; w <= p.worlds; ++w) map[static_cast<std::size_t>(w) - 1] = offset + w;
    out.injections.push_back(make_pmorphism(p, out.frame, std::move(map)));
    offset += p.worlds;
  }
  return out;
}

FrameCoequalizer frame_coequalizer(const PMorphism& f, const PMorphism& g) {
  if (f.source != g.source || f.target != g.target)
    throw Error(ErrorCode::NotParallel, "coequalizer needs a parallel pair");
  const FiniteFrame& tgt = f.target;
  const int n = tgt.worlds;

  detail::UnionFind classes(n);
  for (int w = 1; w <= f.source.worlds; ++w) classes.unite(f(w) - 1, g(w) - 1);

  // Number classes by their least member.
  std::vector<int> class_id(static_cast<std::size_t>(n), 0);
  int class_count = 0;
  for (int w = 0; w < n; ++w) {
    const int root = classes.find(w);
    if (class_id[static_cast<std::size_t>(root)] == 0)
      class_id[static_cast<std::size_t>(root)] = ++class_count;
    class_id[static_cast<std::size_t>(w)] = class_id[static_cast<std::size_t>(root)];
  }

  // Two classes are related when a block of the target meets both.
  detail::UnionFind rel(class_count);
  std::map<int, int> block_witness;  // block id -> some class meeting it
  for (int w = 1; w <= n; ++w) {
    const int c = class_id[static_cast<std::size_t>(w) - 1] - 1;
    auto [it, inserted] = block_witness.try_emplace(tgt.block_of(w), c);
    if (!inserted) rel.unite(it->second, c);
  }
  std::vector<int> block_label(static_cast<std::size_t>(class_count), 0);
  int block_count = 0;
  std::vector<int> blocks(static_cast<std::size_t>(class_count));
  for (int c = 0; c < class_count; ++c) {
    const int root = rel.find(c);
    if (block_label[static_cast<std::size_t>(root)] == 0)
      block_label[static_cast<std::size_t>(root)] = ++block_count;
    blocks[static_cast<std::size_t>(c)] = block_label[static_cast<std::size_t>(root)];
  }

  FrameCoequalizer out;
  out.frame = make_frame(class_count, std::move(blocks));
  std::vector<int> proj(static_cast<std::size_t>(n));
  for (int w = 1; w <= n; ++w) proj[static_cast<std::size_t>(w) - 1] = class_id[static_cast<std::size_t>(w) - 1];
  out.projection = make_pmorphism(tgt, out.frame, std::move(proj));
  return out;
}

FramePushout frame_pushout(const PMorphism& f, const PMorphism& g) {
  if (f.source != g.source)
    throw Error(ErrorCode::SourceMismatch, "pushout legs must share their source");
  FrameCoproduct cp = frame_coproduct({f.target, g.target});
  PMorphism left_in = compose(cp.injections[0], f);
  PMorphism right_in = compose(cp.injections[1], g);
  FrameCoequalizer ce = frame_coequalizer(left_in, right_in);
  FramePushout out;
  out.frame = ce.frame;
  out.left = compose(ce.projection, cp.injections[0]);
  out.right = compose(ce.projection, cp.injections[1]);
  return out;
}

ClusterFamily to_cluster_family(const FiniteFrame& f) {
  std::vector<int> sizes(static_cast<std::size_t>(f.block_count()), 0);
  for (int w = 1; w <= f.worlds; ++w) ++sizes[static_cast<std::size_t>(f.block_of(w)) - 1];
  return make_cluster_family(std::move(sizes));
}

FiniteFrame from_cluster_family(const ClusterFamily& c) {
  std::vector<int> blocks;
  for (int i = 1; i <= c.index_count(); ++i)
    blocks.insert(blocks.end(), static_cast<std::size_t>(c.size_at(i)), i);
  const int worlds = static_cast<int>(blocks.size());
  return make_frame(worlds, std::move(blocks));
}

FamilyMorphism pmorphism_to_family(const PMorphism& f) {
  const auto src_blocks = blocks_as_world_lists(f.source);
  const auto tgt_blocks = blocks_as_world_lists(f.target);

  // Position of each target world inside its block (1-based, ascending).
  std::vector<int> pos(static_cast<std::size_t>(f.target.worlds), 0);
  for (const auto& cluster : tgt_blocks)
    for (std::size_t k = 0; k < cluster.size(); ++k)
      pos[static_cast<std::size_t>(cluster[k]) - 1] = static_cast<int>(k) + 1;

  std::vector<int> idx;
  std::vector<Surjection> comps;
  for (const auto& cluster : src_blocks) {
    const int j = f.target.block_of(f(cluster.front()));
    idx.push_back(j);
    std::vector<int> values;
    values.reserve(cluster.size());
    for (int w : cluster) values.push_back(pos[static_cast<std::size_t>(f(w)) - 1]);
    comps.push_back(make_surjection(std::move(values),
                                    static_cast<int>(tgt_blocks[static_cast<std::size_t>(j) - 1].size())));
  }
  return make_family_morphism(to_cluster_family(f.source), to_cluster_family(f.target),
                              std::move(idx), std::move(comps));
}

PMorphism family_to_pmorphism(const FamilyMorphism& m) {
  const FiniteFrame src = from_cluster_family(m.source);
  const FiniteFrame tgt = from_cluster_family(m.target);
  std::vector<int> tgt_offset(static_cast<std::size_t>(m.target.index_count()) + 1, 0);
  for (int j = 1; j <= m.target.index_count(); ++j)
    tgt_offset[static_cast<std::size_t>(j)] =
        tgt_offset[static_cast<std::size_t>(j) - 1] + m.target.size_at(j);

  std::vector<int> map;
  for (int i = 1; i <= m.source.index_count(); ++i) {
    const int j = m.index_of(i);
    const Surjection& c = m.component(i);
    for (int t = 1; t <= m.source.size_at(i); ++t)
      map.push_back(tgt_offset[static_cast<std::size_t>(j) - 1] + c(t));
  }
  return make_pmorphism(src, tgt, std::move(map));
}

FamilyCoequalizer family_coequalizer(const FamilyMorphism& f0, const FamilyMorphism& g0) {
  if (f0.source != g0.source || f0.target != g0.target)
    throw Error(ErrorCode::NotParallel, "coequalizer needs a parallel pair");

  FamilyMorphism f = f0;
  FamilyMorphism g = g0;
  FamilyMorphism proj = identity_family_morphism(f0.target);

  // Phase 1: while the index maps disagree somewhere, merge the two target
  // indices via a pushout of the component pair and push everything forward.
  for (;;) {
    int pivot = 0;
    for (int i = 1; i <= f.source.index_count(); ++i)
      if (f.index_of(i) != g.index_of(i)) {
        pivot = i;
        break;
      }
    if (pivot == 0) break;

    const int ja = f.index_of(pivot);
    const int jb = g.index_of(pivot);
    SurjectionPushout po = pushout_surj(f.component(pivot), g.component(pivot));

    // New index set: drop max(ja, jb), renumber by first occurrence.
    const int lo = std::min(ja, jb);
    const int hi = std::max(ja, jb);
    const ClusterFamily& old = f.target;
    std::vector<int> new_sizes;
    std::vector<int> reindex(static_cast<std::size_t>(old.index_count()) + 1, 0);
    for (int j = 1; j <= old.index_count(); ++j) {
      if (j == hi) continue;
      new_sizes.push_back(j == lo ? po.left.cod : old.size_at(j));
      reindex[static_cast<std::size_t>(j)] = static_cast<int>(new_sizes.size());
    }
    reindex[static_cast<std::size_t>(hi)] = reindex[static_cast<std::size_t>(lo)];
    ClusterFamily merged = make_cluster_family(std::move(new_sizes));

    std::vector<int> step_idx;
    std::vector<Surjection> step_comps;
    const Surjection& onto_lo = (ja == lo) ? po.left : po.right;
    const Surjection& onto_hi = (ja == lo) ? po.right : po.left;
    for (int j = 1; j <= old.index_count(); ++j) {
      step_idx.push_back(reindex[static_cast<std::size_t>(j)]);
      if (j == lo)
        step_comps.push_back(onto_lo);
      else if (j == hi)
        step_comps.push_back(onto_hi);
      else
        step_comps.push_back(identity_surjection(old.size_at(j)));
    }
    FamilyMorphism step = make_family_morphism(old, merged, std::move(step_idx), std::move(step_comps));
    f = compose(step, f);
    g = compose(step, g);
    proj = compose(step, proj);
  }

  // Phase 2: the index maps now agree; coequalize the parallel component
  // pairs over each target index in turn.
  const ClusterFamily mid = f.target;
  std::vector<Surjection> collapse;
  collapse.reserve(static_cast<std::size_t>(mid.index_count()));
  for (int j = 1; j <= mid.index_count(); ++j) collapse.push_back(identity_surjection(mid.size_at(j)));
  for (int i = 1; i <= f.source.index_count(); ++i) {
    const int j = f.index_of(i);
    Surjection& e = collapse[static_cast<std::size_t>(j) - 1];
    const Surjection c = coequalizer_surj(compose(e, f.component(i)), compose(e, g.component(i)));
    e = compose(c, e);
  }

  std::vector<int> final_sizes;
  std::vector<int> final_idx;
  for (int j = 1; j <= mid.index_count(); ++j) {
    final_sizes.push_back(collapse[static_cast<std::size_t>(j) - 1].cod);
    final_idx.push_back(j);
  }
  ClusterFamily out_family = make_cluster_family(std::move(final_sizes));
  FamilyMorphism phase2 =
      make_family_morphism(mid, out_family, std::move(final_idx), std::move(collapse));

  FamilyCoequalizer out;
  out.family = std::move(out_family);
  out.projection = compose(phase2, proj);
  return out;
}

std::vector<int> cluster_signature(const FiniteFrame& f) {
  ClusterFamily c = to_cluster_family(f);
  std::sort(c.sizes.begin(), c.sizes.end());
  return c.sizes;
}

}  // namespace s5kit
