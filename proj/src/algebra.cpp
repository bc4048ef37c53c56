#include "s5kit/algebra.hpp"

#include <utility>

namespace s5kit {

S5Algebra make_algebra(int atoms, std::vector<int> box) {
  if (atoms < 0) throw Error(ErrorCode::BadInput, "atom count must be nonnegative");
  if (atoms > kMaxAlgebraAtoms)
    throw Error(ErrorCode::CapExceeded,
                "atom count " + std::to_string(atoms) + " exceeds cap " +
                    std::to_string(kMaxAlgebraAtoms));
  const auto elements = std::size_t{1} << atoms;
  if (box.size() != elements)
    throw Error(ErrorCode::BadInput, "box table must list one entry per subset");
  const int full = atoms == 0 ? 0 : ((1 << atoms) - 1);
  for (int entry : box)
    if (entry < 0 || entry > full)
      throw Error(ErrorCode::BadInput, "box table entry out of range");
  return S5Algebra{atoms, std::move(box)};
}

S5AxiomReport check_s5_axioms(const S5Algebra& algebra) {
  S5AxiomReport report;
  const int n = algebra.element_count();
  const int full = algebra.top();

  if (algebra.box_of(full) != full)
    report.failures.push_back({"box_preserves_top", full, -1});

  [&] {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (algebra.box_of(x & y) != (algebra.box_of(x) & algebra.box_of(y))) {
          report.failures.push_back({"box_preserves_meet", x, y});
          return;
        }
  }();

  for (int x = 0; x < n; ++x)
    if ((algebra.box_of(x) & x) != algebra.box_of(x)) {
      report.failures.push_back({"box_decreasing", x, -1});
      break;
    }

  for (int x = 0; x < n; ++x)
    if ((x & algebra.box_of(algebra.diamond_of(x))) != x) {
      report.failures.push_back({"box_diamond_increasing", x, -1});
      break;
    }

  return report;
}

S5Algebra frame_to_algebra(const FiniteFrame& frame) {
  if (frame.worlds > kMaxAlgebraAtoms)
    throw Error(ErrorCode::CapExceeded,
                "frame has " + std::to_string(frame.worlds) + " worlds, cap is " +
                    std::to_string(kMaxAlgebraAtoms));
  std::vector<int> block_mask(static_cast<std::size_t>(frame.block_count()), 0);
  for (int w = 1; w <= frame.worlds; ++w)
    block_mask[static_cast<std::size_t>(frame.block_of(w)) - 1] |= 1 << (w - 1);

  std::vector<int> box(std::size_t{1} << frame.worlds, 0);
  for (std::size_t s = 0; s < box.size(); ++s) {
    int inside = 0;
    for (int mask : block_mask)
      if ((mask & static_cast<int>(s)) == mask) inside |= mask;
    box[s] = inside;
  }
  return S5Algebra{frame.worlds, std::move(box)};
}

FiniteFrame algebra_to_frame(const S5Algebra& algebra) {
  const S5AxiomReport report = check_s5_axioms(algebra);
  if (!report.pass())
    throw Error(ErrorCode::NotS5, "equation " + report.failures.front().equation + " fails");

  const int n = algebra.atoms;
  const auto related = [&](int v, int w) {  // 0-based
    return (algebra.diamond_of(1 << v) >> w) & 1;
  };
  for (int v = 0; v < n; ++v)
    if (!related(v, v))
      throw Error(ErrorCode::NotEquivalence, "recovered relation is not reflexive");
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w)
      if (related(v, w) != related(w, v))
        throw Error(ErrorCode::NotEquivalence, "recovered relation is not symmetric");
  for (int v = 0; v < n; ++v)
    for (int w = 0; w < n; ++w) {
      if (!related(v, w)) continue;
      for (int u = 0; u < n; ++u)
        if (related(w, u) && !related(v, u))
          throw Error(ErrorCode::NotEquivalence, "recovered relation is not transitive");
    }

  std::vector<int> block(static_cast<std::size_t>(n), 0);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (block[static_cast<std::size_t>(v)] != 0) continue;
    ++next;
    for (int w = v; w < n; ++w)
      if (related(v, w)) block[static_cast<std::size_t>(w)] = next;
  }
  return make_frame(n, std::move(block));
}

AlgebraHom make_algebra_hom(S5Algebra source, S5Algebra target, std::vector<int> map) {
  const int n = source.element_count();
  if (map.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::BadInput, "hom table must list one entry per source element");
  for (int entry : map)
    if (entry < 0 || entry > target.top())
      throw Error(ErrorCode::BadInput, "hom table entry out of range");

  const auto h = [&](int e) { return map[static_cast<std::size_t>(e)]; };
  const int src_full = source.top();
  const int tgt_full = target.top();
  if (h(src_full) != tgt_full)
    throw Error(ErrorCode::NotHomomorphism, "top is not preserved");
  if (h(0) != 0) throw Error(ErrorCode::NotHomomorphism, "bottom is not preserved");
  for (int x = 0; x < n; ++x)
    if (h(src_full & ~x) != (tgt_full & ~h(x)))
      throw Error(ErrorCode::NotHomomorphism, "negation is not preserved at element " +
                                                  std::to_string(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (h(x & y) != (h(x) & h(y)))
        throw Error(ErrorCode::NotHomomorphism, "meet is not preserved at elements " +
                                                    std::to_string(x) + ", " + std::to_string(y));
      if (h(x | y) != (h(x) | h(y)))
        throw Error(ErrorCode::NotHomomorphism, "join is not preserved at elements " +
                                                    std::to_string(x) + ", " + std::to_string(y));
    }
  for (int x = 0; x < n; ++x)
    if (h(source.box_of(x)) != target.box_of(h(x)))
      throw Error(ErrorCode::NotHomomorphism,
                  "box is not preserved at element " + std::to_string(x));

  return AlgebraHom{std::move(source), std::move(target), std::move(map)};
}

AlgebraHom identity_algebra_hom(const S5Algebra& algebra) {
  std::vector<int> map(static_cast<std::size_t>(algebra.element_count()));
  for (std::size_t e = 0; e < map.size(); ++e) map[e] = static_cast<int>(e);
  return AlgebraHom{algebra, algebra, std::move(map)};
}

AlgebraHom compose(const AlgebraHom& second, const AlgebraHom& first) {
  if (first.target != second.source)
    throw Error(ErrorCode::SourceMismatch,
                "composition needs the first target to equal the second source");
  std::vector<int> map(first.map.size());
  for (std::size_t e = 0; e < map.size(); ++e)
    map[e] = second(first(static_cast<int>(e)));
  return AlgebraHom{first.source, second.target, std::move(map)};
}

AlgebraHom pmorphism_to_hom(const PMorphism& f) {
  S5Algebra source = frame_to_algebra(f.target);
  S5Algebra target = frame_to_algebra(f.source);
  std::vector<int> map(static_cast<std::size_t>(source.element_count()), 0);
  for (std::size_t s = 0; s < map.size(); ++s) {
    int preimage = 0;
    for (int w = 1; w <= f.source.worlds; ++w)
      if ((static_cast<int>(s) >> (f(w) - 1)) & 1) preimage |= 1 << (w - 1);
    map[s] = preimage;
  }
  return make_algebra_hom(std::move(source), std::move(target), std::move(map));
}

PMorphism hom_to_pmorphism(const AlgebraHom& h) {
  const FiniteFrame source_frame = algebra_to_frame(h.target);
  const FiniteFrame target_frame = algebra_to_frame(h.source);
  std::vector<int> map(static_cast<std::size_t>(source_frame.worlds), 0);
  for (int v = 1; v <= target_frame.worlds; ++v) {
    const int image = h(1 << (v - 1));
    for (int w = 1; w <= source_frame.worlds; ++w) {
      if (!((image >> (w - 1)) & 1)) continue;
      if (map[static_cast<std::size_t>(w) - 1] != 0)
        throw Error(ErrorCode::AtomClash, "world " + std::to_string(w) +
                                              " lies in two atom preimages");
      map[static_cast<std::size_t>(w) - 1] = v;
    }
  }
  for (int w = 1; w <= source_frame.worlds; ++w)
    if (map[static_cast<std::size_t>(w) - 1] == 0)
      throw Error(ErrorCode::NoAtomCover,
                  "world " + std::to_string(w) + " lies in no atom preimage");
  return make_pmorphism(source_frame, target_frame, std::move(map));
}

}  // namespace s5kit
