#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "s5kit/corpus.hpp"
#include "s5kit/frame.hpp"

using namespace s5kit;

TEST_CASE("frame construction enforces canonical labels") {
  CHECK_NOTHROW(make_frame(0, {}));
  CHECK_NOTHROW(make_frame(3, {1, 1, 2}));
  CHECK_THROWS_AS(make_frame(3, {1, 3, 2}), Error);
  CHECK_THROWS_AS(make_frame(3, {2, 1, 1}), Error);
  CHECK_THROWS_AS(make_frame(2, {1}), Error);
  CHECK(make_frame(3, {1, 1, 2}).block_count() == 2);
}

TEST_CASE("p-morphism validation") {
  const FiniteFrame two_cluster = make_frame(2, {1, 1});
  const FiniteFrame two_singletons = make_frame(2, {1, 2});

  CHECK_NOTHROW(identity_pmorphism(two_cluster));
  // Collapsing a 2-cluster onto a singleton is fine.
  CHECK_NOTHROW(make_pmorphism(two_cluster, two_singletons, {1, 1}));
  // Two singletons into a 2-cluster miss a world: not onto.
  CHECK_THROWS_WITH_AS(make_pmorphism(two_singletons, two_cluster, {1, 1}),
                       doctest::Contains("NotOnto"), Error);
  // Splitting a cluster across two classes is rejected.
  CHECK_THROWS_WITH_AS(make_pmorphism(two_cluster, two_singletons, {1, 2}),
                       doctest::Contains("NotIntoOneClass"), Error);
  CHECK_THROWS_AS(make_pmorphism(two_cluster, two_singletons, {7, 1}), Error);
}

TEST_CASE("coproduct is a disjoint union with p-morphism injections") {
  const FiniteFrame a = make_frame(2, {1, 1});
  const FiniteFrame b = make_frame(3, {1, 1, 1});
  const auto cp = frame_coproduct({a, b});
  CHECK(cp.frame == make_frame(5, {1, 1, 2, 2, 2}));
  REQUIRE(cp.injections.size() == 2);
  CHECK(cp.injections[0].map == std::vector<int>{1, 2});
  CHECK(cp.injections[1].map == std::vector<int>{3, 4, 5});

  CHECK(frame_coproduct({}).frame == make_frame(0, {}));
  const auto with_empty = frame_coproduct({a, make_frame(0, {})});
  CHECK(with_empty.frame == a);
}

TEST_CASE("coequalizer matches the worked examples") {
  // Identical legs give the target back with identity projection.
  const FiniteFrame a = make_frame(4, {1, 1, 2, 2});
  const PMorphism id = identity_pmorphism(a);
  const auto trivial = frame_coequalizer(id, id);
  CHECK(trivial.frame == a);
  CHECK(trivial.projection == id);

  // Two maps of a singleton picking out two singleton worlds merge them.
  const FiniteFrame dot = make_frame(1, {1});
  const FiniteFrame two_singletons = make_frame(2, {1, 2});
  const auto merged = frame_coequalizer(make_pmorphism(dot, two_singletons, {1}),
                                        make_pmorphism(dot, two_singletons, {2}));
  CHECK(merged.frame == make_frame(1, {1}));
  CHECK(merged.projection.map == std::vector<int>{1, 1});

  // Identifying two worlds of a 3-cluster leaves a 2-cluster.
  const FiniteFrame tri = make_frame(3, {1, 1, 1});
  const auto collapsed = frame_coequalizer(identity_pmorphism(tri),
                                           make_pmorphism(tri, tri, {2, 1, 3}));
  CHECK(collapsed.frame == make_frame(2, {1, 1}));
  CHECK(collapsed.projection.map == std::vector<int>{1, 1, 2});

  CHECK_THROWS_AS(frame_coequalizer(identity_pmorphism(dot), identity_pmorphism(tri)), Error);
}

TEST_CASE("coequalizer projection validates on random parallel pairs") {
  Rng rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    auto [f, g] = random_parallel_pair(rng, 3, 2);
    const auto ce = frame_coequalizer(f, g);  // construction re-validates the projection
    CHECK(compose(ce.projection, f) == compose(ce.projection, g));
  }
}

TEST_CASE("coequalizer universal property, exhaustive on small frames") {
  for (const auto& F : enumerate_frames(2))
    for (const auto& G : enumerate_frames(3)) {
      const auto arrows = enumerate_pmorphisms(F, G);
      for (const auto& f : arrows)
        for (const auto& g : arrows) {
          const auto ce = frame_coequalizer(f, g);
          CHECK(compose(ce.projection, f) == compose(ce.projection, g));
          for (const auto& H : enumerate_frames_up_to(3))
            for (const auto& h : enumerate_pmorphisms(G, H)) {
              if (compose(h, f) != compose(h, g)) continue;
              int count = 0;
              for (const auto& u : enumerate_pmorphisms(ce.frame, H))
                if (compose(u, ce.projection) == h) ++count;
              CHECK(count == 1);
            }
        }
    }
}

TEST_CASE("pushout legs commute and satisfy the universal property") {
  const FiniteFrame dot = make_frame(1, {1});
  const FiniteFrame pair = make_frame(2, {1, 2});
  for (const auto& f : enumerate_pmorphisms(dot, pair))
    for (const auto& g : enumerate_pmorphisms(dot, pair)) {
      const auto po = frame_pushout(f, g);
      CHECK(compose(po.left, f) == compose(po.right, g));
      for (const auto& H : enumerate_frames_up_to(3))
        for (const auto& h1 : enumerate_pmorphisms(pair, H))
          for (const auto& h2 : enumerate_pmorphisms(pair, H)) {
            if (compose(h1, f) != compose(h2, g)) continue;
            int count = 0;
            for (const auto& u : enumerate_pmorphisms(po.frame, H))
              if (compose(u, po.left) == h1 && compose(u, po.right) == h2) ++count;
            CHECK(count == 1);
          }
    }

  // Swapping a 2-cluster against the identity still collapses to a 2-cluster.
  const FiniteFrame c2 = make_frame(2, {1, 1});
  const auto po = frame_pushout(identity_pmorphism(c2), make_pmorphism(c2, c2, {2, 1}));
  CHECK(cluster_signature(po.frame) == std::vector<int>{2});

  CHECK_THROWS_AS(frame_pushout(identity_pmorphism(dot), identity_pmorphism(pair)), Error);
}

TEST_CASE("pushout over the empty frame is the coproduct") {
  const FiniteFrame empty = make_frame(0, {});
  const FiniteFrame a = make_frame(2, {1, 1});
  const FiniteFrame b = make_frame(1, {1});
  const auto po = frame_pushout(make_pmorphism(empty, a, {}), make_pmorphism(empty, b, {}));
  CHECK(po.frame == frame_coproduct({a, b}).frame);
}

TEST_CASE("family dictionary round trips") {
  CHECK(to_cluster_family(make_frame(3, {1, 1, 2})).sizes == std::vector<int>{2, 1});
  CHECK(from_cluster_family(make_cluster_family({3})) == make_frame(3, {1, 1, 1}));
  CHECK_THROWS_AS(make_cluster_family({2, 0}), Error);

  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const FiniteFrame f = random_frame(rng, 8, true);
    CHECK(cluster_signature(from_cluster_family(to_cluster_family(f))) == cluster_signature(f));
  }
  // Frames already laid out contiguously convert back on the nose.
  const FiniteFrame laid = make_frame(5, {1, 1, 2, 3, 3});
  CHECK(from_cluster_family(to_cluster_family(laid)) == laid);

  for (const auto& F : enumerate_frames(3))
    for (const auto& G : enumerate_frames_up_to(3))
      for (const auto& f : enumerate_pmorphisms(F, G)) {
        const FamilyMorphism fam = pmorphism_to_family(f);
        const PMorphism back = family_to_pmorphism(fam);
        CHECK(cluster_signature(back.source) == cluster_signature(F));
        CHECK(cluster_signature(back.target) == cluster_signature(G));
        if (F == from_cluster_family(to_cluster_family(F)) &&
            G == from_cluster_family(to_cluster_family(G)))
          CHECK(back == f);
      }
}

TEST_CASE("family coequalizer agrees with the frame construction") {
  auto check_agreement = [](const PMorphism& f, const PMorphism& g) {
    const auto frame_route = frame_coequalizer(f, g);
    const auto family_route = family_coequalizer(pmorphism_to_family(f), pmorphism_to_family(g));

    CHECK(cluster_signature(frame_route.frame) ==
          cluster_signature(from_cluster_family(family_route.family)));

    // Projections must intertwine along the canonical relabeling of the target,
    // which lays each block out contiguously in block-id order.
    const PMorphism family_proj = family_to_pmorphism(family_route.projection);
    const FiniteFrame& G = f.target;
    std::vector<int> offset(static_cast<std::size_t>(G.block_count()) + 1, 0);
    for (int b : G.block) ++offset[static_cast<std::size_t>(b)];
    int running = 0;
    for (std::size_t b = 1; b < offset.size(); ++b) {
      const int size = offset[b];
      offset[b] = running;
      running += size;
    }
    std::vector<int> used(static_cast<std::size_t>(G.block_count()) + 1, 0);
    std::vector<int> relabel(static_cast<std::size_t>(G.worlds), 0);
    for (int w = 1; w <= G.worlds; ++w) {
      const auto b = static_cast<std::size_t>(G.block[static_cast<std::size_t>(w) - 1]);
      relabel[static_cast<std::size_t>(w) - 1] = offset[b] + (used[b]++) + 1;
    }

    std::vector<int> iso(static_cast<std::size_t>(frame_route.frame.worlds), 0);
    bool consistent = true;
    for (int w = 1; w <= G.worlds; ++w) {
      const int a = frame_route.projection(w);
      const int b = family_proj(relabel[static_cast<std::size_t>(w) - 1]);
      if (iso[static_cast<std::size_t>(a) - 1] == 0)
        iso[static_cast<std::size_t>(a) - 1] = b;
      else if (iso[static_cast<std::size_t>(a) - 1] != b)
        consistent = false;
    }
    CHECK(consistent);
    std::vector<bool> seen(iso.size(), false);
    for (int v : iso) {
      REQUIRE(v >= 1);
      CHECK_FALSE(seen[static_cast<std::size_t>(v) - 1]);
      seen[static_cast<std::size_t>(v) - 1] = true;
    }
  };

  // Exhaustive over parallel pairs between small frames.
  for (const auto& F : enumerate_frames_up_to(2))
    for (const auto& G : enumerate_frames_up_to(3)) {
      const auto arrows = enumerate_pmorphisms(F, G);
      for (const auto& f : arrows)
        for (const auto& g : arrows) check_agreement(f, g);
    }

  Rng rng(7151);
  for (int trial = 0; trial < 200; ++trial) {
    auto [f, g] = random_parallel_pair(rng, 3, 2);
    check_agreement(f, g);
  }
}

TEST_CASE("family coequalizer handles the two phases") {
  // Index maps disagree: the two target clusters get merged via pushout.
  const ClusterFamily src = make_cluster_family({2});
  const ClusterFamily tgt = make_cluster_family({2, 2});
  const FamilyMorphism f =
      make_family_morphism(src, tgt, {1}, {make_surjection({1, 2}, 2)});
  const FamilyMorphism g =
      make_family_morphism(src, tgt, {2}, {make_surjection({1, 2}, 2)});
  const auto ce = family_coequalizer(f, g);
  CHECK(ce.family.sizes == std::vector<int>{2});
  CHECK(compose(ce.projection, f) == compose(ce.projection, g));

  // Equal index maps: fibrewise coequalizer of the component pair.
  const ClusterFamily tgt2 = make_cluster_family({2});
  const FamilyMorphism f2 =
      make_family_morphism(src, tgt2, {1}, {make_surjection({1, 2}, 2)});
  const FamilyMorphism g2 =
      make_family_morphism(src, tgt2, {1}, {make_surjection({2, 1}, 2)});
  const auto ce2 = family_coequalizer(f2, g2);
  CHECK(ce2.family.sizes == std::vector<int>{1});
  CHECK(compose(ce2.projection, f2) == compose(ce2.projection, g2));

  CHECK_THROWS_AS(family_coequalizer(f, f2), Error);
}

TEST_CASE("cluster signature sorts sizes") {
  CHECK(cluster_signature(make_frame(5, {1, 2, 2, 3, 2})) == std::vector<int>{1, 1, 3});
  CHECK(cluster_signature(make_frame(0, {})).empty());
}
