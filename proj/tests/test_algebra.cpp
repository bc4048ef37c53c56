#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "s5kit/algebra.hpp"
#include "s5kit/corpus.hpp"

using namespace s5kit;

namespace {

// Box table induced by an arbitrary neighborhood assignment: box(S) collects
// the atoms whose whole neighborhood lies inside S. Lets tests build tables
// from relations that are not equivalences.
S5Algebra algebra_from_neighborhoods(const std::vector<int>& neighborhood) {
  const int n = static_cast<int>(neighborhood.size());
  std::vector<int> box(std::size_t{1} << n, 0);
  for (int s = 0; s < (1 << n); ++s)
    for (int w = 0; w < n; ++w)
      if ((neighborhood[static_cast<std::size_t>(w)] & s) ==
          neighborhood[static_cast<std::size_t>(w)])
        box[static_cast<std::size_t>(s)] |= 1 << w;
  return make_algebra(n, std::move(box));
}

int fixpoint_count(const S5Algebra& a) {
  int count = 0;
  for (int s = 0; s < a.element_count(); ++s)
    if (a.box_of(s) == s) ++count;
  return count;
}

}  // namespace

TEST_CASE("algebra construction validates shape") {
  CHECK_NOTHROW(make_algebra(0, {0}));
  CHECK_NOTHROW(make_algebra(2, {0, 0, 0, 3}));
  CHECK_THROWS_AS(make_algebra(2, {0, 0, 0}), Error);
  CHECK_THROWS_AS(make_algebra(1, {0, 4}), Error);
  CHECK_THROWS_AS(make_algebra(-1, {}), Error);
  CHECK_THROWS_WITH_AS(make_algebra(13, std::vector<int>(std::size_t{1} << 13, 0)),
                       doctest::Contains("CapExceeded"), Error);
}

TEST_CASE("frame_to_algebra computes the relational box") {
  const S5Algebra a = frame_to_algebra(make_frame(3, {1, 1, 2}));
  CHECK(a.atoms == 3);
  CHECK(a.box_of(0b101) == 0b100);  // {1,3} keeps only the singleton block {3}
  CHECK(a.box_of(a.top()) == a.top());
  CHECK(a.box_of(0b011) == 0b011);
  CHECK(a.box_of(0b001) == 0);
  CHECK(fixpoint_count(a) == 4);  // unions of the two blocks

  const S5Algebra pair = frame_to_algebra(make_frame(2, {1, 1}));
  CHECK(pair.box == std::vector<int>{0, 0, 0, 3});

  CHECK(frame_to_algebra(make_frame(0, {})).box == std::vector<int>{0});
  CHECK_THROWS_AS(frame_to_algebra(make_frame(13, std::vector<int>(13, 1))), Error);
}

TEST_CASE("axiom checker passes genuine algebras and pins down mutants") {
  for (const auto& f : enumerate_frames_up_to(4))
    CHECK(check_s5_axioms(frame_to_algebra(f)).pass());

  Rng rng(90210);
  for (int trial = 0; trial < 200; ++trial)
    CHECK(check_s5_axioms(frame_to_algebra(random_frame(rng, 8, true))).pass());

  // Discrete box is the identity table.
  std::vector<int> id_box(8);
  for (int s = 0; s < 8; ++s) id_box[static_cast<std::size_t>(s)] = s;
  CHECK(check_s5_axioms(make_algebra(3, id_box)).pass());

  // box(S) = S with atom 1 forced in: inflationary, so only the
  // decreasing law breaks, first at the empty set.
  std::vector<int> forced(4);
  for (int s = 0; s < 4; ++s) forced[static_cast<std::size_t>(s)] = s | 1;
  const auto report = check_s5_axioms(make_algebra(2, forced));
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].equation == "box_decreasing");
  CHECK(report.failures[0].element == 0);
}

TEST_CASE("algebra_to_frame recovers frames and rejects corrupt tables") {
  // Discrete box: every block a singleton.
  std::vector<int> id_box(8);
  for (int s = 0; s < 8; ++s) id_box[static_cast<std::size_t>(s)] = s;
  CHECK(algebra_to_frame(make_algebra(3, id_box)) == make_frame(3, {1, 2, 3}));

  // Simple box (top goes to top, everything else to bottom): one cluster.
  std::vector<int> simple(8, 0);
  simple[7] = 7;
  CHECK(algebra_to_frame(make_algebra(3, simple)) == make_frame(3, {1, 1, 1}));

  CHECK(algebra_to_frame(make_algebra(0, {0})) == make_frame(0, {}));

  for (const auto& f : enumerate_frames_up_to(5))
    CHECK(algebra_to_frame(frame_to_algebra(f)) == f);

  // Axiom failure surfaces as NotS5.
  std::vector<int> forced(4);
  for (int s = 0; s < 4; ++s) forced[static_cast<std::size_t>(s)] = s | 1;
  CHECK_THROWS_WITH_AS(algebra_to_frame(make_algebra(2, forced)), doctest::Contains("NotS5"),
                       Error);

  // A reflexive symmetric but non-transitive neighborhood relation satisfies
  // all four equations, yet the recovered relation is no equivalence.
  const S5Algebra chain = algebra_from_neighborhoods({0b011, 0b111, 0b110});
  REQUIRE(check_s5_axioms(chain).pass());
  CHECK_THROWS_WITH_AS(algebra_to_frame(chain), doctest::Contains("NotEquivalence"), Error);
}

TEST_CASE("hom validation checks every operation") {
  const S5Algebra discrete = frame_to_algebra(make_frame(2, {1, 2}));
  const S5Algebra cluster = frame_to_algebra(make_frame(2, {1, 1}));

  CHECK_NOTHROW(make_algebra_hom(discrete, discrete, {0, 1, 2, 3}));
  CHECK_THROWS_AS(make_algebra_hom(discrete, discrete, {0, 1, 2}), Error);
  CHECK_THROWS_AS(make_algebra_hom(discrete, discrete, {0, 1, 2, 4}), Error);

  // Identity table between algebras with different boxes: Boolean structure
  // agrees, box preservation fails.
  CHECK_THROWS_WITH_AS(make_algebra_hom(discrete, cluster, {0, 1, 2, 3}),
                       doctest::Contains("NotHomomorphism"), Error);
  // Collapsing {1} to top breaks negation.
  CHECK_THROWS_WITH_AS(make_algebra_hom(discrete, discrete, {0, 3, 2, 3}),
                       doctest::Contains("NotHomomorphism"), Error);
}

TEST_CASE("duality on morphisms") {
  const FiniteFrame cluster = make_frame(2, {1, 1});
  const FiniteFrame dot = make_frame(1, {1});

  const AlgebraHom id = pmorphism_to_hom(identity_pmorphism(cluster));
  CHECK(id == identity_algebra_hom(frame_to_algebra(cluster)));

  const AlgebraHom collapse = pmorphism_to_hom(make_pmorphism(cluster, dot, {1, 1}));
  CHECK(collapse.map == std::vector<int>{0, 3});  // preimage of the point is both worlds

  Rng rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const FiniteFrame c = random_frame(rng, 2);
    const PMorphism g = family_to_pmorphism(
        random_family_morphism(rng, to_cluster_family(c), 1 + static_cast<int>(rng() % 2), 1));
    const PMorphism f = family_to_pmorphism(
        random_family_morphism(rng, to_cluster_family(g.source), 1 + static_cast<int>(rng() % 2), 1));
    REQUIRE(f.target == g.source);
    CHECK(pmorphism_to_hom(compose(g, f)) ==
          compose(pmorphism_to_hom(f), pmorphism_to_hom(g)));
  }
}

TEST_CASE("hom_to_pmorphism inverts pmorphism_to_hom") {
  const FiniteFrame cluster = make_frame(2, {1, 1});
  const AlgebraHom id = identity_algebra_hom(frame_to_algebra(cluster));
  CHECK(hom_to_pmorphism(id) == identity_pmorphism(cluster));

  for (const auto& f_frame : enumerate_frames_up_to(4))
    for (const auto& g_frame : enumerate_frames_up_to(4))
      for (const auto& f : enumerate_pmorphisms(f_frame, g_frame))
        CHECK(hom_to_pmorphism(pmorphism_to_hom(f)) == f);

  // Raw tables that are not inverse images fail the atom partition check.
  const S5Algebra a = frame_to_algebra(cluster);
  const AlgebraHom no_cover{a, a, {0, 0, 0, 3}};  // bypasses validation on purpose
  CHECK_THROWS_WITH_AS(hom_to_pmorphism(no_cover), doctest::Contains("NoAtomCover"), Error);
  const AlgebraHom clash{a, a, {0, 3, 3, 3}};
  CHECK_THROWS_WITH_AS(hom_to_pmorphism(clash), doctest::Contains("AtomClash"), Error);
}

TEST_CASE("box fixpoints count the unions of blocks") {
  for (const auto& f : enumerate_frames_up_to(4))
    CHECK(fixpoint_count(frame_to_algebra(f)) == (1 << f.block_count()));
  CHECK(fixpoint_count(frame_to_algebra(make_frame(6, {1, 1, 2, 3, 3, 3}))) == 8);
}

TEST_CASE("dual of a coequalizer projection is an equalizer") {
  Rng rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    auto [f, g] = random_parallel_pair(rng, 3, 2);
    const auto ce = frame_coequalizer(f, g);
    const AlgebraHom hq = pmorphism_to_hom(ce.projection);
    const AlgebraHom hf = pmorphism_to_hom(f);
    const AlgebraHom hg = pmorphism_to_hom(g);

    const std::set<int> image(hq.map.begin(), hq.map.end());
    CHECK(image.size() == hq.map.size());  // injective

    std::set<int> equalized;
    for (int s = 0; s < hf.source.element_count(); ++s)
      if (hf(s) == hg(s)) equalized.insert(s);
    CHECK(image == equalized);
  }
}
