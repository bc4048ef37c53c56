#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "s5kit/theory.hpp"

using namespace s5kit;

namespace {

Surjection surj(std::vector<int> values, int cod) { return make_surjection(std::move(values), cod); }

Structure redirect_one_value(const Structure& p, const Surjection& q, int element, int value) {
  auto tables = p.tables;
  tables[q][static_cast<std::size_t>(element) - 1] = value;
  return make_presheaf_unchecked(p.N, p.carrier_sizes, std::move(tables));
}

// Every counterexample a report carries must replay as a genuine violation;
// passing verdicts must carry none.
void check_self_validation(const Structure& M, const AxiomReport& report) {
  for (const auto& v : report.verdicts) {
    if (v.pass) {
      CHECK_FALSE(v.counterexample.has_value());
    } else {
      REQUIRE(v.counterexample.has_value());
      CAPTURE(v.axiom);
      CHECK_FALSE(re_evaluate(M, v.axiom, *v.counterexample));
    }
  }
}

void check_all_three(const Structure& M, bool expect_pass) {
  const auto t1 = check_T1(M);
  const auto t2 = check_T2(M);
  const auto lex = check_lex_preservation(M);
  CHECK(t1.pass() == expect_pass);
  CHECK(t2.pass() == expect_pass);
  CHECK(lex.pass() == expect_pass);
  check_self_validation(M, t1);
  check_self_validation(M, t2);
  check_self_validation(M, lex);
}

}  // namespace

TEST_CASE("canonical liftings satisfy every axiom") {
  for (int m = 1; m <= 3; ++m)
    for (int N = m; N <= 4; ++N) {
      CAPTURE(m);
      CAPTURE(N);
      check_all_three(model_from_frame(make_cluster_family({m}), N), true);
    }
  check_all_three(model_from_frame(make_cluster_family({1, 2, 2}), 4), true);
  check_all_three(model_from_frame(make_cluster_family({2, 3}), 4), true);
  check_all_three(model_from_frame(make_cluster_family({}), 3), true);
  check_all_three(model_from_frame(make_cluster_family({2}), 5), true);
}

TEST_CASE("fix-trivial detection matches the level actions") {
  const auto M = model_from_frame(make_cluster_family({1, 2}), 4);
  for (int n = 1; n <= M.N; ++n) {
    const auto action = level_action(M, n);
    std::vector<int> expected;
    for (int x = 1; x <= M.carrier_size(n); ++x) {
      CHECK(check_fix_trivial(M, n, x) == fix_is_trivial(action, x));
      if (fix_is_trivial(action, x)) expected.push_back(x);
    }
    CHECK(fix_trivial_sort_elements(M, n) == expected);
  }
  CHECK_THROWS_AS(check_fix_trivial(M, 5, 1), Error);
  CHECK_THROWS_AS(check_fix_trivial(M, 1, 99), Error);
}

TEST_CASE("presenting witnesses come in full orbits") {
  const auto M = model_from_frame(make_cluster_family({2, 3}), 4);
  for (int n = 1; n <= M.N; ++n)
    for (int z = 1; z <= M.carrier_size(n); ++z) {
      const auto witnesses = presenting_witnesses(M, n, z);
      REQUIRE_FALSE(witnesses.empty());
      const int m = witnesses.front().f.cod;
      long long fact = 1;
      for (int i = 2; i <= m; ++i) fact *= i;
      CHECK(static_cast<long long>(witnesses.size()) == fact);
      for (const auto& w : witnesses) {
        CHECK(w.f.cod == m);
        CHECK(M.map_at(w.f, w.y) == z);
        CHECK(check_fix_trivial(M, m, w.y));
      }
    }
}

TEST_CASE("structures without fix-trivial elements fail the cover axioms") {
  // Lifting a trivial degree-two action: both generators act as the identity
  // on a single point, so no element of the result has a trivial fixer.
  const auto trivial = make_action(2, 1, {1}, {1});
  REQUIRE(validate_action(trivial).pass());
  REQUIRE_FALSE(is_faithful(trivial));
  const auto lifted = canonical_lifting(trivial, 3).presheaf;

  for (int n = 1; n <= lifted.N; ++n) CHECK(fix_trivial_sort_elements(lifted, n).empty());

  const auto t1 = check_T1(lifted);
  CHECK_FALSE(t1.find("faithful-cover")->pass);
  CHECK(t1.find("functoriality")->pass);
  CHECK(t1.find("collision-witness")->pass);
  CHECK(t1.find("injectivity")->pass);

  const auto t2 = check_T2(lifted);
  CHECK_FALSE(t2.find("unique-presenting-level")->pass);
  CHECK(t2.find("collision-criterion")->pass);

  const auto lex = check_lex_preservation(lifted);
  CHECK_FALSE(lex.find("equalizer-image")->pass);

  check_self_validation(lifted, t1);
  check_self_validation(lifted, t2);
  check_self_validation(lifted, lex);

  // Gluing a healthy summand on does not restore the failing elements.
  const auto mixed =
      disjoint_union_presheaves({representable_presheaf(2, 3), lifted}).presheaf;
  CHECK_FALSE(check_T1(mixed).find("faithful-cover")->pass);
  CHECK_FALSE(check_T2(mixed).find("unique-presenting-level")->pass);
  CHECK_FALSE(check_lex_preservation(mixed).find("equalizer-image")->pass);
  check_all_three(mixed, false);
}

TEST_CASE("a redirected transition value fails functoriality everywhere") {
  const auto base = model_from_frame(make_cluster_family({2}), 3);
  const Surjection q0 = surj({1, 1, 2}, 2);
  const int original = base.map_at(q0, 1);
  const int replacement = original % base.carrier_size(3) + 1;
  const auto mutant = redirect_one_value(base, q0, 1, replacement);
  REQUIRE_FALSE(presheaf_laws(mutant).pass());

  const auto t1 = check_T1(mutant);
  const auto t2 = check_T2(mutant);
  const auto lex = check_lex_preservation(mutant);
  CHECK_FALSE(t1.find("functoriality")->pass);
  CHECK_FALSE(t2.find("functoriality")->pass);
  CHECK_FALSE(lex.find("functoriality")->pass);
  check_self_validation(mutant, t1);
  check_self_validation(mutant, t2);
  check_self_validation(mutant, lex);
}

TEST_CASE("merging two values fails the collision and injectivity axioms") {
  // Truncated one level above the merged symbol so that some span pushes out
  // to it on both legs.
  const auto base = model_from_frame(make_cluster_family({2}), 4);
  const Surjection q0 = surj({1, 1, 2}, 2);
  REQUIRE(base.map_at(q0, 1) != base.map_at(q0, 2));
  const auto mutant = redirect_one_value(base, q0, 2, base.map_at(q0, 1));

  const auto t1 = check_T1(mutant);
  CHECK(t1.find("faithful-cover")->pass);
  CHECK_FALSE(t1.find("collision-witness")->pass);
  CHECK_FALSE(t1.find("injectivity")->pass);

  const auto t2 = check_T2(mutant);
  CHECK(t2.find("unique-presenting-level")->pass);
  CHECK_FALSE(t2.find("collision-criterion")->pass);

  const auto lex = check_lex_preservation(mutant);
  CHECK_FALSE(lex.find("equalizer-injectivity")->pass);
  CHECK_FALSE(lex.find("pullback-injectivity")->pass);

  check_self_validation(mutant, t1);
  check_self_validation(mutant, t2);
  check_self_validation(mutant, lex);
}

TEST_CASE("gluing a transition across summands creates a second presenting sort") {
  const auto base = model_from_frame(make_cluster_family({1, 2}), 3);
  // Level-2 carrier: element 1 sits over the singleton cluster, 2 and 3 over
  // the two-point one.  Send the sole level-1 element into the wrong summand.
  REQUIRE(base.carrier_size(1) == 1);
  REQUIRE(base.carrier_size(2) == 3);
  const Surjection q21 = surj({1, 1}, 1);
  REQUIRE(base.map_at(q21, 1) == 1);
  const auto mutant = redirect_one_value(base, q21, 1, 2);

  const auto t1 = check_T1(mutant);
  CHECK_FALSE(t1.find("faithful-cover")->pass);
  const auto t2 = check_T2(mutant);
  CHECK_FALSE(t2.find("unique-presenting-level")->pass);
  const auto lex = check_lex_preservation(mutant);
  CHECK_FALSE(lex.find("equalizer-image")->pass);

  check_self_validation(mutant, t1);
  check_self_validation(mutant, t2);
  check_self_validation(mutant, lex);

  // The glue target now answers to presentations at two different sorts.
  const auto witnesses = presenting_witnesses(mutant, 2, 2);
  std::set<int> sorts;
  for (const auto& w : witnesses) sorts.insert(w.f.cod);
  CHECK(sorts == std::set<int>{1, 2});
}

TEST_CASE("the widened collision criterion rejects structures the default accepts") {
  const auto M = model_from_frame(make_cluster_family({1}), 3);
  CHECK(check_T2(M).pass());
  const auto wide = check_T2(M, kDefaultEnumerationCap, true);
  const auto* verdict = wide.find("collision-criterion");
  REQUIRE(verdict != nullptr);
  CHECK_FALSE(verdict->pass);
  REQUIRE(verdict->counterexample.has_value());
  CHECK_FALSE(re_evaluate(M, "collision-criterion", *verdict->counterexample));

  // On liftings of free actions the two readings agree.
  for (int m = 2; m <= 3; ++m)
    CHECK(check_T2(model_from_frame(make_cluster_family({m}), m + 1),
                   kDefaultEnumerationCap, true)
              .pass());
}

TEST_CASE("re-evaluation accepts holding instances and rejects garbage") {
  const auto M = model_from_frame(make_cluster_family({2}), 3);
  const Surjection q0 = surj({1, 1, 2}, 2);
  const Surjection t2 = surj({1, 3, 2}, 3);

  CHECK(re_evaluate(M, "functoriality",
                    {{2}, {1}, {to_surjection(identity_permutation(2))}, ""}));
  CHECK(re_evaluate(M, "functoriality", {{}, {1}, {q0, t2}, ""}));
  CHECK(re_evaluate(M, "faithful-cover", {{3}, {1}, {}, ""}));
  CHECK(re_evaluate(M, "unique-presenting-level", {{3}, {2}, {}, ""}));
  CHECK(re_evaluate(M, "injectivity", {{2}, {1, 2}, {q0}, ""}));
  CHECK(re_evaluate(M, "collision-witness", {{2, 2}, {1, 1}, {q0, q0}, ""}));
  CHECK(re_evaluate(M, "collision-criterion", {{3, 2}, {1, 1}, {q0, q0}, ""}));
  CHECK(re_evaluate(M, "equalizer-injectivity", {{3, 3}, {1, 2}, {t2, t2}, ""}));
  CHECK(re_evaluate(M, "equalizer-image", {{3, 3}, {1}, {t2, t2}, ""}));
  CHECK(re_evaluate(M, "pullback-injectivity", {{3, 3}, {1, 2}, {t2, t2}, ""}));
  CHECK(re_evaluate(M, "pullback-covering", {{3, 3}, {1, 1}, {q0, q0}, ""}));

  CHECK_THROWS_AS(re_evaluate(M, "no-such-axiom", {{}, {1}, {}, ""}), Error);
  CHECK_THROWS_AS(re_evaluate(M, "injectivity", {{}, {1}, {}, ""}), Error);
  CHECK_THROWS_AS(re_evaluate(M, "functoriality", {{}, {1}, {q0}, ""}), Error);
  CHECK_THROWS_AS(re_evaluate(M, "injectivity", {{}, {1, 99}, {q0}, ""}), Error);
}

TEST_CASE("classification reads cluster counts off the fix-trivial orbits") {
  const auto M = model_from_frame(make_cluster_family({1, 2, 2}), 3);
  const auto cls = classify_model(M);
  CHECK(cls.cluster_counts == std::map<int, int>{{1, 1}, {2, 2}});
  CHECK(cls.frame == from_cluster_family(make_cluster_family({1, 2, 2})));

  const auto single = classify_model(model_from_frame(make_cluster_family({3}), 4));
  CHECK(single.cluster_counts == std::map<int, int>{{3, 1}});

  const auto empty = classify_model(model_from_frame(make_cluster_family({}), 2));
  CHECK(empty.cluster_counts.empty());
  CHECK(empty.frame.worlds == 0);
}

TEST_CASE("classification round-trips every small cluster multiset") {
  const std::vector<std::vector<int>> families = {
      {}, {1}, {2}, {3}, {1, 1}, {1, 2}, {2, 2}, {1, 2, 2}, {1, 1, 3}, {2, 3}};
  for (const auto& sizes : families) {
    const int top = sizes.empty() ? 1 : *std::max_element(sizes.begin(), sizes.end());
    for (int N = top; N <= 4; ++N) {
      CAPTURE(sizes);
      CAPTURE(N);
      const auto cls = classify_model(model_from_frame(make_cluster_family(sizes), N));
      std::map<int, int> expected;
      for (int s : sizes) ++expected[s];
      CHECK(cls.cluster_counts == expected);
      auto ascending = sizes;
      std::sort(ascending.begin(), ascending.end());
      CHECK(cls.frame == from_cluster_family(make_cluster_family(ascending)));
    }
  }
  const auto big = classify_model(model_from_frame(make_cluster_family({2}), 5));
  CHECK(big.cluster_counts == std::map<int, int>{{2, 1}});
}

TEST_CASE("structure carriers count surjections from the truncation levels") {
  const auto M = model_from_frame(make_cluster_family({2}), 4);
  CHECK(M.carrier_size(1) == 0);
  CHECK(M.carrier_size(2) == 2);
  CHECK(M.carrier_size(3) == 6);
  CHECK(M.carrier_size(4) == 14);
  for (int n = 2; n <= 4; ++n)
    CHECK(M.carrier_size(n) == static_cast<int>(enumerate_surjections(n, 2).size()));
}

TEST_CASE("classification errors carry their causes") {
  CHECK_THROWS_AS(model_from_frame(make_cluster_family({5}), 4), Error);
  try {
    model_from_frame(make_cluster_family({5}), 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ClusterExceedsTruncation);
  }
  CHECK_THROWS_AS(model_from_frame(make_cluster_family({2}), 9), Error);

  // A broken structure classifies only when model checking is turned off.
  const auto base = model_from_frame(make_cluster_family({2}), 3);
  const auto mutant =
      redirect_one_value(base, surj({1, 1, 2}, 2), 2, base.map_at(surj({1, 1, 2}, 2), 1));
  try {
    classify_model(mutant);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAModel);
  }
  CHECK(classify_model(mutant, kDefaultEnumerationCap, false).cluster_counts ==
        std::map<int, int>{{2, 1}});

  // A bijection table acting as a three-cycle leaves three elements with
  // trivial fixers at sort 2: not a whole number of orbits.
  std::unordered_map<Surjection, std::vector<int>, SurjectionHash> tables;
  tables[surj({1}, 1)] = {};
  tables[surj({1, 2}, 2)] = {1, 2, 3};
  tables[surj({2, 1}, 2)] = {2, 3, 1};
  tables[surj({1, 1}, 1)] = {};
  const auto skew = make_presheaf_unchecked(2, {0, 3}, std::move(tables));
  try {
    classify_model(skew, kDefaultEnumerationCap, false);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonIntegralOrbit);
  }
}

TEST_CASE("the three checkers agree across genuine and broken structures") {
  std::vector<Structure> pool;
  pool.push_back(model_from_frame(make_cluster_family({1}), 3));
  pool.push_back(model_from_frame(make_cluster_family({2, 2}), 3));
  pool.push_back(model_from_frame(make_cluster_family({1, 3}), 4));
  pool.push_back(canonical_lifting(make_action(2, 1, {1}, {1}), 3).presheaf);
  const auto base = model_from_frame(make_cluster_family({2}), 3);
  pool.push_back(redirect_one_value(base, surj({1, 1, 2}, 2), 1, 4));
  pool.push_back(redirect_one_value(base, surj({1, 1, 2}, 2), 2, base.map_at(surj({1, 1, 2}, 2), 1)));

  for (const auto& M : pool) {
    const bool t1 = check_T1(M).pass();
    CHECK(check_T2(M).pass() == t1);
    CHECK(check_lex_preservation(M).pass() == t1);
  }
}
