#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <vector>

#include "s5kit/surjection.hpp"

using namespace s5kit;

namespace {

// Independent counting oracle: #Surj(n,m) by inclusion-exclusion.
std::int64_t surjection_count_oracle(int n, int m) {
  if (n < 1 || m < 1 || m > n) return 0;
  auto binom = [](int a, int b) {
    std::int64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - i + 1) / i;
    return r;
  };
  auto ipow = [](std::int64_t base, int exp) {
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
  };
  std::int64_t total = 0;
  for (int k = 0; k <= m; ++k) {
    const std::int64_t term = binom(m, k) * ipow(m - k, n);
    total += (k % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("construction validates image data") {
  CHECK_NOTHROW(make_surjection({1, 2, 1}, 2));
  CHECK_THROWS_WITH_AS(make_surjection({1, 1}, 2), doctest::Contains("NotSurjective"), Error);
  CHECK_THROWS_AS(make_surjection({0, 1}, 1), Error);
  CHECK_THROWS_AS(make_surjection({1, 3}, 2), Error);
  CHECK_THROWS_AS(make_surjection({}, 1), Error);
  CHECK(identity_surjection(3).map == std::vector<int>{1, 2, 3});
}

TEST_CASE("composition matches frozen values") {
  const Surjection p = make_surjection({1, 2, 1}, 2);
  const Surjection q = make_surjection({2, 1}, 2);
  CHECK(compose(q, p).map == std::vector<int>{2, 1, 2});

  const Surjection p2 = make_surjection({1, 2, 2}, 2);
  const Surjection q2 = make_surjection({1, 1}, 1);
  CHECK(compose(q2, p2).map == std::vector<int>{1, 1, 1});

  CHECK_THROWS_AS(compose(p2, q2), Error);  // cod 1 vs dom 3
}

TEST_CASE("category laws hold on every composable pair up to degree 4") {
  std::vector<Surjection> all;
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& q : enumerate_surjections(n, m)) all.push_back(q);

  for (const auto& f : all) {
    CHECK(compose(f, identity_surjection(f.dom)) == f);
    CHECK(compose(identity_surjection(f.cod), f) == f);
  }
  for (const auto& f : all)
    for (const auto& g : all) {
      if (g.cod != f.dom) continue;
      for (const auto& h : all) {
        if (h.cod != g.dom) continue;
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      }
    }
}

TEST_CASE("enumeration agrees with the inclusion-exclusion count") {
  for (int n = 1; n <= 7; ++n)
    for (int m = 1; m <= 7; ++m) {
      const auto all = enumerate_surjections(n, m);
      CHECK(static_cast<std::int64_t>(all.size()) == surjection_count_oracle(n, m));
      for (const auto& q : all) CHECK_NOTHROW(make_surjection(q.map, q.cod));
      for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].map < all[i].map);
    }
  CHECK(enumerate_surjections(3, 2).size() == 6);
  CHECK(enumerate_surjections(2, 3).empty());
  CHECK(surjection_count_oracle(7, 4) == 8400);
}

TEST_CASE("permutation enumeration is lexicographic and capped") {
  const auto p1 = enumerate_permutations(1);
  REQUIRE(p1.size() == 1);
  CHECK(p1[0].map == std::vector<int>{1});

  const auto p3 = enumerate_permutations(3);
  REQUIRE(p3.size() == 6);
  CHECK(p3.front() == identity_permutation(3));
  CHECK(p3.back().map == std::vector<int>{3, 2, 1});

  CHECK_THROWS_WITH_AS(enumerate_permutations(7), doctest::Contains("CapExceeded"), Error);
  CHECK(enumerate_permutations(7, 7).size() == 5040);
}

TEST_CASE("permutation algebra") {
  const Permutation s = make_permutation({2, 1, 3});
  const Permutation c = make_permutation({2, 3, 1});
  CHECK(compose(s, inverse(s)) == identity_permutation(3));
  CHECK(compose(c, c).map == std::vector<int>{3, 1, 2});
  CHECK(to_permutation(to_surjection(c)) == c);
  CHECK_THROWS_AS(to_permutation(make_surjection({1, 1}, 1)), Error);
}

TEST_CASE("coequalizer matches frozen values") {
  const Surjection id3 = identity_surjection(3);
  CHECK(coequalizer_surj(id3, id3) == id3);

  const Surjection cyc = make_surjection({2, 3, 1}, 3);
  CHECK(coequalizer_surj(id3, cyc).map == std::vector<int>{1, 1, 1});

  const Surjection id2 = identity_surjection(2);
  const Surjection swap = make_surjection({2, 1}, 2);
  CHECK(coequalizer_surj(id2, swap).map == std::vector<int>{1, 1});

  CHECK(coequalizer_surj(cyc, id3) == coequalizer_surj(id3, cyc));
  CHECK_THROWS_AS(coequalizer_surj(id2, id3), Error);
}

TEST_CASE("coequalizer universal property, exhaustive up to degree 4") {
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= k; ++n) {
      const auto pairs = enumerate_surjections(k, n);
      for (const auto& f : pairs)
        for (const auto& g : pairs) {
          const Surjection q = coequalizer_surj(f, g);
          CHECK(compose(q, f) == compose(q, g));
          for (int l = 1; l <= n; ++l)
            for (const auto& h : enumerate_surjections(n, l)) {
              if (compose(h, f) != compose(h, g)) continue;
              int factorizations = 0;
              for (const auto& u : enumerate_surjections(q.cod, l))
                if (compose(u, q) == h) ++factorizations;
              CHECK(factorizations == 1);
            }
        }
    }
}

TEST_CASE("pushout matches frozen values") {
  const Surjection f = make_surjection({1, 1, 2}, 2);
  const Surjection g = make_surjection({1, 2, 2}, 2);
  const auto po = pushout_surj(f, g);
  CHECK(po.left.map == std::vector<int>{1, 1});
  CHECK(po.right.map == std::vector<int>{1, 1});

  const Surjection id2 = identity_surjection(2);
  const auto po2 = pushout_surj(id2, id2);
  CHECK(po2.left == id2);
  CHECK(po2.right == id2);

  CHECK_THROWS_AS(pushout_surj(id2, identity_surjection(3)), Error);
}

TEST_CASE("pushout universal property, exhaustive up to degree 3") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= k; ++n)
      for (int m = 1; m <= k; ++m)
        for (const auto& f : enumerate_surjections(k, n))
          for (const auto& g : enumerate_surjections(k, m)) {
            const auto po = pushout_surj(f, g);
            CHECK(compose(po.left, f) == compose(po.right, g));
            for (int l = 1; l <= std::min(n, m); ++l)
              for (const auto& h1 : enumerate_surjections(n, l))
                for (const auto& h2 : enumerate_surjections(m, l)) {
                  if (compose(h1, f) != compose(h2, g)) continue;
                  int factorizations = 0;
                  for (const auto& u : enumerate_surjections(po.left.cod, l))
                    if (compose(u, po.left) == h1 && compose(u, po.right) == h2) ++factorizations;
                  CHECK(factorizations == 1);
                }
          }
}
