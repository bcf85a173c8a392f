#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "thincells/subsets.hpp"

#include "oracles.hpp"

using namespace thincells;

TEST_CASE("subsets store elements over a fixed ground set", "[subsets]") {
  const Subset s = Subset::of(5, {1, 3});
  CHECK(s.n() == 5);
  CHECK(s.cardinality() == 2);
  CHECK(s.contains(1));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.elements() == std::vector<int>{1, 3});
  CHECK(s.to_string() == "{1,3}");
  CHECK(s.complement().elements() == std::vector<int>{2, 4, 5});
  CHECK(Subset::of(3, {}).empty());
}

TEST_CASE("subset construction rejects bad input", "[subsets][errors]") {
  CHECK_THROWS_AS(Subset::of(64, {1}), InvalidParameter);
  CHECK_THROWS_AS(Subset::of(3, {0}), InvalidParameter);
  CHECK_THROWS_AS(Subset::of(3, {4}), InvalidParameter);
  CHECK_THROWS_AS(Subset::of(3, {1, 1}), InvalidParameter);
  CHECK_THROWS_AS(Subset(3, 0x8), InvalidParameter);
}

TEST_CASE("subset order compares sorted element lists", "[subsets]") {
  const int n = 5;
  CHECK(subset_less(Subset::of(n, {1, 4}), Subset::of(n, {2, 3})));
  CHECK_FALSE(subset_less(Subset::of(n, {2, 3}), Subset::of(n, {1, 4})));
  CHECK(subset_less(Subset::of(n, {1}), Subset::of(n, {1, 2})));
  CHECK_FALSE(subset_less(Subset::of(n, {1, 2}), Subset::of(n, {1, 2})));
  CHECK(subset_less(Subset::of(n, {}), Subset::of(n, {1})));
}

TEST_CASE("subset enumeration follows the canonical order", "[subsets]") {
  CHECK(enumerate_subsets(5, 3)[3].elements() == std::vector<int>{1, 3, 4});

  for (int n = 1; n <= 7; ++n)
    for (int d = 0; d <= n; ++d) {
      const auto got = enumerate_subsets(n, d);
      const auto want = oracle::subsets(n, d);
      REQUIRE(got.size() == want.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(got[k].elements() == want[k]);
        CHECK(subset_index(got[k]) == k);
        if (k > 0) CHECK(subset_less(got[k - 1], got[k]));
      }
    }

  CHECK_THROWS_AS(enumerate_subsets(3, 4), InvalidParameter);
  CHECK_THROWS_AS(enumerate_subsets(3, -1), InvalidParameter);
  CHECK_THROWS_AS(enumerate_subsets(-1, 0), InvalidParameter);
}

TEST_CASE("binomial coefficients are exact", "[subsets]") {
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK_THROWS_AS(binomial(-1, 0), InvalidParameter);

  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == oracle::binomial(n, k));

  // far past any machine word
  CHECK(binomial(100, 50) % 2 == 0);
  CHECK(binomial(100, 50) == binomial(99, 49) + binomial(99, 50));
}

TEST_CASE("permutations validate, compose, and invert", "[subsets]") {
  const Permutation sigma({2, 3, 1});
  CHECK(sigma(1) == 2);
  CHECK(sigma(3) == 1);
  CHECK(sigma.inverse() * sigma == Permutation::identity(3));
  CHECK(sigma * sigma.inverse() == Permutation::identity(3));

  const Permutation tau({2, 1, 3});
  const Permutation composed = sigma * tau;
  for (int k = 1; k <= 3; ++k) CHECK(composed(k) == sigma(tau(k)));

  CHECK_THROWS_AS(Permutation({1, 1, 3}), InvalidParameter);
  CHECK_THROWS_AS(Permutation({0, 1, 2}), InvalidParameter);
  CHECK_THROWS_AS(Permutation({1, 2, 4}), InvalidParameter);
}

TEST_CASE("permutation listing is lexicographic and bounded", "[subsets]") {
  const auto all = all_permutations(3);
  REQUIRE(all.size() == 6);
  CHECK(all.front() == Permutation::identity(3));
  CHECK(all.back() == Permutation({3, 2, 1}));
  CHECK(all_permutations(1).size() == 1);
  CHECK(all_permutations(4).size() == 24);
  CHECK_THROWS_AS(all_permutations(9), TooLarge);
  CHECK_THROWS_AS(all_permutations(-1), InvalidParameter);
}

TEST_CASE("permutations push subsets forward", "[subsets]") {
  const Permutation sigma({2, 1, 3});
  CHECK(apply_permutation_to_subset(sigma, Subset::of(3, {1, 3})) == Subset::of(3, {2, 3}));
  CHECK(apply_permutation_to_subset(Permutation::identity(3), Subset::of(3, {2})) ==
        Subset::of(3, {2}));
  CHECK_THROWS_AS(apply_permutation_to_subset(sigma, Subset::of(4, {1})), InvalidParameter);
}

TEST_CASE("inversion signs match a literal swap count", "[subsets]") {
  CHECK(inversion_sign(Permutation({2, 1, 3}), Subset::of(3, {1, 2})) == -1);
  CHECK(inversion_sign(Permutation({3, 1, 2}), Subset::of(3, {1, 2, 3})) == 1);
  CHECK(inversion_sign(Permutation({3, 1, 2}), Subset::of(3, {})) == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) images[static_cast<std::size_t>(k)] = k + 1;
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation sigma(images);
    std::uint64_t mask = rng() & ((std::uint64_t{1} << n) - 1);
    const Subset I(n, mask);
    std::vector<int> tuple;
    for (int k : I.elements()) tuple.push_back(sigma(k));
    CHECK(inversion_sign(sigma, I) == oracle::sort_sign(tuple));
  }
}

TEST_CASE("inversion signs satisfy the composition rule", "[subsets]") {
  const int n = 4;
  const auto perms = all_permutations(n);
  for (const Permutation& sigma : perms)
    for (const Permutation& tau : perms)
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const Subset I(n, mask);
        CHECK(inversion_sign(sigma * tau, I) ==
              inversion_sign(sigma, apply_permutation_to_subset(tau, I)) *
                  inversion_sign(tau, I));
      }
}
