#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <random>
#include <vector>

#include "thincells/classify.hpp"
#include "thincells/flag.hpp"
#include "thincells/sampling.hpp"

#include "oracles.hpp"

using namespace thincells;

namespace {

Flag two_step_example() {
  return make_flag({RationalMatrix::from_int_rows({{1, 0, 1, 2}, {0, 1, 3, 4}}),
                    RationalMatrix::from_int_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}})});
}

}  // namespace

TEST_CASE("flags validate shape, rank, and nesting", "[flag]") {
  const Flag f = two_step_example();
  CHECK(f.n == 4);
  CHECK(f.dims == std::vector<int>{2, 3});

  CHECK_THROWS_AS(make_flag({}), InvalidParameter);
  // stage row counts must strictly increase
  CHECK_THROWS_AS(make_flag({RationalMatrix::from_int_rows({{1, 0, 0}, {0, 1, 0}}),
                             RationalMatrix::from_int_rows({{1, 0, 0}, {0, 0, 1}})}),
                  InvalidParameter);
  // widths must agree
  CHECK_THROWS_AS(make_flag({RationalMatrix::from_int_rows({{1, 0, 0}}),
                             RationalMatrix::from_int_rows({{1, 0}, {0, 1}})}),
                  InvalidParameter);
  // a stage can not use more rows than columns
  CHECK_THROWS_AS(make_flag({RationalMatrix::from_int_rows({{1, 0}, {0, 1}, {1, 1}})}),
                  InvalidParameter);
}

TEST_CASE("rank-deficient stages are reported by index", "[flag][errors]") {
  try {
    make_flag({RationalMatrix::from_int_rows({{1, 0, 0}}),
               RationalMatrix::from_int_rows({{1, 0, 0}, {2, 0, 0}, {0, 0, 1}})});
    FAIL("expected RankDeficient");
  } catch (const RankDeficient& e) {
    CHECK(e.stage == 2);
  }

  try {
    make_flag({RationalMatrix::from_int_rows({{0, 0, 0}})});
    FAIL("expected RankDeficient");
  } catch (const RankDeficient& e) {
    CHECK(e.stage == 1);
  }
}

TEST_CASE("broken containment is reported by the lower stage", "[flag][errors]") {
  try {
    make_flag({RationalMatrix::from_int_rows({{1, 0, 0}}),
               RationalMatrix::from_int_rows({{0, 1, 0}, {0, 0, 1}})});
    FAIL("expected NotNested");
  } catch (const NotNested& e) {
    CHECK(e.stage == 1);
  }
}

TEST_CASE("a generic two-step flag realizes the uniform pair", "[flag]") {
  const Plurimatroid pm = plurimatroid_of_flag(two_step_example());
  CHECK(pm == make_plurimatroid({uniform_matroid(4, 2), uniform_matroid(4, 3)}));
  CHECK(cell_membership(two_step_example(), pm));
  CHECK_FALSE(cell_membership(
      two_step_example(),
      make_plurimatroid({matroid_of_subspace(RationalMatrix::from_int_rows({{1, 0, 0, 0}, {0, 1, 0, 0}})),
                         uniform_matroid(4, 3)})));
  CHECK_THROWS_AS(cell_membership(two_step_example(),
                                  make_plurimatroid({uniform_matroid(4, 2)})),
                  InvalidParameter);
}

TEST_CASE("character lattice ranks and the stabilizer split", "[flag]") {
  const auto uniform_pair = make_plurimatroid({uniform_matroid(4, 2), uniform_matroid(4, 3)});
  CHECK(stabilizer_dimensions(uniform_pair) == std::pair<int, int>{1, 3});

  // single-basis components contribute nothing
  const auto rigid = make_plurimatroid(
      {make_matroid(3, 1, {Subset::of(3, {1})}), make_matroid(3, 2, {Subset::of(3, {1, 3})})});
  CHECK(lattice_rank(character_lattice(rigid)) == 0);
  CHECK(stabilizer_dimensions(rigid) == std::pair<int, int>{3, 0});

  const CharacterLattice lattice = character_lattice(uniform_pair);
  CHECK(lattice.n == 4);
  CHECK(lattice.rows.size() == (6 - 1) + (4 - 1));
  for (const auto& row : lattice.rows) {
    int sum = 0;
    for (int v : row) sum += v;
    CHECK(sum == 0);  // each row is a difference of two indicator vectors
  }
}

TEST_CASE("stabilizer ranks follow the support-set arithmetic", "[flag]") {
  for (int n = 3; n <= 5; ++n) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t a = 1; a < top; ++a)
      for (std::uint64_t b = 1; b < top; ++b) {
        const KPair kp = make_k_pair(n, Subset(n, a), Subset(n, b));
        const int r = lattice_rank(character_lattice(plurimatroid_of_k_pair(kp)));
        CHECK(r == oracle::stabilizer_rank_formula(std::popcount(a), std::popcount(b),
                                                   std::popcount(a & b)));
      }
  }
}

TEST_CASE("the incidence pairing detects containment", "[flag]") {
  CHECK(incidence_pairing({1, 1, 0}, {0, 0, 1}) == 0);
  CHECK(incidence_pairing({0, 0, 1}, {0, 0, 1}) == 1);
  CHECK(incidence_pairing({1, 2}, {3, 4}) == 3 - 8);
  CHECK_THROWS_AS(incidence_pairing({1, 2}, {1, 2, 3}), InvalidParameter);
  CHECK_THROWS_AS(incidence_pairing({}, {}), InvalidParameter);

  CHECK(hyperplane_coordinates(RationalMatrix::from_int_rows({{1, 0, 0}, {0, 1, 0}})) ==
        std::vector<Rational>{0, 0, 1});
  CHECK_THROWS_AS(hyperplane_coordinates(RationalMatrix::from_int_rows({{1, 0, 0}})),
                  InvalidParameter);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(uniform_int(rng, 3, 6));
    const RationalMatrix w2 = random_full_rank_matrix(rng, static_cast<std::size_t>(n - 1),
                                                      static_cast<std::size_t>(n));
    const std::vector<Rational> alpha = hyperplane_coordinates(w2);
    for (std::size_t r = 0; r < w2.rows(); ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < w2.cols(); ++c) row.push_back(w2.at(r, c));
      CHECK(incidence_pairing(row, alpha) == 0);
    }
  }
}

TEST_CASE("ambient flag manifold dimensions", "[flag]") {
  CHECK(flag_variety_dimension(4, {2, 3}) == 5);
  CHECK(flag_variety_dimension(3, {1, 2}) == 3);
  CHECK(flag_variety_dimension(5, {1, 4}) == 7);
  CHECK(flag_variety_dimension(4, {4}) == 0);
  CHECK_THROWS_AS(flag_variety_dimension(3, {2, 2}), InvalidParameter);
  CHECK_THROWS_AS(flag_variety_dimension(3, {0, 2}), InvalidParameter);
  CHECK_THROWS_AS(flag_variety_dimension(3, {}), InvalidParameter);
}

TEST_CASE("random flags are reproducible and well formed", "[flag]") {
  const Flag a = random_flag(5, {1, 3}, 2024);
  const Flag b = random_flag(5, {1, 3}, 2024);
  CHECK(a == b);
  CHECK(a.dims == std::vector<int>{1, 3});
  CHECK(a.n == 5);
  CHECK(random_flag(5, {1, 3}, 2025) != a);

  const Plurimatroid pm = plurimatroid_of_flag(a);
  CHECK(pm.ranks() == std::vector<int>{1, 3});
}

TEST_CASE("witness flags land in their cell", "[flag]") {
  const Flag f = witness_flag(Subset::of(3, {1, 2}), Subset::of(3, {1, 2}), 3);
  CHECK(f.stages[0] == RationalMatrix::from_int_rows({{1, -1, 0}}));
  CHECK(f.stages[1] == RationalMatrix::from_int_rows({{1, -1, 0}, {0, 0, 1}}));

  CHECK_THROWS_AS(witness_flag(Subset::of(3, {1}), Subset::of(3, {1}), 3), EmptyCell);
  CHECK_THROWS_AS(witness_flag(Subset::of(3, {1, 2}), Subset::of(3, {2, 3}), 3), EmptyCell);
  CHECK_THROWS_AS(witness_flag(Subset::of(3, {}), Subset::of(3, {1, 2}), 3), InvalidParameter);

  for (int n = 3; n <= 4; ++n) {
    const std::uint64_t top = std::uint64_t{1} << n;
    for (std::uint64_t a = 1; a < top; ++a)
      for (std::uint64_t b = 1; b < top; ++b) {
        const Subset k1(n, a), k2(n, b);
        if (std::popcount(a & b) == 1) {
          CHECK_THROWS_AS(witness_flag(k1, k2, n), EmptyCell);
          continue;
        }
        const KPair back = k_sets(plurimatroid_of_flag(witness_flag(k1, k2, n)));
        CHECK(back.k1 == k1);
        CHECK(back.k2 == k2);
      }
  }
}
