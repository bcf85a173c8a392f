#pragma once

// Seeded sampling helpers. Every draw reduces raw mt19937_64 output
// modulo the span, so a seed pins the exact stream on any platform; the
// tiny modulo bias is irrelevant for test data.

#include <cstdint>
#include <random>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "numbers.hpp"
#include "plucker.hpp"
#include "subsets.hpp"

namespace thincells {

inline std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InvalidParameter("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

// Integer entries in [-bound, bound].
inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                    int bound = 10) {
  if (bound < 1) throw InvalidParameter("entry bound must be at least 1");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(uniform_int(rng, -bound, bound));
  return m;
}

inline RationalMatrix random_full_rank_matrix(std::mt19937_64& rng, std::size_t rows,
                                              std::size_t cols, int bound = 10,
                                              int retries = 200) {
  const std::size_t want = rows < cols ? rows : cols;
  for (int attempt = 0; attempt < retries; ++attempt) {
    RationalMatrix m = random_matrix(rng, rows, cols, bound);
    if (rank(m) == want) return m;
  }
  throw SamplingExhausted("no full-rank sample within the retry budget");
}

inline Permutation random_permutation(std::mt19937_64& rng, int n) {
  if (n < 1 || n > kMaxGroundSet) throw InvalidParameter("permutation degree out of range");
  std::vector<int> im(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) im[static_cast<std::size_t>(i)] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(im[static_cast<std::size_t>(i)],
              im[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  return Permutation(std::move(im));
}

inline DiagonalTorusElement random_torus_element(std::mt19937_64& rng, int n, int bound = 10) {
  if (bound < 1) throw InvalidParameter("entry bound must be at least 1");
  std::vector<Rational> diag;
  diag.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    std::int64_t v = 0;
    while (v == 0) v = uniform_int(rng, -bound, bound);
    diag.emplace_back(v);
  }
  return DiagonalTorusElement(std::move(diag));
}

}  // namespace thincells
