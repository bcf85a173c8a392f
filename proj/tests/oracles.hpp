#pragma once

// Deliberately naive reference implementations. Nothing here shares code
// with the library; slow and literal is the point.

#include <algorithm>
#include <set>
#include <vector>

#include "thincells/numbers.hpp"

namespace oracle {

// All d-element subsets of {1..n} in lexicographic order of element lists.
inline std::vector<std::vector<int>> subsets(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  const auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(current.size()) == d) {
      out.push_back(current);
      return;
    }
    const int needed = d - static_cast<int>(current.size());
    for (int k = next; k + needed - 1 <= n; ++k) {
      current.push_back(k);
      self(self, k + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
  return out;
}

inline thincells::Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<thincells::Integer> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<thincells::Integer> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] +
                                          row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

// Sign of a sequence by counting bubble-sort swaps.
inline int sort_sign(std::vector<int> values) {
  int swaps = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    for (std::size_t j = 0; j + 1 < values.size() - i; ++j)
      if (values[j] > values[j + 1]) {
        std::swap(values[j], values[j + 1]);
        ++swaps;
      }
  return swaps % 2 == 0 ? 1 : -1;
}

// Cofactor expansion along the first row.
inline thincells::Rational determinant(const std::vector<std::vector<thincells::Rational>>& m) {
  const std::size_t d = m.size();
  if (d == 0) return 1;
  if (d == 1) return m[0][0];
  thincells::Rational total(0);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<std::vector<thincells::Rational>> minor;
    for (std::size_t i = 1; i < d; ++i) {
      std::vector<thincells::Rational> row;
      for (std::size_t j = 0; j < d; ++j)
        if (j != c) row.push_back(m[i][j]);
      minor.push_back(std::move(row));
    }
    const thincells::Rational term = m[0][c] * determinant(minor);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Literal exchange axiom over element sets.
inline bool check_exchange(const std::vector<std::vector<int>>& bases) {
  std::set<std::set<int>> family;
  for (const auto& b : bases) family.insert(std::set<int>(b.begin(), b.end()));
  for (const auto& I : family)
    for (const auto& J : family)
      for (int i : I) {
        if (J.count(i)) continue;
        bool fixed = false;
        for (int j : J) {
          if (I.count(j)) continue;
          std::set<int> candidate = I;
          candidate.erase(i);
          candidate.insert(j);
          if (family.count(candidate)) {
            fixed = true;
            break;
          }
        }
        if (!fixed) return false;
      }
  return true;
}

inline int stabilizer_rank_formula(int k1, int k2, int meet) {
  return (k1 - 1) + (k2 - 1) - std::max(meet - 1, 0);
}

}  // namespace oracle
