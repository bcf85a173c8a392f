#pragma once

// Ground sets [n] = {1, ..., n} with n <= 63, subsets as 64-bit masks
// (element k lives in bit k-1), and permutations of [n].
//
// The canonical order on d-subsets, used for Pluecker coordinate indexing
// and for serialized basis lists, is lexicographic on the sorted element
// lists. This is not numeric order on masks: {1,4} precedes {2,3} even
// though its mask is larger.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace thincells {

inline constexpr int kMaxGroundSet = 63;

class Subset {
 public:
  Subset() = default;

  Subset(int n, std::uint64_t mask) : mask_(mask), n_(n) {
    if (n < 0 || n > kMaxGroundSet) throw InvalidParameter("ground set size out of range");
    if ((mask >> n) != 0) throw InvalidParameter("subset mask exceeds ground set");
  }

  static Subset of(int n, const std::vector<int>& elements) {
    std::uint64_t m = 0;
    for (int k : elements) {
      if (k < 1 || k > n) throw InvalidParameter("element outside ground set");
      const std::uint64_t bit = std::uint64_t{1} << (k - 1);
      if (m & bit) throw InvalidParameter("element listed twice");
      m |= bit;
    }
    return Subset(n, m);
  }

  static Subset of(int n, std::initializer_list<int> elements) {
    return of(n, std::vector<int>(elements));
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] std::uint64_t mask() const { return mask_; }
  [[nodiscard]] int cardinality() const { return std::popcount(mask_); }
  [[nodiscard]] bool empty() const { return mask_ == 0; }
  [[nodiscard]] bool contains(int k) const {
    return k >= 1 && k <= n_ && (mask_ >> (k - 1) & 1) != 0;
  }

  [[nodiscard]] Subset complement() const {
    const std::uint64_t all = (n_ == 0) ? 0 : (~std::uint64_t{0} >> (64 - n_));
    return Subset(n_, all & ~mask_);
  }

  [[nodiscard]] std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::uint64_t mask_ = 0;
  int n_ = 0;
};

// Canonical order: lexicographic on sorted element lists, a proper prefix
// coming first. For equal cardinalities this is settled by the smallest
// element where the two masks differ.
inline bool subset_less(const Subset& a, const Subset& b) {
  std::uint64_t x = a.mask(), y = b.mask();
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x), j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

namespace detail {

// Binomial coefficients within the ground-set range; C(63,31) still fits
// in 64 bits.
inline std::uint64_t choose64(int n, int k) {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, 64>, 64> t{};
    for (int i = 0; i < 64; ++i) {
      t[i][0] = 1;
      for (int j = 1; j <= i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  if (n < 0 || n > kMaxGroundSet || k < 0 || k > n) return 0;
  return table[n][k];
}

}  // namespace detail

// All d-subsets of [n] in canonical order.
inline std::vector<Subset> enumerate_subsets(int n, int d) {
  if (n < 0 || n > kMaxGroundSet) throw InvalidParameter("ground set size out of range");
  if (d < 0 || d > n) throw InvalidParameter("subset size out of range");
  std::vector<Subset> out;
  out.reserve(detail::choose64(n, d));
  std::vector<int> c(static_cast<std::size_t>(d));
  std::iota(c.begin(), c.end(), 1);
  for (;;) {
    std::uint64_t m = 0;
    for (int k : c) m |= std::uint64_t{1} << (k - 1);
    out.emplace_back(n, m);
    int t = d - 1;
    while (t >= 0 && c[t] == n - (d - 1 - t)) --t;
    if (t < 0) break;
    ++c[t];
    for (int s = t + 1; s < d; ++s) c[s] = c[s - 1] + 1;
  }
  return out;
}

// Position of s within enumerate_subsets(s.n(), |s|).
inline std::size_t subset_index(const Subset& s) {
  const int d = s.cardinality();
  std::size_t r = 0;
  int prev = 0, t = 0;
  for (int e : s.elements()) {
    for (int c = prev + 1; c < e; ++c) r += detail::choose64(s.n() - c, d - 1 - t);
    prev = e;
    ++t;
  }
  return r;
}

// Exact C(n,k); zero outside 0 <= k <= n.
inline Integer binomial(int n, int k) {
  if (n < 0) throw InvalidParameter("binomial requires n >= 0");
  if (k < 0 || k > n) return Integer(0);
  k = std::min(k, n - k);
  Integer v(1);
  for (int i = 1; i <= k; ++i) {
    v *= n - k + i;
    v /= i;  // divides exactly: v is a running binomial coefficient
  }
  return v;
}

class Permutation {
 public:
  // images[i-1] = sigma(i)
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n > kMaxGroundSet) throw InvalidParameter("permutation degree out of range");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : images_) {
      if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
        throw InvalidParameter("images do not form a permutation of [n]");
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  static Permutation identity(int n) {
    if (n < 0 || n > kMaxGroundSet) throw InvalidParameter("permutation degree out of range");
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
  }

  [[nodiscard]] int n() const { return static_cast<int>(images_.size()); }

  int operator()(int k) const {
    if (k < 1 || k > n()) throw InvalidParameter("permutation applied outside its domain");
    return images_[static_cast<std::size_t>(k - 1)];
  }

  [[nodiscard]] Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (int k = 1; k <= n(); ++k) im[static_cast<std::size_t>(images_[k - 1] - 1)] = k;
    return Permutation(std::move(im));
  }

  [[nodiscard]] const std::vector<int>& images() const { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// (sigma * tau)(k) = sigma(tau(k))
inline Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.n() != tau.n()) throw InvalidParameter("composing permutations of different degrees");
  std::vector<int> im(static_cast<std::size_t>(sigma.n()));
  for (int k = 1; k <= sigma.n(); ++k) im[static_cast<std::size_t>(k - 1)] = sigma(tau(k));
  return Permutation(std::move(im));
}

// The full symmetric group in lexicographic order on image vectors.
inline std::vector<Permutation> all_permutations(int n) {
  if (n < 0) throw InvalidParameter("negative degree");
  if (n > 8) throw TooLarge("full symmetric group scan limited to n <= 8");
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

inline Subset apply_permutation_to_subset(const Permutation& sigma, const Subset& I) {
  if (sigma.n() != I.n()) throw InvalidParameter("permutation degree does not match ground set");
  std::uint64_t m = 0;
  for (int e : I.elements()) m |= std::uint64_t{1} << (sigma(e) - 1);
  return Subset(I.n(), m);
}

// Sign of the inversion count of the image sequence (sigma(i)) with i
// running over I in increasing order.
inline int inversion_sign(const Permutation& sigma, const Subset& I) {
  if (sigma.n() != I.n()) throw InvalidParameter("permutation degree does not match ground set");
  const auto elems = I.elements();
  int inversions = 0;
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = a + 1; b < elems.size(); ++b)
      if (sigma(elems[a]) > sigma(elems[b])) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace thincells
