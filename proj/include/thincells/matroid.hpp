#pragma once

// Matroids presented by their bases, tuples of matroids with strictly
// increasing ranks on a shared ground set, basis-exchange validation,
// brute-force enumeration, and the relabelling action of S_n.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <future>
#include <optional>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "subsets.hpp"

namespace thincells {

struct Matroid {
  int n = 0;
  int d = 0;
  std::vector<Subset> bases;  // kept in canonical subset order

  friend bool operator==(const Matroid&, const Matroid&) = default;
};

struct Plurimatroid {
  std::vector<Matroid> components;  // shared n, strictly increasing ranks

  [[nodiscard]] int n() const { return components.empty() ? 0 : components.front().n; }

  [[nodiscard]] std::vector<int> ranks() const {
    std::vector<int> r;
    r.reserve(components.size());
    for (const Matroid& m : components) r.push_back(m.d);
    return r;
  }

  friend bool operator==(const Plurimatroid&, const Plurimatroid&) = default;
};

struct ExchangeViolation : std::runtime_error {
  Subset I, J;
  int element;  // i in I \ J admitting no exchange into J

  ExchangeViolation(Subset i_set, Subset j_set, int elem)
      : std::runtime_error("basis exchange fails: I=" + i_set.to_string() +
                           ", J=" + j_set.to_string() + ", i=" + std::to_string(elem)),
        I(i_set),
        J(j_set),
        element(elem) {}
};

namespace detail {

// Scan ordered pairs (I, J) and each i in I \ J for an exchange partner
// j in J \ I with (I \ i) + j in the family. `member` answers membership
// for candidate masks. Returns the first violation in scan order.
template <typename Member>
std::optional<std::tuple<std::uint64_t, std::uint64_t, int>> exchange_violation(
    const std::vector<std::uint64_t>& family, Member&& member) {
  for (const std::uint64_t I : family) {
    for (const std::uint64_t J : family) {
      const std::uint64_t only_i = I & ~J;
      if (only_i == 0) continue;
      const std::uint64_t only_j = J & ~I;
      for (std::uint64_t rest = only_i; rest != 0; rest &= rest - 1) {
        const std::uint64_t ibit = rest & (~rest + 1);
        const std::uint64_t base = I ^ ibit;
        bool found = false;
        for (std::uint64_t cand = only_j; cand != 0; cand &= cand - 1) {
          const std::uint64_t jbit = cand & (~cand + 1);
          if (member(base | jbit)) {
            found = true;
            break;
          }
        }
        if (!found) return std::make_tuple(I, J, std::countr_zero(ibit) + 1);
      }
    }
  }
  return std::nullopt;
}

inline void validate_family(int n, int d, const std::vector<Subset>& bases) {
  if (n < 1 || n > kMaxGroundSet || d < 1 || d > n)
    throw InvalidParameter("matroid parameters out of range");
  if (bases.empty()) throw InvalidFamily("empty basis family");
  for (const Subset& b : bases) {
    if (b.n() != n) throw InvalidFamily("basis on the wrong ground set");
    if (b.cardinality() != d) throw InvalidFamily("basis of the wrong cardinality");
  }
}

}  // namespace detail

inline std::optional<ExchangeViolation> find_exchange_violation(int n, int d,
                                                                const std::vector<Subset>& bases) {
  detail::validate_family(n, d, bases);
  std::vector<std::uint64_t> family;
  family.reserve(bases.size());
  for (const Subset& b : bases) family.push_back(b.mask());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  const auto member = [&](std::uint64_t m) {
    return std::binary_search(family.begin(), family.end(), m);
  };
  if (const auto v = detail::exchange_violation(family, member))
    return ExchangeViolation(Subset(n, std::get<0>(*v)), Subset(n, std::get<1>(*v)),
                             std::get<2>(*v));
  return std::nullopt;
}

inline bool check_exchange(int n, int d, const std::vector<Subset>& bases) {
  return !find_exchange_violation(n, d, bases).has_value();
}

inline Matroid make_matroid(int n, int d, std::vector<Subset> bases) {
  if (auto v = find_exchange_violation(n, d, bases)) throw std::move(*v);
  std::sort(bases.begin(), bases.end(), subset_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Matroid{n, d, std::move(bases)};
}

inline Matroid uniform_matroid(int n, int d) {
  if (n < 1 || n > kMaxGroundSet || d < 1 || d > n)
    throw InvalidParameter("uniform matroid parameters out of range");
  return Matroid{n, d, enumerate_subsets(n, d)};
}

inline Plurimatroid make_plurimatroid(std::vector<Matroid> components) {
  if (components.empty()) throw InvalidParameter("plurimatroid needs at least one component");
  const int n = components.front().n;
  for (std::size_t t = 0; t < components.size(); ++t) {
    if (components[t].n != n) throw InvalidParameter("components on different ground sets");
    if (t > 0 && components[t].d <= components[t - 1].d)
      throw InvalidParameter("component ranks must strictly increase");
  }
  return Plurimatroid{std::move(components)};
}

// Every non-empty family of d-subsets of [n], kept when it satisfies
// exchange. 2^C(n,d) - 1 candidates, so this is gated hard on n.
// The candidate space is split across `workers` (0 = hardware pick);
// results are sorted afterwards, so the worker count never shows.
inline std::vector<Matroid> enumerate_matroids(int n, int d, unsigned workers = 0) {
  if (n < 1 || d < 1 || d > n) throw InvalidParameter("matroid parameters out of range");
  if (n > 6) throw TooLarge("matroid enumeration is brute force over families; n <= 6");

  const std::vector<Subset> ground = enumerate_subsets(n, d);
  const int N = static_cast<int>(ground.size());  // at most C(6,3) = 20
  std::vector<std::uint64_t> smask(static_cast<std::size_t>(N));
  for (int t = 0; t < N; ++t) smask[static_cast<std::size_t>(t)] = ground[static_cast<std::size_t>(t)].mask();
  const std::uint64_t total = std::uint64_t{1} << N;

  const auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> good;
    std::vector<std::uint64_t> family;
    family.reserve(static_cast<std::size_t>(N));
    for (std::uint64_t f = lo; f < hi; ++f) {
      family.clear();
      std::uint64_t member = 0;  // bit m set iff the subset with mask m is present
      for (int t = 0; t < N; ++t)
        if (f >> t & 1) {
          family.push_back(smask[static_cast<std::size_t>(t)]);
          member |= std::uint64_t{1} << smask[static_cast<std::size_t>(t)];
        }
      const auto lookup = [member](std::uint64_t m) { return (member >> m & 1) != 0; };
      if (!detail::exchange_violation(family, lookup))
        good.push_back(static_cast<std::uint32_t>(f));
    }
    return good;
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, 64u);

  std::vector<std::uint32_t> found;
  if (workers <= 1 || total < (1u << 12)) {
    found = scan(1, total);
  } else {
    std::vector<std::future<std::vector<std::uint32_t>>> parts;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = 1 + (total - 1) * w / workers;
      const std::uint64_t hi = 1 + (total - 1) * (w + 1) / workers;
      if (lo < hi) parts.push_back(std::async(std::launch::async, scan, lo, hi));
    }
    for (auto& part : parts) {
      const auto g = part.get();
      found.insert(found.end(), g.begin(), g.end());
    }
  }

  // canonical output order: lexicographic on the sorted basis lists, which
  // here is lexicographic on the ascending subset-index sequences
  std::sort(found.begin(), found.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
      const int i = std::countr_zero(a), j = std::countr_zero(b);
      if (i != j) return i < j;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });

  std::vector<Matroid> out;
  out.reserve(found.size());
  for (const std::uint32_t f : found) {
    std::vector<Subset> bases;
    bases.reserve(static_cast<std::size_t>(std::popcount(f)));
    for (int t = 0; t < N; ++t)
      if (f >> t & 1) bases.push_back(ground[static_cast<std::size_t>(t)]);
    out.push_back(Matroid{n, d, std::move(bases)});
  }
  return out;
}

inline Matroid permute_matroid(const Permutation& sigma, const Matroid& m) {
  if (sigma.n() != m.n) throw InvalidParameter("permutation degree does not match ground set");
  std::vector<Subset> bases;
  bases.reserve(m.bases.size());
  for (const Subset& b : m.bases) bases.push_back(apply_permutation_to_subset(sigma, b));
  std::sort(bases.begin(), bases.end(), subset_less);
  // relabelling preserves exchange, no revalidation needed
  return Matroid{m.n, m.d, std::move(bases)};
}

inline Plurimatroid permute_plurimatroid(const Permutation& sigma, const Plurimatroid& p) {
  std::vector<Matroid> components;
  components.reserve(p.components.size());
  for (const Matroid& m : p.components) components.push_back(permute_matroid(sigma, m));
  return Plurimatroid{std::move(components)};
}

inline bool matroid_less(const Matroid& a, const Matroid& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.d != b.d) return a.d < b.d;
  return std::lexicographical_compare(a.bases.begin(), a.bases.end(), b.bases.begin(),
                                      b.bases.end(), subset_less);
}

inline bool plurimatroid_less(const Plurimatroid& a, const Plurimatroid& b) {
  return std::lexicographical_compare(a.components.begin(), a.components.end(),
                                      b.components.begin(), b.components.end(), matroid_less);
}

// One representative per S_n-orbit: the minimum of the orbit under the
// total order above. Deduplicated and sorted, hence idempotent.
inline std::vector<Plurimatroid> orbit_representatives(const std::vector<Plurimatroid>& input) {
  if (input.empty()) return {};
  const int n = input.front().n();
  if (n > 8) throw TooLarge("orbit scan walks all of S_n; n <= 8");
  const std::vector<int> signature = input.front().ranks();
  for (const Plurimatroid& m : input)
    if (m.n() != n || m.ranks() != signature)
      throw InvalidParameter("orbit scan needs a single shared signature");

  const std::vector<Permutation> group = all_permutations(n);
  std::vector<Plurimatroid> reps;
  reps.reserve(input.size());
  for (const Plurimatroid& m : input) {
    Plurimatroid best = m;
    for (const Permutation& sigma : group) {
      Plurimatroid image = permute_plurimatroid(sigma, m);
      if (plurimatroid_less(image, best)) best = std::move(image);
    }
    reps.push_back(std::move(best));
  }
  std::sort(reps.begin(), reps.end(), plurimatroid_less);
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

inline std::size_t orbit_size(const Plurimatroid& m) {
  if (m.n() > 8) throw TooLarge("orbit scan walks all of S_n; n <= 8");
  std::vector<Plurimatroid> images;
  for (const Permutation& sigma : all_permutations(m.n()))
    images.push_back(permute_plurimatroid(sigma, m));
  std::sort(images.begin(), images.end(), plurimatroid_less);
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images.size();
}

// Cartesian product of the per-rank enumerations, first component slowest.
inline std::vector<Plurimatroid> enumerate_plurimatroids(int n, const std::vector<int>& dims,
                                                         unsigned workers = 0) {
  if (dims.empty()) throw InvalidParameter("empty rank signature");
  for (std::size_t t = 0; t < dims.size(); ++t) {
    if (dims[t] < 1 || dims[t] > n) throw InvalidParameter("rank outside 1..n");
    if (t > 0 && dims[t] <= dims[t - 1]) throw InvalidParameter("ranks must strictly increase");
  }
  std::vector<std::vector<Matroid>> pools;
  pools.reserve(dims.size());
  for (const int d : dims) pools.push_back(enumerate_matroids(n, d, workers));

  std::vector<Plurimatroid> out;
  std::vector<std::size_t> idx(dims.size(), 0);
  for (;;) {
    std::vector<Matroid> components;
    components.reserve(dims.size());
    for (std::size_t t = 0; t < dims.size(); ++t) components.push_back(pools[t][idx[t]]);
    out.push_back(Plurimatroid{std::move(components)});
    std::size_t t = dims.size();
    while (t > 0) {
      --t;
      if (++idx[t] < pools[t].size()) break;
      idx[t] = 0;
      if (t == 0) return out;
    }
  }
}

}  // namespace thincells
