#pragma once

// Flags of subspaces presented stagewise by spanning rows, the plurimatroid
// a flag realizes, torus stabilizer dimensions through the character
// lattice, the line/hyperplane incidence pairing, seeded flag sampling,
// and the witness construction realizing a prescribed support pair.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "matroid.hpp"
#include "numbers.hpp"
#include "plucker.hpp"
#include "sampling.hpp"
#include "subsets.hpp"

namespace thincells {

struct Flag {
  int n = 0;
  std::vector<int> dims;
  std::vector<RationalMatrix> stages;  // stage j spans a dims[j]-dimensional space

  friend bool operator==(const Flag&, const Flag&) = default;
};

// Validates ambient consistency, full rank per stage, and containment of
// consecutive stages (checked as rank of the stacked rows).
inline Flag make_flag(std::vector<RationalMatrix> stages) {
  if (stages.empty()) throw InvalidParameter("flag needs at least one stage");
  const std::size_t n = stages.front().cols();
  if (n < 1 || n > static_cast<std::size_t>(kMaxGroundSet))
    throw InvalidParameter("ambient dimension out of range");
  std::vector<int> dims;
  dims.reserve(stages.size());
  for (std::size_t j = 0; j < stages.size(); ++j) {
    if (stages[j].cols() != n) throw InvalidParameter("stages live in different ambient spaces");
    const std::size_t dj = stages[j].rows();
    if (dj < 1 || dj > n) throw InvalidParameter("stage row count out of range");
    if (j > 0 && dj <= stages[j - 1].rows())
      throw InvalidParameter("stage dimensions must strictly increase");
    if (rank(stages[j]) != dj) throw RankDeficient(static_cast<int>(j) + 1);
    dims.push_back(static_cast<int>(dj));
  }
  for (std::size_t j = 0; j + 1 < stages.size(); ++j)
    if (rank(stack_rows(stages[j], stages[j + 1])) != stages[j + 1].rows())
      throw NotNested(static_cast<int>(j) + 1);
  return Flag{static_cast<int>(n), std::move(dims), std::move(stages)};
}

inline Plurimatroid plurimatroid_of_flag(const Flag& f) {
  std::vector<Matroid> components;
  components.reserve(f.stages.size());
  for (const RationalMatrix& stage : f.stages) components.push_back(matroid_of_subspace(stage));
  return make_plurimatroid(std::move(components));
}

inline bool cell_membership(const Flag& f, const Plurimatroid& m) {
  if (f.n != m.n() || f.dims != m.ranks())
    throw InvalidParameter("flag and plurimatroid signatures differ");
  return plurimatroid_of_flag(f) == m;
}

// Exponent rows e_I - e_{I0}, one per non-reference basis per component,
// with I0 the canonical least basis of its component. Entries are -1/0/1
// and every row sums to zero.
struct CharacterLattice {
  int n = 0;
  std::vector<std::vector<int>> rows;
};

inline CharacterLattice character_lattice(const Plurimatroid& m) {
  CharacterLattice lattice{m.n(), {}};
  for (const Matroid& component : m.components) {
    const Subset& ref = component.bases.front();
    for (std::size_t t = 1; t < component.bases.size(); ++t) {
      std::vector<int> row(static_cast<std::size_t>(lattice.n), 0);
      for (int e : component.bases[t].elements()) row[static_cast<std::size_t>(e - 1)] += 1;
      for (int e : ref.elements()) row[static_cast<std::size_t>(e - 1)] -= 1;
      lattice.rows.push_back(std::move(row));
    }
  }
  return lattice;
}

inline int lattice_rank(const CharacterLattice& lattice) {
  if (lattice.rows.empty()) return 0;
  RationalMatrix m(lattice.rows.size(), static_cast<std::size_t>(lattice.n));
  for (std::size_t i = 0; i < lattice.rows.size(); ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(lattice.n); ++j)
      m.at(i, j) = Rational(lattice.rows[i][j]);
  return static_cast<int>(rank(m));
}

// (dimension of the pointwise stabilizer, dimension of the torus image).
// The image of the diagonal torus acting on the cell is cut out by the
// character lattice, so its dimension is the lattice rank r and the
// stabilizer has dimension n - r.
inline std::pair<int, int> stabilizer_dimensions(const Plurimatroid& m) {
  const int r = lattice_rank(character_lattice(m));
  return {m.n() - r, r};
}

// sum over k of (-1)^(k-1) alpha_k v_k; zero exactly when the line spanned
// by v lies inside the hyperplane with Pluecker coordinates alpha.
inline Rational incidence_pairing(const std::vector<Rational>& v,
                                  const std::vector<Rational>& alpha) {
  if (v.empty() || v.size() != alpha.size())
    throw InvalidParameter("incidence pairing needs two vectors of equal positive length");
  Rational s(0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k % 2 == 0)
      s += alpha[k] * v[k];
    else
      s -= alpha[k] * v[k];
  }
  return s;
}

// alpha_k = Pluecker coordinate of w at the complement of {k}.
inline std::vector<Rational> hyperplane_coordinates(const RationalMatrix& w) {
  if (w.rows() + 1 != w.cols())
    throw InvalidParameter("hyperplane coordinates need an (n-1) x n matrix");
  const PluckerVector p = plucker_vector(w);
  const int n = static_cast<int>(w.cols());
  std::vector<Rational> alpha;
  alpha.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) alpha.push_back(p.at(Subset::of(n, {k}).complement()));
  return alpha;
}

// Flag variety dimension for signature dims inside an n-dimensional space:
// sum of d_j (d_{j+1} - d_j) with the convention d_{k+1} = n.
inline int flag_variety_dimension(int n, const std::vector<int>& dims) {
  if (n < 1 || n > kMaxGroundSet) throw InvalidParameter("ambient dimension out of range");
  if (dims.empty()) throw InvalidParameter("empty dimension signature");
  int s = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (dims[j] < 1 || dims[j] > n) throw InvalidParameter("stage dimension out of range");
    if (j > 0 && dims[j] <= dims[j - 1])
      throw InvalidParameter("stage dimensions must strictly increase");
    const int next = (j + 1 < dims.size()) ? dims[j + 1] : n;
    s += dims[j] * (next - dims[j]);
  }
  return s;
}

// Stagewise sampling with integer entries in [-bound, bound]. Each stage
// extends the previous one by fresh random rows, so nesting holds by
// construction; only full rank is retried.
inline Flag random_flag(int n, const std::vector<int>& dims, std::uint64_t seed, int bound = 10,
                        int retries = 200) {
  if (n < 1 || n > kMaxGroundSet) throw InvalidParameter("ambient dimension out of range");
  if (dims.empty()) throw InvalidParameter("empty dimension signature");
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (dims[j] < 1 || dims[j] > n) throw InvalidParameter("stage dimension out of range");
    if (j > 0 && dims[j] <= dims[j - 1])
      throw InvalidParameter("stage dimensions must strictly increase");
  }
  if (bound < 1) throw InvalidParameter("entry bound must be at least 1");

  std::mt19937_64 rng(seed);
  std::vector<RationalMatrix> stages;
  stages.reserve(dims.size());
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const std::size_t prev = j ? static_cast<std::size_t>(dims[j - 1]) : 0;
    const std::size_t want = static_cast<std::size_t>(dims[j]);
    bool done = false;
    for (int attempt = 0; attempt < retries && !done; ++attempt) {
      RationalMatrix stage(want, static_cast<std::size_t>(n));
      for (std::size_t i = 0; i < prev; ++i)
        for (std::size_t c = 0; c < stage.cols(); ++c) stage.at(i, c) = stages[j - 1].at(i, c);
      for (std::size_t i = prev; i < want; ++i)
        for (std::size_t c = 0; c < stage.cols(); ++c)
          stage.at(i, c) = Rational(uniform_int(rng, -bound, bound));
      if (rank(stage) == want) {
        stages.push_back(std::move(stage));
        done = true;
      }
    }
    if (!done) throw SamplingExhausted("no full-rank stage within the retry budget");
  }
  return make_flag(std::move(stages));
}

// A point of the cell with line support K1 and hyperplane support K2,
// which exists exactly when |K1 & K2| != 1.
//
// The hyperplane is the kernel of x -> sum of x_k over k in K2, spanned
// by consecutive differences inside K2 plus the unit vectors off K2 (the
// pivots strictly increase, so independence is visible). The line is the
// K1 indicator vector except that the slot at the largest common element
// absorbs the balance, making the K2-sum vanish.
inline Flag witness_flag(const Subset& k1, const Subset& k2, int n) {
  if (n < 3 || n > kMaxGroundSet)
    throw InvalidParameter("witness construction needs 1 < n-1, so n >= 3");
  if (k1.n() != n || k2.n() != n)
    throw InvalidParameter("support sets on the wrong ground set");
  if (k1.empty() || k2.empty()) throw InvalidParameter("support sets must be non-empty");
  const Subset meet(n, k1.mask() & k2.mask());
  const int m = meet.cardinality();
  if (m == 1) throw EmptyCell("a single common support element forces the cell empty");

  const std::vector<int> k2e = k2.elements();
  RationalMatrix hyper(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n));
  std::size_t r = 0, t = 0;
  for (int k = 1; k <= n; ++k) {
    if (t < k2e.size() && k == k2e[t]) {
      if (t + 1 < k2e.size()) {
        hyper.at(r, static_cast<std::size_t>(k - 1)) = 1;
        hyper.at(r, static_cast<std::size_t>(k2e[t + 1] - 1)) = -1;
        ++r;
      }
      ++t;
    } else {
      hyper.at(r, static_cast<std::size_t>(k - 1)) = 1;
      ++r;
    }
  }

  RationalMatrix line(1, static_cast<std::size_t>(n));
  for (int k : k1.elements()) line.at(0, static_cast<std::size_t>(k - 1)) = 1;
  if (m >= 2) line.at(0, static_cast<std::size_t>(meet.elements().back() - 1)) = Rational(1 - m);

  return make_flag({std::move(line), std::move(hyper)});
}

}  // namespace thincells
