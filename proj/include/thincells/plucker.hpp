#pragma once

// Pluecker coordinates of row spaces, the matroid a subspace realizes,
// and the two group actions (diagonal torus, symmetric group) on both
// the matrix picture and the coordinate picture.

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"
#include "matroid.hpp"
#include "numbers.hpp"
#include "subsets.hpp"

namespace thincells {

class DiagonalTorusElement {
 public:
  explicit DiagonalTorusElement(std::vector<Rational> diag) : diag_(std::move(diag)) {
    if (diag_.empty() || diag_.size() > static_cast<std::size_t>(kMaxGroundSet))
      throw InvalidParameter("torus element size out of range");
    for (const Rational& t : diag_)
      if (t == 0) throw InvalidParameter("torus element with a zero entry");
  }

  [[nodiscard]] int n() const { return static_cast<int>(diag_.size()); }

  // 1-indexed diagonal entry
  const Rational& entry(int k) const {
    if (k < 1 || k > n()) throw InvalidParameter("torus entry index out of range");
    return diag_[static_cast<std::size_t>(k - 1)];
  }

  [[nodiscard]] const std::vector<Rational>& diag() const { return diag_; }

 private:
  std::vector<Rational> diag_;
};

// Coordinates indexed by the canonical order on d-subsets of [n].
// Never the zero vector.
class PluckerVector {
 public:
  PluckerVector(int n, int d, std::vector<Rational> coords)
      : n_(n), d_(d), coords_(std::move(coords)) {
    if (n < 1 || n > kMaxGroundSet || d < 1 || d > n)
      throw InvalidParameter("Pluecker shape out of range");
    if (coords_.size() != detail::choose64(n, d))
      throw InvalidParameter("coordinate count does not match C(n,d)");
    bool nonzero = false;
    for (const Rational& c : coords_)
      if (c != 0) {
        nonzero = true;
        break;
      }
    if (!nonzero) throw InvalidParameter("zero Pluecker vector");
  }

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int d() const { return d_; }
  [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }

  const Rational& at(const Subset& I) const {
    if (I.n() != n_ || I.cardinality() != d_)
      throw InvalidParameter("coordinate lookup with a subset of the wrong shape");
    return coords_[subset_index(I)];
  }

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;

 private:
  int n_ = 0, d_ = 0;
  std::vector<Rational> coords_;
};

// Maximal minors of w in canonical subset order, columns taken increasing.
inline PluckerVector plucker_vector(const RationalMatrix& w) {
  const std::size_t d = w.rows(), n = w.cols();
  if (n < 1 || n > static_cast<std::size_t>(kMaxGroundSet) || d < 1 || d > n)
    throw InvalidParameter("subspace matrix of unusable shape");
  if (rank(w) != d) throw NotASubspace("rows do not span a space of full row count");
  const std::vector<Subset> index = enumerate_subsets(static_cast<int>(n), static_cast<int>(d));
  std::vector<Rational> coords;
  coords.reserve(index.size());
  for (const Subset& I : index) coords.push_back(determinant(column_submatrix(w, I.elements())));
  return PluckerVector(static_cast<int>(n), static_cast<int>(d), std::move(coords));
}

// Column sets with non-vanishing minor. The result always satisfies
// exchange; constructing through the validating path keeps that honest.
inline Matroid matroid_of_subspace(const RationalMatrix& w) {
  const PluckerVector p = plucker_vector(w);
  const std::vector<Subset> index = enumerate_subsets(p.n(), p.d());
  std::vector<Subset> bases;
  for (std::size_t t = 0; t < index.size(); ++t)
    if (p.coords()[t] != 0) bases.push_back(index[t]);
  return make_matroid(p.n(), p.d(), std::move(bases));
}

// w * g: column k scaled by g_k.
inline RationalMatrix act_torus_subspace(const RationalMatrix& w, const DiagonalTorusElement& g) {
  if (static_cast<int>(w.cols()) != g.n())
    throw InvalidParameter("torus element does not match ambient dimension");
  RationalMatrix out = w;
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out.at(i, j) *= g.diag()[j];
  return out;
}

// Coordinate at I scaled by the product of g_i over i in I.
inline PluckerVector act_torus_plucker(const PluckerVector& p, const DiagonalTorusElement& g) {
  if (p.n() != g.n()) throw InvalidParameter("torus element does not match ambient dimension");
  const std::vector<Subset> index = enumerate_subsets(p.n(), p.d());
  std::vector<Rational> out;
  out.reserve(index.size());
  for (std::size_t t = 0; t < index.size(); ++t) {
    Rational v = p.coords()[t];
    for (int i : index[t].elements()) v *= g.diag()[static_cast<std::size_t>(i - 1)];
    out.push_back(std::move(v));
  }
  return PluckerVector(p.n(), p.d(), std::move(out));
}

// w * P_sigma where P_sigma has its 1 at (i, sigma(i)): column sigma(i)
// of the result is column i of w.
inline RationalMatrix act_sn_subspace(const Permutation& sigma, const RationalMatrix& w) {
  if (static_cast<int>(w.cols()) != sigma.n())
    throw InvalidParameter("permutation does not match ambient dimension");
  RationalMatrix out(w.rows(), w.cols());
  for (int i = 1; i <= sigma.n(); ++i) {
    const std::size_t src = static_cast<std::size_t>(i - 1);
    const std::size_t dst = static_cast<std::size_t>(sigma(i) - 1);
    for (std::size_t r = 0; r < w.rows(); ++r) out.at(r, dst) = w.at(r, src);
  }
  return out;
}

// Wedge push-forward: the value at K = sigma^{-1}(I) lands on I carrying
// the inversion parity of the image tuple (sigma(k)) over k in K. Putting
// the sign on the source tuple is what makes this commute with taking
// minors; the equivariance suite pins that down.
inline PluckerVector act_sn_plucker(const Permutation& sigma, const PluckerVector& p) {
  if (sigma.n() != p.n()) throw InvalidParameter("permutation does not match ambient dimension");
  const std::vector<Subset> index = enumerate_subsets(p.n(), p.d());
  const Permutation inv = sigma.inverse();
  std::vector<Rational> out;
  out.reserve(index.size());
  for (const Subset& I : index) {
    const Subset K = apply_permutation_to_subset(inv, I);
    out.push_back(p.at(K) * inversion_sign(sigma, K));
  }
  return PluckerVector(p.n(), p.d(), std::move(out));
}

// Scale so the first nonzero coordinate in canonical order becomes 1.
inline PluckerVector normalize_projective(const PluckerVector& p) {
  Rational pivot(0);
  for (const Rational& c : p.coords())
    if (c != 0) {
      pivot = c;
      break;
    }
  std::vector<Rational> out = p.coords();
  for (Rational& c : out) c /= pivot;
  return PluckerVector(p.n(), p.d(), std::move(out));
}

inline bool projectively_equal(const PluckerVector& a, const PluckerVector& b) {
  if (a.n() != b.n() || a.d() != b.d()) return false;
  return normalize_projective(a).coords() == normalize_projective(b).coords();
}

}  // namespace thincells
