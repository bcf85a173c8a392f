#pragma once

// Dense matrices over the rationals with exact elimination.
//
// Determinants run Bareiss' fraction-free scheme on a denominator-cleared
// integer copy. Every intermediate entry is itself a minor of the cleared
// matrix, the divisions come out exact, and coefficient growth stays
// polynomial where naive rational elimination blows up.

#include <cstddef>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "numbers.hpp"

namespace thincells {

class RationalMatrix {
 public:
  RationalMatrix() = default;

  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InvalidParameter("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.front().size() : 0;
    RationalMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw InvalidParameter("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(rows[i][j]);
    }
    return m;
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Reduced row echelon form.
inline RationalMatrix rref(RationalMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    const Rational pivot = m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) /= pivot;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return m;
}

inline std::size_t rank(const RationalMatrix& m) {
  const RationalMatrix e = rref(m);
  std::size_t r = 0;
  for (std::size_t i = 0; i < e.rows(); ++i)
    for (std::size_t j = 0; j < e.cols(); ++j)
      if (e.at(i, j) != 0) {
        ++r;
        break;
      }
  return r;
}

inline Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidParameter("determinant of a non-square matrix");
  const std::size_t d = m.rows();
  if (d == 0) return Rational(1);

  // clear denominators row by row, tracking the total scale
  std::vector<std::vector<Integer>> a(d, std::vector<Integer>(d));
  Integer scale(1);
  for (std::size_t i = 0; i < d; ++i) {
    Integer l(1);
    for (std::size_t j = 0; j < d; ++j) l = lcm(l, denominator(m.at(i, j)));
    for (std::size_t j = 0; j < d; ++j)
      a[i][j] = numerator(m.at(i, j)) * (l / denominator(m.at(i, j)));
    scale *= l;
  }

  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < d && a[p][k] == 0) ++p;
      if (p == d) return Rational(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i)
      for (std::size_t j = k + 1; j < d; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;  // exact
    prev = a[k][k];
  }
  Integer det = a[d - 1][d - 1];
  if (sign < 0) det = -det;
  return make_rational(det, scale);
}

inline RationalMatrix stack_rows(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw InvalidParameter("stacking matrices of different widths");
  RationalMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < bottom.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
  return m;
}

// Columns picked by 1-based indices, in the order given.
inline RationalMatrix column_submatrix(const RationalMatrix& m, const std::vector<int>& cols) {
  RationalMatrix out(m.rows(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 1 || static_cast<std::size_t>(cols[j]) > m.cols())
      throw InvalidParameter("column index out of range");
    for (std::size_t i = 0; i < m.rows(); ++i)
      out.at(i, j) = m.at(i, static_cast<std::size_t>(cols[j] - 1));
  }
  return out;
}

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidParameter("dimension mismatch in matrix product");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

}  // namespace thincells
