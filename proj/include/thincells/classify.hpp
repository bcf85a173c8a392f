#pragma once

// The combinatorial side of the two-step case (line inside hyperplane):
// support pairs, the empty / complete / proper trichotomy, cell dimension,
// closed count formulas with brute-force counterparts, and the zone layout
// of the restricted count table.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matroid.hpp"
#include "numbers.hpp"
#include "subsets.hpp"

namespace thincells {

enum class CellClass { Empty, Complete, Proper };

inline const char* to_string(CellClass c) {
  switch (c) {
    case CellClass::Empty: return "Empty";
    case CellClass::Complete: return "Complete";
    case CellClass::Proper: return "Proper";
  }
  return "?";
}

// The pair of support sets attached to a rank-(1, n-1) plurimatroid:
// K1 collects the singleton bases, K2 the complements of the hyperplane
// bases. Both non-empty by construction.
struct KPair {
  int n = 0;
  Subset k1, k2;

  friend bool operator==(const KPair&, const KPair&) = default;
};

inline KPair make_k_pair(int n, const Subset& k1, const Subset& k2) {
  if (n < 3 || n > kMaxGroundSet)
    throw InvalidParameter("support pairs live on ground sets with n >= 3");
  if (k1.n() != n || k2.n() != n) throw InvalidParameter("support sets on the wrong ground set");
  if (k1.empty() || k2.empty()) throw InvalidParameter("support sets must be non-empty");
  return KPair{n, k1, k2};
}

inline KPair k_sets(const Plurimatroid& m) {
  if (m.components.size() != 2)
    throw InvalidSignature("support sets need exactly two components");
  const Matroid& first = m.components.front();
  const Matroid& second = m.components.back();
  const int n = m.n();
  if (first.d != 1 || second.d != n - 1)
    throw InvalidSignature("support sets need ranks (1, n-1)");
  std::uint64_t k1 = 0;
  for (const Subset& b : first.bases) k1 |= b.mask();
  std::uint64_t k2 = 0;
  for (const Subset& b : second.bases) k2 |= b.complement().mask();
  return make_k_pair(n, Subset(n, k1), Subset(n, k2));
}

// Inverse of k_sets: singletons from K1, co-singletons from K2. Any
// non-empty family works at these ranks, so construction cannot fail.
inline Plurimatroid plurimatroid_of_k_pair(const KPair& kp) {
  std::vector<Subset> b1, b2;
  for (int k : kp.k1.elements()) b1.push_back(Subset::of(kp.n, {k}));
  for (int k : kp.k2.elements()) b2.push_back(Subset::of(kp.n, {k}).complement());
  return make_plurimatroid(
      {make_matroid(kp.n, 1, std::move(b1)), make_matroid(kp.n, kp.n - 1, std::move(b2))});
}

inline CellClass classify(const KPair& kp) {
  switch (std::popcount(kp.k1.mask() & kp.k2.mask())) {
    case 0: return CellClass::Complete;
    case 1: return CellClass::Empty;
    default: return CellClass::Proper;
  }
}

// |K1| + |K2| - 2 for complete cells, one less for proper ones.
inline int dimension(const KPair& kp) {
  const int s = kp.k1.cardinality() + kp.k2.cardinality();
  switch (classify(kp)) {
    case CellClass::Complete: return s - 2;
    case CellClass::Proper: return s - 3;
    case CellClass::Empty: break;
  }
  throw EmptyCell("empty cells carry no dimension");
}

struct CountRecord {
  int n = 0;
  Integer complete, proper, empty, total;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

inline CountRecord count_global(int n) {
  if (n < 3) throw InvalidParameter("count formulas assume n >= 3");
  using boost::multiprecision::pow;
  const Integer p2 = pow(Integer(2), static_cast<unsigned>(n));
  const Integer p3 = pow(Integer(3), static_cast<unsigned>(n));
  const Integer p4 = pow(Integer(4), static_cast<unsigned>(n));
  CountRecord rec;
  rec.n = n;
  rec.complete = p3 - 2 * p2 + 1;
  rec.empty = n * pow(Integer(3), static_cast<unsigned>(n - 1));
  rec.proper = p4 - p3 - rec.empty;
  rec.total = (p2 - 1) * (p2 - 1);
  return rec;
}

struct RestrictedCounts {
  Integer c, p, e;  // complete, proper, empty among pairs with |K1| = i, |K2| = j

  friend bool operator==(const RestrictedCounts&, const RestrictedCounts&) = default;
};

inline RestrictedCounts count_restricted(int n, int i, int j) {
  if (n < 3) throw InvalidParameter("count formulas assume n >= 3");
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidParameter("sizes must lie in 1..n");
  RestrictedCounts r;
  r.c = binomial(n, i) * binomial(n - i, j);
  r.e = i * binomial(n, i) * binomial(n - i, j - 1);
  r.p = binomial(n, i) * (binomial(n, j) - binomial(n - i, j) - i * binomial(n - i, j - 1));
  return r;
}

// Zones of the (i, j) table, checked in this order:
//   1: j <= n-i with i = 1 or j = 1 (complete and empty cells only)
//   2: j <= n-i with i, j >= 2      (all three classes)
//   3: the corners (1, n) and (n, 1) (empty cells only, exactly n)
//   4: the band j = n-i+1, 2 <= i <= n-1 (proper and empty only)
//   5: j >= n-i+2                    (proper only)
inline int zone(int n, int i, int j) {
  if (n < 3) throw InvalidParameter("zone layout assumes n >= 3");
  if (i < 1 || i > n || j < 1 || j > n) throw InvalidParameter("sizes must lie in 1..n");
  if (j <= n - i && (i == 1 || j == 1)) return 1;
  if (j <= n - i) return 2;
  if ((i == 1 && j == n) || (i == n && j == 1)) return 3;
  if (j == n - i + 1 && i >= 2 && i <= n - 1) return 4;
  return 5;
}

struct ZoneCell {
  int zone = 0;
  std::optional<Integer> complete, proper, empty;  // displayed values only

  friend bool operator==(const ZoneCell&, const ZoneCell&) = default;
};

struct ZoneTable {
  int n = 0;
  std::vector<std::vector<ZoneCell>> grid;  // grid[i-1][j-1]
  Integer complete, proper, nonempty, empty, possible;
};

inline ZoneTable zone_table(int n) {
  if (n < 3) throw InvalidParameter("zone layout assumes n >= 3");
  ZoneTable table;
  table.n = n;
  table.grid.assign(static_cast<std::size_t>(n), std::vector<ZoneCell>(static_cast<std::size_t>(n)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      ZoneCell cell;
      cell.zone = zone(n, i, j);
      const RestrictedCounts general = count_restricted(n, i, j);
      switch (cell.zone) {
        case 1:
          cell.complete = general.c;
          cell.empty = general.e;
          break;
        case 2:
          cell.complete = general.c;
          cell.proper = general.p;
          cell.empty = general.e;
          break;
        case 3:
          cell.empty = Integer(n);
          break;
        case 4:
          // the band's own closed form, not the general formula
          cell.proper = binomial(n, i) * (binomial(n, i - 1) - i);
          cell.empty = i * binomial(n, i);
          break;
        case 5:
          cell.proper = binomial(n, i) * binomial(n, j);
          break;
      }
      table.grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = cell;
    }
  }
  const CountRecord global = count_global(n);
  table.complete = global.complete;
  table.proper = global.proper;
  table.empty = global.empty;
  table.possible = global.total;
  table.nonempty = global.total - global.empty;
  return table;
}

inline std::string cell_text(const ZoneCell& cell) {
  std::string s;
  const auto add = [&s](const char* label, const Integer& v) {
    if (!s.empty()) s += ", ";
    s += label;
    s += " = ";
    s += v.str();
  };
  if (cell.complete) add("C", *cell.complete);
  if (cell.proper) add("P", *cell.proper);
  if (cell.empty) add("E", *cell.empty);
  return s;
}

inline std::string render_ascii(const ZoneTable& table) {
  const int n = table.n;
  std::vector<std::vector<std::string>> text(static_cast<std::size_t>(n) + 1,
                                             std::vector<std::string>(static_cast<std::size_t>(n) + 1));
  for (int j = 1; j <= n; ++j) text[0][static_cast<std::size_t>(j)] = "j=" + std::to_string(j);
  for (int i = 1; i <= n; ++i) {
    text[static_cast<std::size_t>(i)][0] = "i=" + std::to_string(i);
    for (int j = 1; j <= n; ++j)
      text[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          cell_text(table.grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
  }
  std::vector<std::size_t> width(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& row : text)
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c].size() > width[c]) width[c] = row[c].size();

  std::ostringstream out;
  for (const auto& row : text) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 < row.size())
        out << row[c] << std::string(width[c] - row[c].size(), ' ') << "  ";
      else
        out << row[c];
    }
    out << '\n';
  }
  out << '\n';
  out << "# COMPLETE CELLS = " << table.complete.str() << '\n';
  out << "# PROPER CELLS = " << table.proper.str() << '\n';
  out << "# NON-EMPTY CELLS = " << table.nonempty.str() << '\n';
  out << "# EMPTY CELLS = " << table.empty.str() << '\n';
  out << "# POSSIBLE CELLS = " << table.possible.str() << '\n';
  return out.str();
}

inline std::string render_csv(const ZoneTable& table) {
  std::ostringstream out;
  out << "i,j,zone,complete,proper,empty\n";
  for (int i = 1; i <= table.n; ++i)
    for (int j = 1; j <= table.n; ++j) {
      const ZoneCell& cell =
          table.grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      out << i << ',' << j << ',' << cell.zone << ',';
      out << (cell.complete ? cell.complete->str() : "") << ',';
      out << (cell.proper ? cell.proper->str() : "") << ',';
      out << (cell.empty ? cell.empty->str() : "") << '\n';
    }
  return out.str();
}

// Direct sweep over all (K1, K2) pairs. 4^n iterations, gated accordingly.
inline CountRecord brute_force_counts(int n) {
  if (n < 3) throw InvalidParameter("pair sweep assumes n >= 3");
  if (n > 14) throw TooLarge("pair sweep is 4^n; n <= 14");
  std::uint64_t complete = 0, proper = 0, empty = 0;
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t a = 1; a < top; ++a)
    for (std::uint64_t b = 1; b < top; ++b) {
      switch (std::popcount(a & b)) {
        case 0: ++complete; break;
        case 1: ++empty; break;
        default: ++proper; break;
      }
    }
  CountRecord rec;
  rec.n = n;
  rec.complete = complete;
  rec.proper = proper;
  rec.empty = empty;
  rec.total = Integer(complete) + proper + empty;
  return rec;
}

// Same sweep tallied by (|K1|, |K2|); entry [i][j], 1-based.
inline std::vector<std::vector<RestrictedCounts>> brute_force_restricted(int n) {
  if (n < 3) throw InvalidParameter("pair sweep assumes n >= 3");
  if (n > 14) throw TooLarge("pair sweep is 4^n; n <= 14");
  std::vector<std::vector<std::array<std::uint64_t, 3>>> tally(
      static_cast<std::size_t>(n) + 1,
      std::vector<std::array<std::uint64_t, 3>>(static_cast<std::size_t>(n) + 1, {0, 0, 0}));
  const std::uint64_t top = std::uint64_t{1} << n;
  for (std::uint64_t a = 1; a < top; ++a) {
    const auto i = static_cast<std::size_t>(std::popcount(a));
    for (std::uint64_t b = 1; b < top; ++b) {
      const auto j = static_cast<std::size_t>(std::popcount(b));
      const int meet = std::popcount(a & b);
      ++tally[i][j][meet == 0 ? 0 : (meet == 1 ? 2 : 1)];
    }
  }
  std::vector<std::vector<RestrictedCounts>> out(
      static_cast<std::size_t>(n) + 1,
      std::vector<RestrictedCounts>(static_cast<std::size_t>(n) + 1));
  for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
    for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j) {
      out[i][j].c = tally[i][j][0];
      out[i][j].p = tally[i][j][1];
      out[i][j].e = tally[i][j][2];
    }
  return out;
}

}  // namespace thincells
