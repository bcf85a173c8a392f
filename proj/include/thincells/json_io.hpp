#pragma once

// JSON bindings for the core types, kept out of the umbrella header so the
// library itself stays dependency-free. Matrices serialize as arrays of rows
// with exact rational strings; families validate on the way in.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "classify.hpp"
#include "flag.hpp"
#include "matrix.hpp"
#include "matroid.hpp"
#include "numbers.hpp"
#include "plucker.hpp"
#include "subsets.hpp"

namespace nlohmann {

template <>
struct adl_serializer<thincells::Rational> {
  static void to_json(json& j, const thincells::Rational& r) {
    j = thincells::rational_to_string(r);
  }
  static void from_json(const json& j, thincells::Rational& r) {
    if (j.is_string()) {
      r = thincells::parse_rational(j.get<std::string>());
    } else if (j.is_number_integer()) {
      r = thincells::Rational(j.get<std::int64_t>());
    } else if (j.is_number_unsigned()) {
      r = thincells::Rational(j.get<std::uint64_t>());
    } else {
      throw thincells::InvalidParameter("rational entries must be strings or integers");
    }
  }
};

}  // namespace nlohmann

namespace thincells {

// Values that fit in an int64 stay JSON numbers; anything larger becomes a
// decimal string so no reader silently rounds it.
inline nlohmann::json integer_to_json(const Integer& v) {
  if (fits_int64(v)) return nlohmann::json(static_cast<std::int64_t>(v));
  return nlohmann::json(v.str());
}

inline void to_json(nlohmann::json& j, const Subset& s) { j = s.elements(); }

inline void to_json(nlohmann::json& j, const Matroid& m) {
  j = nlohmann::json{{"n", m.n}, {"d", m.d}, {"bases", m.bases}};
}

inline void from_json(const nlohmann::json& j, Matroid& m) {
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  std::vector<Subset> bases;
  for (const auto& entry : j.at("bases"))
    bases.push_back(Subset::of(n, entry.get<std::vector<int>>()));
  m = make_matroid(n, d, std::move(bases));
}

inline void to_json(nlohmann::json& j, const Plurimatroid& m) {
  j = nlohmann::json{{"n", m.n()}, {"components", m.components}};
}

inline void from_json(const nlohmann::json& j, Plurimatroid& m) {
  std::vector<Matroid> components = j.at("components").get<std::vector<Matroid>>();
  m = make_plurimatroid(std::move(components));
  if (j.contains("n") && j.at("n").get<int>() != m.n())
    throw InvalidParameter("declared n disagrees with the components");
}

inline void to_json(nlohmann::json& j, const RationalMatrix& m) {
  j = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c));
    j.push_back(std::move(row));
  }
}

inline void from_json(const nlohmann::json& j, RationalMatrix& m) {
  const nlohmann::json& entries = j.is_object() ? j.at("entries") : j;
  if (!entries.is_array() || entries.empty())
    throw InvalidParameter("matrix JSON must be a non-empty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : entries) rows.push_back(row.get<std::vector<Rational>>());
  m = RationalMatrix::from_rows(rows);
}

inline void to_json(nlohmann::json& j, const Flag& f) {
  j = nlohmann::json{{"n", f.n}, {"dims", f.dims}, {"stages", f.stages}};
}

inline void from_json(const nlohmann::json& j, Flag& f) {
  std::vector<RationalMatrix> stages = j.at("stages").get<std::vector<RationalMatrix>>();
  f = make_flag(std::move(stages));
  if (j.contains("n") && j.at("n").get<int>() != f.n)
    throw InvalidParameter("declared n disagrees with the stages");
  if (j.contains("dims") && j.at("dims").get<std::vector<int>>() != f.dims)
    throw InvalidParameter("declared dims disagree with the stages");
}

inline void to_json(nlohmann::json& j, const PluckerVector& p) {
  nlohmann::json coords = nlohmann::json::array();
  for (const Subset& s : enumerate_subsets(p.n(), p.d()))
    coords.push_back(nlohmann::json{{"subset", s}, {"value", p.at(s)}});
  j = nlohmann::json{{"n", p.n()}, {"d", p.d()}, {"coordinates", std::move(coords)}};
}

inline void to_json(nlohmann::json& j, CellClass c) { j = std::string(to_string(c)); }

inline void to_json(nlohmann::json& j, const CountRecord& rec) {
  j = nlohmann::json{{"n", rec.n},
                     {"complete", integer_to_json(rec.complete)},
                     {"proper", integer_to_json(rec.proper)},
                     {"empty", integer_to_json(rec.empty)},
                     {"total", integer_to_json(rec.total)}};
}

inline void to_json(nlohmann::json& j, const ZoneTable& table) {
  nlohmann::json grid = nlohmann::json::array();
  for (const auto& row : table.grid) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const ZoneCell& cell : row) {
      nlohmann::json jcell{{"zone", cell.zone}};
      if (cell.complete) jcell["complete"] = integer_to_json(*cell.complete);
      if (cell.proper) jcell["proper"] = integer_to_json(*cell.proper);
      if (cell.empty) jcell["empty"] = integer_to_json(*cell.empty);
      jrow.push_back(std::move(jcell));
    }
    grid.push_back(std::move(jrow));
  }
  j = nlohmann::json{{"n", table.n},
                     {"grid", std::move(grid)},
                     {"summary",
                      nlohmann::json{{"complete", integer_to_json(table.complete)},
                                     {"proper", integer_to_json(table.proper)},
                                     {"nonempty", integer_to_json(table.nonempty)},
                                     {"empty", integer_to_json(table.empty)},
                                     {"possible", integer_to_json(table.possible)}}}};
}

}  // namespace thincells
