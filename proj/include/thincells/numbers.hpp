#pragma once

// Exact arithmetic. Everything downstream assumes rationals are kept
// reduced with a positive denominator, which boost's rational adaptor
// guarantees on every operation.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace thincells {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// cpp_rational's two-argument constructor rejects non-canonical pairs
// outright, so quotients are built by exact division instead.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidParameter("rational with zero denominator");
  return Rational(num) / Rational(den);
}

// "p/q", or just "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline Rational parse_rational(std::string_view text) {
  const auto is_integer = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
  };
  const auto bad = [&] {
    return InvalidParameter("malformed rational '" + std::string(text) + "'");
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer(text)) throw bad();
    return Rational(Integer(std::string(text)));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) throw bad();
  return make_rational(Integer(std::string(num)), Integer(std::string(den)));
}

inline bool fits_int64(const Integer& v) {
  static const Integer lo = (std::numeric_limits<std::int64_t>::min)();
  static const Integer hi = (std::numeric_limits<std::int64_t>::max)();
  return lo <= v && v <= hi;
}

}  // namespace thincells
