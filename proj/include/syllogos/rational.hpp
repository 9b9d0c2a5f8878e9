#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Comparisons against plain integers, spelled out. Under C++20 rewriting
// rules the Boost 1.74 overloads for these call each other forever.
namespace boost {
#define SYLLOGOS_RATIONAL_INT_EQ(I)                                             \
  inline bool operator==(const rational<std::int64_t>& a, I b) {                \
    return a.denominator() == 1 && a.numerator() == b;                          \
  }                                                                             \
  inline bool operator==(I b, const rational<std::int64_t>& a) { return a == b; } \
  inline bool operator!=(const rational<std::int64_t>& a, I b) { return !(a == b); } \
  inline bool operator!=(I b, const rational<std::int64_t>& a) { return !(a == b); }
SYLLOGOS_RATIONAL_INT_EQ(int)
SYLLOGOS_RATIONAL_INT_EQ(long)
SYLLOGOS_RATIONAL_INT_EQ(long long)
#undef SYLLOGOS_RATIONAL_INT_EQ
}  // namespace boost

namespace syllogos {

using Rational = boost::rational<std::int64_t>;

/// Parses "3/10", "0.3", "1" or ".5". Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// Exact decimal when the denominator is 2^a 5^b, otherwise "num/den".
std::string to_string(const Rational& r);

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

}  // namespace syllogos
