#ifndef FEATURECLOUDS_RATIONAL_H_
#define FEATURECLOUDS_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Boost 1.74's mixed integer == recurses under C++20 reversed operators.
// Exact non-template overloads take precedence.
namespace boost {
#define FEATURECLOUDS_RATIONAL_EQ(T)                                          \
  inline bool operator==(const rational<std::int64_t>& a, T b) {              \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b); \
  }                                                                           \
  inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
FEATURECLOUDS_RATIONAL_EQ(int)
FEATURECLOUDS_RATIONAL_EQ(long)
#undef FEATURECLOUDS_RATIONAL_EQ
}  // namespace boost

namespace featureclouds {

// Exact arithmetic for weights and metrics.
using Rational = boost::rational<std::int64_t>;

// Parses "3", "0.35", "1/3", ".5". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

// Nearest integer, halves rounded away from zero.
std::int64_t round_half_up(const Rational& value);

// Fixed-point decimal with `places` digits, e.g. 1/3 -> "0.3333".
std::string to_decimal(const Rational& value, int places);

// "4" for integers, "3/2" otherwise.
std::string to_string(const Rational& value);

// Integer percent, e.g. 1/3 -> "33%".
std::string to_percent(const Rational& value);

double to_double(const Rational& value);

}  // namespace featureclouds

#endif  // FEATURECLOUDS_RATIONAL_H_
