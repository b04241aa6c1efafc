#include "featureclouds/rational.h"

#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

namespace featureclouds {
namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }
  return value;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
  }

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    const std::int64_t d = parse_digits(den, whole);
    if (d == 0) throw std::invalid_argument("zero denominator in '" +
                                            std::string(whole) + "'");
    value = Rational(parse_digits(num, whole), d);
  } else {
    const auto dot = text.find('.');
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part =
        dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) || !all_digits(int_part) ||
        !all_digits(frac_part) || frac_part.size() > 15) {
      throw std::invalid_argument("not a number: '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, whole);
    const std::int64_t fp =
        frac_part.empty() ? 0 : parse_digits(frac_part, whole);
    if (ip > std::numeric_limits<std::int64_t>::max() / scale) {
      throw std::invalid_argument("number out of range: '" +
                                  std::string(whole) + "'");
    }
    value = Rational(ip * scale + fp, scale);
  }
  return negative ? -value : value;
}

std::int64_t round_half_up(const Rational& value) {
  const std::int64_t num = value.numerator();
  const std::int64_t den = value.denominator();  // always > 0
  const std::int64_t twice = 2 * (num >= 0 ? num : -num) + den;
  const std::int64_t magnitude = twice / (2 * den);
  return num >= 0 ? magnitude : -magnitude;
}

std::string to_decimal(const Rational& value, int places) {
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const std::int64_t scaled = round_half_up(value * scale);
  const std::int64_t magnitude = scaled < 0 ? -scaled : scaled;
  std::string out = scaled < 0 ? "-" : "";
  out += std::to_string(magnitude / scale);
  if (places > 0) {
    std::string frac = std::to_string(magnitude % scale);
    out += '.';
    out += std::string(static_cast<std::size_t>(places) - frac.size(), '0');
    out += frac;
  }
  return out;
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

std::string to_percent(const Rational& value) {
  return std::to_string(round_half_up(value * 100)) + "%";
}

double to_double(const Rational& value) {
  return boost::rational_cast<double>(value);
}

}  // namespace featureclouds
