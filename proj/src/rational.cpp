#include "syllogos/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace syllogos {

namespace {

std::optional<std::int64_t> parse_digits(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool all_digits(std::string_view s) {
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash), den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return std::nullopt;
    auto n = parse_digits(num), d = parse_digits(den);
    if (!n || !d || *d == 0) return std::nullopt;
    Rational r(*n, *d);
    return negative ? -r : r;
  }

  auto dot = text.find('.');
  auto whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (dot != std::string_view::npos && frac.empty()) return std::nullopt;
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!all_digits(whole) || !all_digits(frac)) return std::nullopt;
  // Up to 17 fractional digits keeps 10^k inside int64.
  if (frac.size() > 17 || whole.size() > 12) return std::nullopt;

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  std::int64_t w = whole.empty() ? 0 : *parse_digits(whole);
  std::int64_t f = frac.empty() ? 0 : *parse_digits(frac);
  if (w > (std::numeric_limits<std::int64_t>::max() - f) / scale) return std::nullopt;
  Rational r(w * scale + f, scale);
  return negative ? -r : r;
}

std::string to_string(const Rational& r) {
  std::int64_t den = r.denominator();
  std::int64_t d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) d /= 2, ++twos;
  while (d % 5 == 0) d /= 5, ++fives;
  if (d != 1) return std::to_string(r.numerator()) + "/" + std::to_string(den);
  if (den == 1) return std::to_string(r.numerator());

  int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t num = r.numerator();
  bool negative = num < 0;
  if (negative) num = -num;
  std::int64_t scaled = num * (scale / den);
  std::string whole = std::to_string(scaled / scale);
  std::string frac = std::to_string(scaled % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (negative ? "-" : "") + whole + "." + frac;
}

}  // namespace syllogos
