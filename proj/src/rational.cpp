#include "seshadri/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace seshadri {

std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) throw InvariantError("expected an integer, got " + to_string(q));
  const Integer n = numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw InvariantError("integer out of 64-bit range: " + n.str());
  return n.convert_to<std::int64_t>();
}

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (text.size() == start) throw ValidationError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ValidationError("malformed rational '" + std::string(whole) + "'");
  return Integer(std::string(text[0] == '+' ? text.substr(1) : text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den <= 0) throw ValidationError("rational '" + std::string(text) + "' needs a positive denominator");
  return Rational(num, den);
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

}  // namespace seshadri
