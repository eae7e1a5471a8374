#include "tailrate/rational.hpp"

#include "tailrate/error.hpp"

#include <cctype>

namespace tailrate {

namespace mp = boost::multiprecision;

std::string format_rational(const Rational& x) {
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::string format_rational_compact(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return format_rational(x);
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return BigInt(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  BigInt num = parse_integer(text.substr(0, slash), text);
  BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

long double to_long_double(const Rational& x) { return x.convert_to<long double>(); }

}  // namespace tailrate
