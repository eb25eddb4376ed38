#include "hurwitzkit/rational.hpp"

#include <cctype>

namespace hwk {

namespace {

bool parse_integer(const std::string& s, Int& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  out = Int(s);
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;

  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num, den;
    if (!parse_integer(text.substr(0, slash), num)) return std::nullopt;
    if (!parse_integer(text.substr(slash + 1), den)) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
  }

  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::size_t frac_len = text.size() - dot - 1;
    // Allow ".5" and "1." forms as long as at least one digit is present.
    if (digits.empty() || digits == "+" || digits == "-") return std::nullopt;
    Int num;
    if (!parse_integer(digits, num)) return std::nullopt;
    Int den = 1;
    for (std::size_t k = 0; k < frac_len; ++k) den *= 10;
    return Rational(num, den);
  }

  Int num;
  if (!parse_integer(text, num)) return std::nullopt;
  return Rational(num);
}

std::string to_string(const Rational& x) {
  const Int& num = boost::multiprecision::numerator(x);
  const Int& den = boost::multiprecision::denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace hwk
