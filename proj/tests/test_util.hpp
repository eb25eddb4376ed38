#pragma once

#include <initializer_list>
#include <string>

#include "hurwitzkit/polynomial.hpp"

namespace hwk::test {

// Builds a polynomial from coefficient strings, ascending by power.
inline Polynomial poly(std::initializer_list<std::string> coeffs) {
  std::vector<Rational> parsed;
  for (const auto& s : coeffs) parsed.push_back(*parse_rational(s));
  return Polynomial(std::move(parsed));
}

inline Rational rat(const std::string& s) { return *parse_rational(s); }

}  // namespace hwk::test
