#pragma once

#include <stdexcept>
#include <vector>

#include "hurwitzkit/rational.hpp"

namespace hwk {

/// Univariate polynomial with exact rational coefficients, stored ascending
/// by power (coeffs[j] multiplies x^j). Always normalized: trailing zeros
/// stripped, the zero polynomial represented as the single coefficient 0.
/// Immutable after construction.
class Polynomial {
 public:
  /// Zero polynomial.
  Polynomial() : coeffs_{Rational(0)} {}

  /// Normalizes (strips trailing zeros). Throws std::invalid_argument on
  /// empty input.
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational value);

  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Coefficient of x^j; zero outside the stored range.
  Rational coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[j];
  }

  Rational leading() const { return coeffs_.back(); }

  /// Exact Horner evaluation.
  Rational operator()(const Rational& x) const;

  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;

  bool operator==(const Polynomial& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

/// The (p, q) with f(x) = p(x^2) + x q(x^2).
struct EvenOddPair {
  Polynomial p;
  Polynomial q;
};

/// Splits f into even/odd coefficient parts. Throws std::domain_error on the
/// zero polynomial.
EvenOddPair even_odd_split(const Polynomial& f);

/// Inverse of even_odd_split: interleaves p at even powers, q at odd powers.
Polynomial recombine(const EvenOddPair& pair);

/// Exact p - c*q, normalized.
Polynomial sub_scaled(const Polynomial& p, const Rational& c,
                      const Polynomial& q);

/// Shifts coefficients down one index. Requires f(0) == 0 or f zero;
/// throws std::domain_error otherwise.
Polynomial divide_by_x(const Polynomial& f);

/// Quotient and remainder of a by b (b nonzero), exact over the rationals.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& b);

/// Monic gcd via the Euclidean remainder sequence. Throws std::domain_error
/// if both arguments are zero.
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Returns g(-x^2): coefficient k of g lands at index 2k with sign (-1)^k.
Polynomial substitute_neg_x_squared(const Polynomial& g);

/// Scales g by a positive rational so its coefficients become coprime
/// integers (signs preserved). Keeps remainder-sequence coefficients small.
Polynomial scaled_primitive(const Polynomial& g);

}  // namespace hwk
