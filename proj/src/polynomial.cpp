#include "hurwitzkit/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hwk {

namespace {

std::vector<Rational> normalized(std::vector<Rational> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("Polynomial: empty coefficient list");
  coeffs_ = normalized(std::move(coeffs));
}

Polynomial Polynomial::constant(Rational value) {
  return Polynomial({std::move(value)});
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (degree() == 0) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    d[j - 1] = coeffs_[j] * Rational(static_cast<int>(j));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& v : c) v = -v;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rational> c(std::max(coeffs_.size(), other.coeffs_.size()),
                          Rational(0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) c[j] += coeffs_[j];
  for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
    c[j] += other.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial();
  std::vector<Rational> c(coeffs_.size() + other.coeffs_.size() - 1,
                          Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * other.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& scalar) const {
  std::vector<Rational> c(coeffs_);
  for (auto& v : c) v *= scalar;
  return Polynomial(std::move(c));
}

std::string Polynomial::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j) os << ", ";
    os << hwk::to_string(coeffs_[j]);
  }
  os << "]";
  return os.str();
}

EvenOddPair even_odd_split(const Polynomial& f) {
  if (f.is_zero())
    throw std::domain_error("even_odd_split: zero polynomial");
  std::vector<Rational> ev, od;
  const auto& c = f.coeffs();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j % 2 == 0)
      ev.push_back(c[j]);
    else
      od.push_back(c[j]);
  }
  if (od.empty()) od.push_back(Rational(0));
  return {Polynomial(std::move(ev)), Polynomial(std::move(od))};
}

Polynomial recombine(const EvenOddPair& pair) {
  if (pair.p.is_zero() && pair.q.is_zero()) return Polynomial();
  const auto& pc = pair.p.coeffs();
  const auto& qc = pair.q.coeffs();
  std::vector<Rational> c(std::max(2 * pc.size(), 2 * qc.size() + 1),
                          Rational(0));
  if (!pair.p.is_zero())
    for (std::size_t k = 0; k < pc.size(); ++k) c[2 * k] = pc[k];
  if (!pair.q.is_zero())
    for (std::size_t k = 0; k < qc.size(); ++k) c[2 * k + 1] = qc[k];
  return Polynomial(std::move(c));
}

Polynomial sub_scaled(const Polynomial& p, const Rational& c,
                      const Polynomial& q) {
  return p - q * c;
}

Polynomial divide_by_x(const Polynomial& f) {
  if (f.is_zero()) return f;
  if (f.coeff(0) != 0)
    throw std::domain_error("divide_by_x: nonzero constant term");
  std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
  if (shifted.empty()) shifted.push_back(Rational(0));
  return Polynomial(std::move(shifted));
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& a,
                                              const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero");
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quot(
      a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 1, Rational(0));
  int db = b.degree();
  const Rational& lead = b.leading();
  for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
    if (rem[d] == 0) continue;
    Rational factor = rem[d] / lead;
    quot[d - db] = factor;
    for (int j = 0; j <= db; ++j) rem[d - db + j] -= factor * b.coeff(j);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero())
    throw std::domain_error("poly_gcd: both arguments zero");
  Polynomial a = p, b = q;
  while (!b.is_zero()) {
    Polynomial r = scaled_primitive(poly_divmod(a, b).second);
    a = b;
    b = r;
  }
  return a * (Rational(1) / a.leading());
}

Polynomial scaled_primitive(const Polynomial& g) {
  if (g.is_zero()) return g;
  Int den_lcm = 1;
  for (const auto& c : g.coeffs())
    den_lcm = boost::multiprecision::lcm(den_lcm,
                                         boost::multiprecision::denominator(c));
  Int num_gcd = 0;
  for (const auto& c : g.coeffs()) {
    Rational scaled = c * Rational(den_lcm);
    num_gcd = boost::multiprecision::gcd(
        num_gcd, boost::multiprecision::numerator(scaled));
  }
  return g * Rational(den_lcm, num_gcd);
}

Polynomial substitute_neg_x_squared(const Polynomial& g) {
  if (g.is_zero()) return g;
  std::vector<Rational> c(2 * g.coeffs().size() - 1, Rational(0));
  for (std::size_t k = 0; k < g.coeffs().size(); ++k)
    c[2 * k] = (k % 2 == 0) ? g.coeffs()[k] : -g.coeffs()[k];
  return Polynomial(std::move(c));
}

}  // namespace hwk
