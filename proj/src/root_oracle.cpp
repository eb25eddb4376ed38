#include "hurwitzkit/root_oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <set>

namespace hwk {

namespace {

std::complex<double> horner(const std::vector<double>& coeffs,
                            std::complex<double> z) {
  std::complex<double> acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

RootSet all_roots(const Polynomial& f) {
  if (f.degree() < 1) throw std::domain_error("all_roots: constant input");
  const int n = f.degree();
  std::vector<double> c(n + 1);
  for (int j = 0; j <= n; ++j) c[j] = to_double(f.coeff(j));

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];

  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("all_roots: eigensolver did not converge");

  std::vector<double> dc(n);  // derivative coefficients
  for (int j = 1; j <= n; ++j) dc[j - 1] = j * c[j];

  RootSet out;
  for (int i = 0; i < n; ++i) {
    std::complex<double> z(solver.eigenvalues()[i].real(),
                           solver.eigenvalues()[i].imag());
    // Newton polish; companion eigenvalues are already close.
    for (int it = 0; it < 8; ++it) {
      std::complex<double> fv = horner(c, z);
      std::complex<double> dv = horner(dc, z);
      if (std::abs(dv) < 1e-300) break;
      std::complex<double> step = fv / dv;
      z -= step;
      if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
    // Backward-error scale: |f(z)| relative to the evaluation magnitude.
    double scale = 0.0, zp = 1.0;
    for (int j = 0; j <= n; ++j) {
      scale += std::abs(c[j]) * zp;
      zp *= std::abs(z);
    }
    out.roots.push_back(z);
    out.residuals.push_back(scale > 0 ? std::abs(horner(c, z)) / scale : 0.0);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const std::complex<double>& a, const std::complex<double>& b) {
              return a.real() != b.real() ? a.real() < b.real()
                                          : a.imag() < b.imag();
            });
  return out;
}

OracleVerdict oracle_stability(const Polynomial& f, double tol) {
  RootSet roots = all_roots(f);
  double margin = -std::numeric_limits<double>::infinity();
  double max_abs = 0.0;
  for (const auto& z : roots.roots) {
    margin = std::max(margin, z.real());
    max_abs = std::max(max_abs, std::abs(z));
  }
  double scaled = tol * (1.0 + max_abs);
  OracleOutcome outcome;
  if (margin < -scaled)
    outcome = OracleOutcome::Stable;
  else if (margin > scaled)
    outcome = OracleOutcome::NotStable;
  else
    outcome = OracleOutcome::Boundary;
  return {outcome, margin, scaled};
}

Polynomial gen_stable(int n, unsigned long long seed, double spread) {
  if (n < 1) throw std::invalid_argument("gen_stable: n < 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den_dist(1, 16);
  const int spread_units = std::max(1, static_cast<int>(spread));

  Polynomial f = Polynomial::constant(Rational(1));
  std::set<std::pair<Rational, Rational>> used;  // (re, im), im >= 0
  auto sample_re = [&](int den) {
    std::uniform_int_distribution<int> num_dist(1, spread_units * den);
    return Rational(-num_dist(rng), den);
  };

  for (int k = 0; k < n / 2; ++k) {
    Rational re, im;
    do {
      int den = den_dist(rng);
      re = sample_re(den);
      std::uniform_int_distribution<int> num_dist(0, spread_units * den);
      im = Rational(num_dist(rng), den);
    } while (!used.insert({re, im}).second);
    // (x - (re + i im))(x - (re - i im)) = x^2 - 2 re x + (re^2 + im^2)
    f = f * Polynomial({re * re + im * im, -2 * re, Rational(1)});
  }
  for (int k = 0; k < n % 2; ++k) {
    Rational r;
    do {
      r = sample_re(den_dist(rng));
    } while (!used.insert({r, Rational(0)}).second);
    f = f * Polynomial({-r, Rational(1)});
  }
  return f;
}

Polynomial gen_random(int n, unsigned long long seed, int coeff_bound) {
  if (n < 1 || coeff_bound < 1)
    throw std::invalid_argument("gen_random: bad parameters");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> lead(1, coeff_bound);
  std::vector<Rational> c(n + 1);
  for (int j = 0; j < n; ++j) c[j] = coeff(rng);
  c[n] = lead(rng);
  return Polynomial(std::move(c));
}

}  // namespace hwk
