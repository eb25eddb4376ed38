#pragma once

#include <complex>

#include "hurwitzkit/polynomial.hpp"

namespace hwk {

struct RootSet {
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;  // per-root relative backward error estimate
};

enum class OracleOutcome { Stable, NotStable, Boundary };

struct OracleVerdict {
  OracleOutcome verdict;
  double margin;     // max over roots of Re z
  double tolerance;  // the effective (scaled) tolerance used
};

/// All complex roots by companion-matrix eigenvalues with a few Newton
/// polishing steps. Floating point by design: independent of the exact
/// pipeline. Requires deg f >= 1.
RootSet all_roots(const Polynomial& f);

/// margin = max Re z_j; Stable if margin < -tol', NotStable if margin > tol',
/// Boundary otherwise, where tol' = tol * (1 + max |root|).
OracleVerdict oracle_stability(const Polynomial& f, double tol = 1e-9);

/// Stable test input of degree n: floor(n/2) conjugate root pairs with
/// negative real part plus (n mod 2) negative real roots, all sampled on a
/// rational grid (denominators <= 16) so the expansion is exact. Positive
/// leading coefficient; f(0) > 0. Deterministic for a fixed seed.
Polynomial gen_stable(int n, unsigned long long seed, double spread = 4.0);

/// Degree-n polynomial with integer coefficients uniform in
/// [-coeff_bound, coeff_bound], leading coefficient positive and nonzero.
Polynomial gen_random(int n, unsigned long long seed, int coeff_bound);

}  // namespace hwk
