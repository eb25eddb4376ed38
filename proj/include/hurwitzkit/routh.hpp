#pragma once

#include <variant>

#include "hurwitzkit/polynomial.hpp"
#include "hurwitzkit/report.hpp"

namespace hwk {

/// Thrown by routh_step when the odd part vanishes at 0 (a_1 = 0); such an
/// input cannot be stable.
struct DegenerateStepError : std::domain_error {
  DegenerateStepError() : std::domain_error("routh_step: q(0) == 0") {}
};

struct RouthStep {
  Rational c;          // p(0) / q(0)
  Polynomial f_tilde;  // recombine(q, (p - c q)/x)
};

/// One reduction step f -> (c, f~). Requires deg f >= 1 and f(0) != 0
/// (std::domain_error otherwise); throws DegenerateStepError when q(0) == 0.
RouthStep routh_step(const Polynomial& f);

using ChainResult = std::variant<RouthChain, Failure>;

/// Full reduction chain (c_1,...,c_n, b). Requires f(0) > 0. Records every c
/// (including nonpositive ones) and fails only on malformed steps:
/// q(0) == 0 or a degree drop other than exactly 1.
ChainResult routh_chain(const Polynomial& f);

/// Stability verdict by iterated reduction, short-circuiting at the first
/// nonpositive c or malformed step. Inputs with f(0) < 0 are sign-flipped
/// first; f(0) == 0 is immediately NotStable (root at the origin).
StabilityReport is_stable_routh(const Polynomial& f);

}  // namespace hwk
