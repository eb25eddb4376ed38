#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitzkit/polynomial.hpp"
#include "hurwitzkit/rational.hpp"

namespace hwk {

enum class Verdict { Stable, NotStable };
enum class Method { Routh, Minors, HermiteBiehler, Oracle };

enum class FailureKind {
  NonpositiveC,
  DegenerateStep,
  NonpositiveConstantTerm,
};

/// First failing step of a Routh reduction. step is 1-indexed; value carries
/// the offending c for NonpositiveC.
struct Failure {
  FailureKind kind;
  int step = 0;
  std::optional<Rational> value;
};

std::string to_string(FailureKind kind);
std::string describe(const Failure& failure);

/// The parameters (c_1,...,c_n) of the reduction chain and the terminal
/// degree-0 value b.
struct RouthChain {
  std::vector<Rational> cs;
  Rational terminal;
};

/// One isolated real root: either the exact rational point (lo == hi) or a
/// half-open interval (lo, hi] containing exactly one root.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  bool is_point() const { return lo == hi; }
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // sorted ascending, disjoint
};

struct InterlacingReport {
  RootIsolation p_roots;
  RootIsolation q_roots;
  bool degree_ok = false;       // deg p in {deg q, deg q + 1}
  bool all_real = false;        // real root count (with mult.) == degree
  bool all_simple = false;
  bool all_negative = false;
  bool interlaced = false;
  bool rightmost_is_p = false;
  bool sign_condition = false;  // p(0) q(0) > 0
  bool coprime = false;
  bool verdict = false;         // conjunction of the flags above
};

struct StabilityReport {
  Verdict verdict;
  Method method;
  std::optional<RouthChain> chain;
  std::optional<std::vector<Rational>> minors;
  std::optional<InterlacingReport> interlacing;
  std::optional<Failure> failure;
  std::optional<int> phase_sign;  // corroborating sign, Hermite-Biehler only
  bool sign_flipped = false;      // input had f(0) < 0, analyzed as -f
  bool vacuous = false;           // degree-0 input, no roots at all
  bool stable() const { return verdict == Verdict::Stable; }
};

}  // namespace hwk
