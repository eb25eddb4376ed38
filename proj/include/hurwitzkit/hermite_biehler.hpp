#pragma once

#include "hurwitzkit/polynomial.hpp"
#include "hurwitzkit/report.hpp"

namespace hwk {

/// Canonical Sturm chain: g, g', then negated Euclidean remainders down to a
/// nonzero constant or the gcd.
std::vector<Polynomial> sturm_sequence(const Polynomial& g);

/// Sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<Polynomial>& chain, const Rational& x);

/// Exact Cauchy bound 1 + max_j |a_j / a_n|; every root of g has absolute
/// value strictly below it.
Rational cauchy_root_bound(const Polynomial& g);

/// Distinct real roots of g in the open interval (a, b). Endpoints that are
/// roots are divided out exactly first, so no approximate nudging is needed.
int count_real_roots(const Polynomial& g, const Rational& a, const Rational& b);

/// Real roots counted with multiplicity (via the repeated-gcd chain).
int real_root_count_with_multiplicity(const Polynomial& g);

/// Isolates the real roots of g: exact rational roots become point entries,
/// the rest half-open intervals (lo, hi] each holding exactly one root of the
/// square-free part. Multiplicities come from the repeated-gcd chain.
/// The object stays usable afterwards for interval refinement.
class RootIsolator {
 public:
  explicit RootIsolator(Polynomial g);

  const RootIsolation& isolation() const { return isolation_; }
  const Polynomial& polynomial() const { return g_; }

  /// One bisection step; converts to an exact point when the split lands on
  /// the root. No-op on point entries.
  void halve(RootInterval& iv);

  /// Refines iv until its sign against zero is decided; true iff root < 0.
  bool root_is_negative(RootInterval& iv);

 private:
  void isolate();
  int count_between(const Rational& lo, const Rational& hi) const;
  Rational pick_split(const Rational& lo, const Rational& hi, bool& hit_root);
  int interval_multiplicity(const Rational& lo, const Rational& hi) const;

  Polynomial g_;
  Polynomial squarefree_;               // deflated of discovered rational roots
  std::vector<Polynomial> sturm_;       // chain of squarefree_
  std::vector<Polynomial> mult_chain_;  // g, gcd(g,g'), gcd of that with its derivative, ...
  std::vector<std::vector<Polynomial>> mult_sturm_;  // chains of their square-free parts
  Rational bound_;
  std::vector<Rational> exact_roots_;
  RootIsolation isolation_;
};

RootIsolation isolate_real_roots(const Polynomial& g);

/// The interlacing battery on the even/odd pair: realness, simplicity,
/// negativity, strict alternation with the rightmost root belonging to p,
/// p(0)q(0) > 0, and coprimality. Exact throughout.
InterlacingReport interlacing_check(const Polynomial& p, const Polynomial& q);

/// Stability via the interlacing condition on (p, q) = even_odd_split(f),
/// with the phase sign at z0 = 1 attached as corroboration.
StabilityReport condition_b(const Polynomial& f);

/// Exact sign of p(z0^2) / (z0 q(z0^2)) for rational z0 > 0, retrying on a
/// fixed nudge schedule when q vanishes; nullopt if every attempt vanishes.
std::optional<int> phase_sign(const Polynomial& f, const Rational& z0);

/// True iff lambda p(-x^2) + mu x q(-x^2) has as many real roots (with
/// multiplicity) as its degree.
bool combination_real_rooted(const Polynomial& f, const Rational& lambda,
                             const Rational& mu);

}  // namespace hwk
