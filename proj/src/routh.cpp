#include "hurwitzkit/routh.hpp"

namespace hwk {

std::string to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::NonpositiveC: return "NonpositiveC";
    case FailureKind::DegenerateStep: return "DegenerateStep";
    case FailureKind::NonpositiveConstantTerm: return "NonpositiveConstantTerm";
  }
  return "?";
}

std::string describe(const Failure& failure) {
  std::string s = to_string(failure.kind);
  if (failure.kind != FailureKind::NonpositiveConstantTerm)
    s += "(" + std::to_string(failure.step) + ")";
  if (failure.value) s += " c=" + hwk::to_string(*failure.value);
  return s;
}

RouthStep routh_step(const Polynomial& f) {
  if (f.degree() < 1) throw std::domain_error("routh_step: constant input");
  if (f.coeff(0) == 0) throw std::domain_error("routh_step: root at origin");
  auto [p, q] = even_odd_split(f);
  if (q(0) == 0) throw DegenerateStepError();
  Rational c = p(0) / q(0);
  Polynomial q_tilde = divide_by_x(sub_scaled(p, c, q));
  return {c, recombine({q, q_tilde})};
}

ChainResult routh_chain(const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("routh_chain: zero polynomial");
  if (f(0) <= 0)
    return Failure{FailureKind::NonpositiveConstantTerm, 0, f(0)};
  RouthChain chain;
  Polynomial cur = f;
  int step = 1;
  while (cur.degree() >= 1) {
    RouthStep s;
    try {
      s = routh_step(cur);
    } catch (const DegenerateStepError&) {
      return Failure{FailureKind::DegenerateStep, step, std::nullopt};
    }
    if (s.f_tilde.degree() != cur.degree() - 1)
      return Failure{FailureKind::DegenerateStep, step, std::nullopt};
    chain.cs.push_back(s.c);
    cur = s.f_tilde;
    ++step;
  }
  chain.terminal = cur.coeff(0);
  return chain;
}

StabilityReport is_stable_routh(const Polynomial& f) {
  if (f.is_zero())
    throw std::domain_error("is_stable_routh: zero polynomial");
  StabilityReport rep;
  rep.method = Method::Routh;
  Polynomial g = f;
  if (g(0) < 0) {
    g = -g;
    rep.sign_flipped = true;
  }
  if (g(0) == 0) {
    rep.verdict = Verdict::NotStable;
    rep.failure = Failure{FailureKind::NonpositiveConstantTerm, 0, g(0)};
    return rep;
  }
  if (g.degree() == 0) {
    rep.verdict = Verdict::Stable;
    rep.vacuous = true;
    rep.chain = RouthChain{{}, g.coeff(0)};
    return rep;
  }
  RouthChain chain;
  Polynomial cur = g;
  int step = 1;
  while (cur.degree() >= 1) {
    RouthStep s;
    try {
      s = routh_step(cur);
    } catch (const DegenerateStepError&) {
      rep.verdict = Verdict::NotStable;
      rep.failure = Failure{FailureKind::DegenerateStep, step, std::nullopt};
      return rep;
    }
    if (s.c <= 0) {
      rep.verdict = Verdict::NotStable;
      rep.failure = Failure{FailureKind::NonpositiveC, step, s.c};
      return rep;
    }
    if (s.f_tilde.degree() != cur.degree() - 1) {
      rep.verdict = Verdict::NotStable;
      rep.failure = Failure{FailureKind::DegenerateStep, step, std::nullopt};
      return rep;
    }
    chain.cs.push_back(s.c);
    cur = s.f_tilde;
    ++step;
  }
  chain.terminal = cur.coeff(0);
  rep.verdict = Verdict::Stable;
  rep.chain = std::move(chain);
  return rep;
}

}  // namespace hwk
