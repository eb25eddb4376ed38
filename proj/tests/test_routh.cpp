#include <doctest.h>

#include <random>

#include "hurwitzkit/root_oracle.hpp"
#include "hurwitzkit/routh.hpp"
#include "test_util.hpp"

using namespace hwk;
using test::poly;
using test::rat;

TEST_CASE("routh_step on the worked cubic") {
  auto [c, f_tilde] = routh_step(poly({"6", "11", "6", "1"}));
  CHECK(c == rat("6/11"));
  CHECK(f_tilde == poly({"11", "60/11", "1"}));
}

TEST_CASE("routh_step degree-1 base") {
  auto [c, f_tilde] = routh_step(poly({"1", "1"}));
  CHECK(c == 1);
  CHECK(f_tilde == poly({"1"}));
}

TEST_CASE("routh_step on (1+x)(1+x^2): next step degenerates") {
  auto [c, f_tilde] = routh_step(poly({"1", "1", "1", "1"}));
  CHECK(c == 1);
  CHECK(f_tilde == poly({"1", "0", "1"}));
  CHECK_THROWS_AS(routh_step(f_tilde), DegenerateStepError);
}

TEST_CASE("routh_step errors") {
  CHECK_THROWS_AS(routh_step(poly({"5"})), std::domain_error);
  CHECK_THROWS_AS(routh_step(poly({"0", "1"})), std::domain_error);
}

TEST_CASE("routh_chain examples") {
  auto result = routh_chain(poly({"6", "11", "6", "1"}));
  REQUIRE(std::holds_alternative<RouthChain>(result));
  const auto& chain = std::get<RouthChain>(result);
  CHECK(chain.cs == std::vector<Rational>{rat("6/11"), rat("121/60"),
                                          rat("60/11")});
  CHECK(chain.terminal == 1);

  auto r2 = routh_chain(poly({"1", "1"}));
  REQUIRE(std::holds_alternative<RouthChain>(r2));
  CHECK(std::get<RouthChain>(r2).cs == std::vector<Rational>{1});
  CHECK(std::get<RouthChain>(r2).terminal == 1);

  // chain mode records nonpositive c and keeps going while well-formed
  auto r3 = routh_chain(poly({"1", "-1", "1"}));
  REQUIRE(std::holds_alternative<RouthChain>(r3));
  CHECK(std::get<RouthChain>(r3).cs.front() == -1);

  auto r4 = routh_chain(poly({"1", "1", "1", "1"}));
  REQUIRE(std::holds_alternative<Failure>(r4));
  CHECK(std::get<Failure>(r4).kind == FailureKind::DegenerateStep);
  CHECK(std::get<Failure>(r4).step == 2);
}

TEST_CASE("is_stable_routh verdicts") {
  StabilityReport stable = is_stable_routh(poly({"6", "11", "6", "1"}));
  CHECK(stable.stable());
  REQUIRE(stable.chain.has_value());
  CHECK(stable.chain->cs == std::vector<Rational>{rat("6/11"), rat("121/60"),
                                                  rat("60/11")});
  CHECK(stable.chain->terminal == 1);

  StabilityReport rhp = is_stable_routh(poly({"1", "-1", "1"}));
  CHECK_FALSE(rhp.stable());
  REQUIRE(rhp.failure.has_value());
  CHECK(rhp.failure->kind == FailureKind::NonpositiveC);
  CHECK(rhp.failure->step == 1);

  StabilityReport axis = is_stable_routh(poly({"1", "1", "1", "1"}));
  CHECK_FALSE(axis.stable());
  REQUIRE(axis.failure.has_value());
  CHECK(axis.failure->kind == FailureKind::DegenerateStep);
  CHECK(axis.failure->step == 2);

  StabilityReport origin = is_stable_routh(poly({"0", "1"}));
  CHECK_FALSE(origin.stable());
  CHECK(origin.failure->kind == FailureKind::NonpositiveConstantTerm);

  StabilityReport constant = is_stable_routh(poly({"5"}));
  CHECK(constant.stable());
  CHECK(constant.vacuous);

  StabilityReport flipped = is_stable_routh(poly({"-6", "-11", "-6", "-1"}));
  CHECK(flipped.stable());
  CHECK(flipped.sign_flipped);

  CHECK_THROWS_AS(is_stable_routh(Polynomial()), std::domain_error);
}

TEST_CASE("property: step reconstruction identity and degree drop") {
  // p(x) == c p~(x) + x q~(x) and q == p~ for every successful step
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> deg(1, 9);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial f = trial % 2 ? gen_stable(deg(rng), rng())
                             : gen_random(deg(rng), rng(), 20);
    if (f.coeff(0) == 0) continue;
    auto [p, q] = even_odd_split(f);
    if (q(0) == 0) continue;
    auto [c, f_tilde] = routh_step(f);
    auto [pt, qt] = even_odd_split(f_tilde);
    CHECK(q == pt);
    Polynomial x({Rational(0), Rational(1)});
    CHECK(p == pt * c + x * qt);
    CHECK(f_tilde.degree() <= f.degree() - 1);
  }
}

TEST_CASE("property: stable inputs have all-positive chains and coefficients") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> deg(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f = gen_stable(deg(rng), rng());
    StabilityReport rep = is_stable_routh(f);
    REQUIRE(rep.stable());
    REQUIRE(rep.chain.has_value());
    CHECK(static_cast<int>(rep.chain->cs.size()) == f.degree());
    for (const auto& c : rep.chain->cs) CHECK(c > 0);
    CHECK(rep.chain->terminal > 0);
    // Stodola consequence
    for (const auto& a : f.coeffs()) CHECK(a > 0);
    // observed regularity (not a contract): terminal b equals the leading
    // coefficient
    CHECK(rep.chain->terminal == f.leading());
  }
}
