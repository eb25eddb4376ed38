#include <doctest.h>

#include <random>

#include "hurwitzkit/hurwitz_matrix.hpp"
#include "hurwitzkit/root_oracle.hpp"
#include "hurwitzkit/routh.hpp"
#include "test_util.hpp"

using namespace hwk;
using test::poly;
using test::rat;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()),
                   static_cast<int>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

// Independent determinant oracle: recursive cofactor expansion.
Rational det_cofactor(const RationalMatrix& m) {
  const int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Rational acc = 0;
  std::vector<int> cols;
  for (int j = 1; j < n; ++j) cols.push_back(j);
  std::vector<int> rows;
  for (int i = 1; i < n; ++i) rows.push_back(i);
  for (int j = 0; j < n; ++j) {
    std::vector<int> sub_cols;
    for (int c = 0; c < n; ++c)
      if (c != j) sub_cols.push_back(c);
    Rational term = m.at(0, j) * det_cofactor(m.submatrix(rows, sub_cols));
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

}  // namespace

TEST_CASE("hurwitz_truncation matches the displayed pattern") {
  CHECK(hurwitz_truncation(poly({"6", "11", "6", "1"}), 4, 4) ==
        from_rows({{6, 6, 0, 0}, {0, 11, 1, 0}, {0, 6, 6, 0}, {0, 0, 11, 1}}));
  CHECK(hurwitz_truncation(poly({"5"}), 3, 3) ==
        from_rows({{5, 0, 0}, {0, 0, 0}, {0, 5, 0}}));
  CHECK(hurwitz_truncation(poly({"1", "1"}), 2, 3) ==
        from_rows({{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("j_truncation matches the displayed pattern") {
  CHECK(j_truncation(Rational(2), 5, 6) == from_rows({{2, 1, 0, 0, 0, 0},
                                                      {0, 0, 1, 0, 0, 0},
                                                      {0, 0, 2, 1, 0, 0},
                                                      {0, 0, 0, 0, 1, 0},
                                                      {0, 0, 0, 0, 2, 1}}));
  CHECK(j_truncation(Rational(0), 2, 3) == from_rows({{0, 1, 0}, {0, 0, 1}}));
  CHECK(j_truncation(Rational(1), 1, 2) == from_rows({{1, 1}}));
}

TEST_CASE("truncation coherence: corners agree") {
  Polynomial f = poly({"6", "11", "6", "1"});
  RationalMatrix big = hurwitz_truncation(f, 8, 8);
  for (int r = 1; r <= 8; ++r)
    for (int c = 1; c <= 8; c += 3)
      CHECK(big.corner(r, c) == hurwitz_truncation(f, r, c));
  RationalMatrix jbig = j_truncation(rat("3/7"), 7, 7);
  for (int r = 1; r <= 7; r += 2)
    for (int c = 1; c <= 7; c += 2)
      CHECK(jbig.corner(r, c) == j_truncation(rat("3/7"), r, c));
}

TEST_CASE("step factorization H(f) = J(c) H(f~)") {
  CHECK(verify_step_factorization(poly({"1", "1"}), 4, 4));
  CHECK(verify_step_factorization(poly({"6", "11", "6", "1"}), 6, 6));

  // perturbing c must break the exact identity
  Polynomial f = poly({"1", "2", "1"});
  auto [c, f_tilde] = routh_step(f);
  RationalMatrix lhs = hurwitz_truncation(f, 4, 4);
  RationalMatrix rhs = j_truncation(c + 1, 4, 5) *
                       hurwitz_truncation(f_tilde, 5, 4);
  CHECK(lhs != rhs);
}

TEST_CASE("full factorization H(f) = J(c_1)...J(c_n) H(b)") {
  CHECK(verify_full_factorization(poly({"6", "11", "6", "1"}), 6, 6));
  CHECK(verify_full_factorization(poly({"1", "1"}), 3, 3));
  CHECK_THROWS_AS(verify_full_factorization(poly({"1", "1", "1", "1"}), 6, 6),
                  std::domain_error);
}

TEST_CASE("leading principal minors against the cofactor oracle") {
  auto minors = leading_principal_minors(poly({"6", "11", "6", "1"}), 4);
  CHECK(minors == std::vector<Rational>{6, 66, 360, 360});
  RationalMatrix h = hurwitz_truncation(poly({"6", "11", "6", "1"}), 4, 4);
  for (int j = 1; j <= 4; ++j)
    CHECK(minors[j - 1] == det_cofactor(h.corner(j, j)));

  CHECK(leading_principal_minors(poly({"1", "1"}), 2) ==
        std::vector<Rational>{1, 1});
  CHECK(leading_principal_minors(poly({"5"}), 2) ==
        std::vector<Rational>{5, 0});
}

TEST_CASE("minor criterion verdicts") {
  StabilityReport ok = minor_criterion(poly({"6", "11", "6", "1"}));
  CHECK(ok.stable());
  CHECK(*ok.minors == std::vector<Rational>{6, 66, 360, 360});

  StabilityReport bad = minor_criterion(poly({"1", "-1", "1"}));
  CHECK_FALSE(bad.stable());
  CHECK((*bad.minors)[1] == -1);

  StabilityReport axis = minor_criterion(poly({"1", "1", "1", "1"}));
  CHECK_FALSE(axis.stable());
  CHECK((*axis.minors)[2] == 0);

  CHECK_THROWS_AS(minor_criterion(Polynomial()), std::domain_error);
}

TEST_CASE("total nonnegativity brute force") {
  auto ok = all_minors_nonnegative(
      hurwitz_truncation(poly({"6", "11", "6", "1"}), 6, 6), 3);
  CHECK(ok.ok);

  auto bad = all_minors_nonnegative(from_rows({{0, 1}, {1, 0}}), 2);
  REQUIRE_FALSE(bad.ok);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->row_idx == std::vector<int>{0, 1});
  CHECK(bad.counterexample->col_idx == std::vector<int>{0, 1});
  CHECK(bad.counterexample->value == -1);

  CHECK(all_minors_nonnegative(j_truncation(Rational(2), 4, 5), 2).ok);
}

TEST_CASE("determinant handles zero pivots via row swaps") {
  RationalMatrix m = from_rows({{0, 1, 2}, {1, 0, 3}, {4, 5, 0}});
  CHECK(det(m) == det_cofactor(m));
  RationalMatrix singular = from_rows({{1, 2}, {2, 4}});
  CHECK(det(singular) == 0);
}

TEST_CASE("property: minor recurrence Delta_{j+1}(f) = c f~(0) Delta_j(f~)") {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> deg(1, 8);
  int checked = 0;
  for (int trial = 0; checked < 40 && trial < 200; ++trial) {
    Polynomial f = trial % 2 ? gen_stable(deg(rng), rng())
                             : gen_random(deg(rng), rng(), 20);
    if (f.coeff(0) == 0) continue;
    auto [p, q] = even_odd_split(f);
    if (q(0) == 0) continue;
    auto [c, f_tilde] = routh_step(f);
    int n = f.degree();
    auto big = leading_principal_minors(f, n + 1);
    auto small = leading_principal_minors(f_tilde, n);
    Rational ft0 = f_tilde(Rational(0));
    CHECK(big[0] == c * ft0);  // j = 0, Delta_0 = 1
    for (int j = 1; j <= n; ++j) CHECK(big[j] == c * ft0 * small[j - 1]);
    ++checked;
  }
  CHECK(checked == 40);
}

TEST_CASE("property: factorization holds for stable inputs at many sizes") {
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial f = gen_stable(deg(rng), rng());
    int n = f.degree();
    for (int rows = 1; rows <= 2 * (n + 1); rows += n + 1)
      for (int cols = 1; cols <= 2 * (n + 1); cols += n + 1)
        CHECK(verify_full_factorization(f, rows, cols));
    CHECK(verify_full_factorization(f, 2 * (n + 1), 2 * (n + 1)));
  }
}

TEST_CASE("property: minor criterion agrees with routh on random inputs") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> deg(1, 9);
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial f = trial % 2 ? gen_stable(deg(rng), rng())
                             : gen_random(deg(rng), rng(), 15);
    CHECK(minor_criterion(f).verdict == is_stable_routh(f).verdict);
  }
}
