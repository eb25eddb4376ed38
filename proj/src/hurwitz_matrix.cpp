#include "hurwitzkit/hurwitz_matrix.hpp"

#include <numeric>

#include "hurwitzkit/routh.hpp"

namespace hwk {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_)
    throw std::invalid_argument("matrix multiply: shape mismatch");
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        const Rational& b = other.at(k, j);
        if (b != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

RationalMatrix RationalMatrix::corner(int r, int c) const {
  RationalMatrix out(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) out.at(i, j) = at(i, j);
  return out;
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& row_idx,
                                         const std::vector<int>& col_idx) const {
  RationalMatrix out(static_cast<int>(row_idx.size()),
                     static_cast<int>(col_idx.size()));
  for (std::size_t i = 0; i < row_idx.size(); ++i)
    for (std::size_t j = 0; j < col_idx.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) =
          at(row_idx[i], col_idx[j]);
  return out;
}

Rational det(RationalMatrix m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  int sign = 1;
  Rational prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Rational(0);
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) =
            (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

RationalMatrix hurwitz_truncation(const Polynomial& f, int rows, int cols) {
  RationalMatrix out(rows, cols);
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= cols; ++j) out.at(i - 1, j - 1) = f.coeff(2 * j - i - 1);
  return out;
}

RationalMatrix j_truncation(const Rational& c, int rows, int cols) {
  RationalMatrix out(rows, cols);
  for (int i = 1; i <= rows; ++i) {
    if (i % 2 == 1) {
      if (i <= cols) out.at(i - 1, i - 1) = c;
      if (i + 1 <= cols) out.at(i - 1, i) = 1;
    } else {
      if (i + 1 <= cols) out.at(i - 1, i) = 1;
    }
  }
  return out;
}

bool verify_step_factorization(const Polynomial& f, int rows, int cols) {
  RouthStep step = routh_step(f);
  RationalMatrix lhs = hurwitz_truncation(f, rows, cols);
  RationalMatrix rhs = j_truncation(step.c, rows, rows + 1) *
                       hurwitz_truncation(step.f_tilde, rows + 1, cols);
  return lhs == rhs;
}

bool verify_full_factorization(const Polynomial& f, int rows, int cols) {
  ChainResult result = routh_chain(f);
  if (std::holds_alternative<Failure>(result))
    throw std::domain_error("verify_full_factorization: " +
                            describe(std::get<Failure>(result)));
  const RouthChain& chain = std::get<RouthChain>(result);
  const int n = static_cast<int>(chain.cs.size());
  RationalMatrix product =
      hurwitz_truncation(Polynomial::constant(chain.terminal), rows + n, cols);
  for (int k = n; k >= 1; --k)
    product = j_truncation(chain.cs[k - 1], rows + k - 1, rows + k) * product;
  return hurwitz_truncation(f, rows, cols) == product;
}

std::vector<Rational> leading_principal_minors(const Polynomial& f, int k) {
  if (k < 1) throw std::invalid_argument("leading_principal_minors: k < 1");
  RationalMatrix h = hurwitz_truncation(f, k, k);
  std::vector<Rational> minors;
  minors.reserve(k);
  for (int j = 1; j <= k; ++j) minors.push_back(det(h.corner(j, j)));
  return minors;
}

StabilityReport minor_criterion(const Polynomial& f) {
  if (f.is_zero())
    throw std::domain_error("minor_criterion: zero polynomial");
  StabilityReport rep;
  rep.method = Method::Minors;
  Polynomial g = f;
  if (g(0) < 0) {
    g = -g;
    rep.sign_flipped = true;
  }
  rep.minors = leading_principal_minors(g, g.degree() + 1);
  bool all_positive = true;
  for (const auto& d : *rep.minors)
    if (d <= 0) all_positive = false;
  rep.verdict = all_positive ? Verdict::Stable : Verdict::NotStable;
  if (g.degree() == 0) rep.vacuous = true;
  return rep;
}

namespace {

// Integer Bareiss; only the sign is needed for the nonnegativity scan.
int det_sign_int(std::vector<Int> m, int n) {
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k * n + k] == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i * n + k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i * n + j] =
            (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
    prev = m[k * n + k];
  }
  const Int& last = m[(n - 1) * n + (n - 1)];
  if (last == 0) return 0;
  return last > 0 ? sign : -sign;
}

bool next_combination(std::vector<int>& idx, int bound) {
  const int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[i] < bound - (r - i)) {
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

TnnResult all_minors_nonnegative(const RationalMatrix& m, int max_order) {
  if (max_order > std::min(m.rows(), m.cols()))
    throw std::invalid_argument("all_minors_nonnegative: order too large");

  // Row scaling by positive integers preserves every minor's sign; clearing
  // denominators lets the inner loop run over integers.
  std::vector<Int> scaled(m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (int j = 0; j < m.cols(); ++j)
      lcm = boost::multiprecision::lcm(
          lcm, boost::multiprecision::denominator(m.at(i, j)));
    for (int j = 0; j < m.cols(); ++j) {
      const Rational v = m.at(i, j) * Rational(lcm);
      scaled[i * m.cols() + j] = boost::multiprecision::numerator(v);
    }
  }

  std::vector<Int> buf;
  for (int r = 1; r <= max_order; ++r) {
    std::vector<int> rows_idx(r), cols_idx(r);
    std::iota(rows_idx.begin(), rows_idx.end(), 0);
    do {
      std::iota(cols_idx.begin(), cols_idx.end(), 0);
      do {
        buf.assign(r * r, Int(0));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            buf[i * r + j] = scaled[rows_idx[i] * m.cols() + cols_idx[j]];
        if (det_sign_int(buf, r) < 0) {
          MinorCounterexample ce;
          ce.row_idx = rows_idx;
          ce.col_idx = cols_idx;
          ce.value = det(m.submatrix(rows_idx, cols_idx));
          return {false, ce};
        }
      } while (next_combination(cols_idx, m.cols()));
    } while (next_combination(rows_idx, m.rows()));
  }
  return {true, std::nullopt};
}

}  // namespace hwk
