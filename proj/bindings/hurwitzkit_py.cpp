#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hurwitzkit/hermite_biehler.hpp"
#include "hurwitzkit/hurwitz_matrix.hpp"
#include "hurwitzkit/polynomial.hpp"
#include "hurwitzkit/root_oracle.hpp"
#include "hurwitzkit/routh.hpp"

namespace py = pybind11;

namespace {

hwk::Polynomial poly_from(const std::vector<std::string>& coeffs) {
  std::vector<hwk::Rational> parsed;
  for (const auto& s : coeffs) {
    auto r = hwk::parse_rational(s);
    if (!r) throw py::value_error("cannot parse coefficient '" + s + "'");
    parsed.push_back(*r);
  }
  if (parsed.empty()) throw py::value_error("empty coefficient list");
  return hwk::Polynomial(std::move(parsed));
}

std::vector<std::string> coeff_strings(const hwk::Polynomial& f) {
  std::vector<std::string> out;
  for (const auto& c : f.coeffs()) out.push_back(hwk::to_string(c));
  return out;
}

std::string verdict_name(hwk::Verdict v) {
  return v == hwk::Verdict::Stable ? "Stable" : "NotStable";
}

py::dict chain_dict(const hwk::RouthChain& chain) {
  py::list cs;
  for (const auto& c : chain.cs) cs.append(hwk::to_string(c));
  py::dict d;
  d["cs"] = cs;
  d["b"] = hwk::to_string(chain.terminal);
  return d;
}

py::dict interlacing_dict(const hwk::InterlacingReport& r) {
  auto roots = [](const hwk::RootIsolation& ri) {
    py::list out;
    for (const auto& iv : ri.intervals) {
      py::dict d;
      d["lo"] = hwk::to_string(iv.lo);
      d["hi"] = hwk::to_string(iv.hi);
      d["multiplicity"] = iv.multiplicity;
      out.append(d);
    }
    return out;
  };
  py::dict d;
  d["p_roots"] = roots(r.p_roots);
  d["q_roots"] = roots(r.q_roots);
  d["degree_ok"] = r.degree_ok;
  d["all_real"] = r.all_real;
  d["all_simple"] = r.all_simple;
  d["all_negative"] = r.all_negative;
  d["interlaced"] = r.interlaced;
  d["rightmost_is_p"] = r.rightmost_is_p;
  d["sign_condition"] = r.sign_condition;
  d["coprime"] = r.coprime;
  d["verdict"] = r.verdict;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Hurwitz stability of real polynomials: Routh reduction, Hurwitz-matrix "
      "minors, root interlacing, and a floating-point root oracle. "
      "Coefficients are exact rationals passed as strings ('3', '6/11', "
      "'1.25'), ascending by power.";

  m.def(
      "check",
      [](const std::vector<std::string>& coeffs) {
        hwk::Polynomial f = poly_from(coeffs);
        py::dict out;
        out["degree"] = f.degree();
        hwk::StabilityReport routh = hwk::is_stable_routh(f);
        out["routh"] = verdict_name(routh.verdict);
        if (routh.chain) out["chain"] = chain_dict(*routh.chain);
        if (routh.failure) out["routh_failure"] = hwk::describe(*routh.failure);
        hwk::StabilityReport minors = hwk::minor_criterion(f);
        out["minors_verdict"] = verdict_name(minors.verdict);
        py::list ms;
        for (const auto& d : *minors.minors) ms.append(hwk::to_string(d));
        out["minors"] = ms;
        if (f.degree() >= 1) {
          hwk::StabilityReport hb = hwk::condition_b(f);
          out["hb"] = verdict_name(hb.verdict);
          if (hb.interlacing)
            out["interlacing"] = interlacing_dict(*hb.interlacing);
        }
        bool stable = routh.verdict == hwk::Verdict::Stable;
        out["stable"] = stable;
        return out;
      },
      py::arg("coeffs"),
      "Run all exact stability methods and return a combined report.");

  m.def(
      "routh_chain",
      [](const std::vector<std::string>& coeffs) -> py::object {
        auto result = hwk::routh_chain(poly_from(coeffs));
        if (std::holds_alternative<hwk::Failure>(result)) {
          py::dict d;
          d["failure"] = hwk::describe(std::get<hwk::Failure>(result));
          return d;
        }
        return chain_dict(std::get<hwk::RouthChain>(result));
      },
      py::arg("coeffs"),
      "Reduction chain (c_1..c_n, b), or a failure descriptor.");

  m.def(
      "leading_principal_minors",
      [](const std::vector<std::string>& coeffs, int k) {
        std::vector<std::string> out;
        for (const auto& d :
             hwk::leading_principal_minors(poly_from(coeffs), k))
          out.push_back(hwk::to_string(d));
        return out;
      },
      py::arg("coeffs"), py::arg("k"));

  m.def(
      "verify_factorization",
      [](const std::vector<std::string>& coeffs, int rows, int cols) {
        return hwk::verify_full_factorization(poly_from(coeffs), rows, cols);
      },
      py::arg("coeffs"), py::arg("rows"), py::arg("cols"));

  m.def(
      "hurwitz_matrix",
      [](const std::vector<std::string>& coeffs, int rows, int cols) {
        auto m_ = hwk::hurwitz_truncation(poly_from(coeffs), rows, cols);
        std::vector<std::vector<std::string>> out(rows);
        for (int i = 0; i < rows; ++i)
          for (int j = 0; j < cols; ++j)
            out[i].push_back(hwk::to_string(m_.at(i, j)));
        return out;
      },
      py::arg("coeffs"), py::arg("rows"), py::arg("cols"));

  m.def(
      "totally_nonnegative",
      [](const std::vector<std::string>& coeffs, int rows, int cols,
         int max_order) -> py::object {
        hwk::Polynomial f = poly_from(coeffs);
        if (rows <= 0) rows = f.degree() + 3;
        if (cols <= 0) cols = f.degree() + 3;
        auto m_ = hwk::hurwitz_truncation(f, rows, cols);
        auto result = hwk::all_minors_nonnegative(
            m_, std::min(max_order, std::min(rows, cols)));
        py::dict d;
        d["ok"] = result.ok;
        if (result.counterexample) {
          d["rows"] = result.counterexample->row_idx;
          d["cols"] = result.counterexample->col_idx;
          d["value"] = hwk::to_string(result.counterexample->value);
        }
        return d;
      },
      py::arg("coeffs"), py::arg("rows") = 0, py::arg("cols") = 0,
      py::arg("max_order") = 4);

  m.def(
      "interlacing",
      [](const std::vector<std::string>& coeffs) {
        hwk::StabilityReport rep = hwk::condition_b(poly_from(coeffs));
        py::dict d = rep.interlacing ? interlacing_dict(*rep.interlacing)
                                     : py::dict();
        d["stable"] = rep.stable();
        return d;
      },
      py::arg("coeffs"));

  m.def(
      "roots",
      [](const std::vector<std::string>& coeffs) {
        hwk::RootSet rs = hwk::all_roots(poly_from(coeffs));
        return rs.roots;
      },
      py::arg("coeffs"), "Floating-point roots (oracle path).");

  m.def(
      "oracle_margin",
      [](const std::vector<std::string>& coeffs, double tol) {
        auto v = hwk::oracle_stability(poly_from(coeffs), tol);
        py::dict d;
        d["verdict"] = v.verdict == hwk::OracleOutcome::Stable ? "Stable"
                       : v.verdict == hwk::OracleOutcome::NotStable
                           ? "NotStable"
                           : "Boundary";
        d["margin"] = v.margin;
        return d;
      },
      py::arg("coeffs"), py::arg("tol") = 1e-9);

  m.def(
      "generate_stable",
      [](int n, unsigned long long seed, double spread) {
        return coeff_strings(hwk::gen_stable(n, seed, spread));
      },
      py::arg("n"), py::arg("seed"), py::arg("spread") = 4.0);

  m.def(
      "generate_random",
      [](int n, unsigned long long seed, int coeff_bound) {
        return coeff_strings(hwk::gen_random(n, seed, coeff_bound));
      },
      py::arg("n"), py::arg("seed"), py::arg("coeff_bound") = 20);
}
