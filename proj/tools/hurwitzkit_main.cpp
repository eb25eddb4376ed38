#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "hurwitzkit/hermite_biehler.hpp"
#include "hurwitzkit/hurwitz_matrix.hpp"
#include "hurwitzkit/polynomial.hpp"
#include "hurwitzkit/root_oracle.hpp"
#include "hurwitzkit/routh.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitStable = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNotStable = 3;
constexpr int kExitBoundary = 4;
constexpr int kExitDisagreement = 5;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

hwk::Polynomial parse_poly(const std::vector<std::string>& tokens,
                           bool descending) {
  std::vector<hwk::Rational> coeffs;
  for (const auto& raw : tokens) {
    std::stringstream ss(raw);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.empty()) continue;
      auto r = hwk::parse_rational(piece);
      if (!r) throw ParseError("cannot parse coefficient '" + piece + "'");
      coeffs.push_back(*r);
    }
  }
  if (coeffs.empty()) throw ParseError("no coefficients given");
  if (descending) std::reverse(coeffs.begin(), coeffs.end());
  return hwk::Polynomial(std::move(coeffs));
}

std::vector<std::vector<std::string>> read_poly_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

std::string verdict_name(hwk::Verdict v) {
  return v == hwk::Verdict::Stable ? "Stable" : "NotStable";
}

std::string oracle_name(hwk::OracleOutcome v) {
  switch (v) {
    case hwk::OracleOutcome::Stable: return "Stable";
    case hwk::OracleOutcome::NotStable: return "NotStable";
    case hwk::OracleOutcome::Boundary: return "Boundary";
  }
  return "?";
}

json chain_json(const hwk::RouthChain& chain) {
  json cs = json::array();
  for (const auto& c : chain.cs) cs.push_back(hwk::to_string(c));
  return {{"cs", cs}, {"b", hwk::to_string(chain.terminal)}};
}

json isolation_json(const hwk::RootIsolation& ri) {
  json arr = json::array();
  for (const auto& iv : ri.intervals)
    arr.push_back({{"lo", hwk::to_string(iv.lo)},
                   {"hi", hwk::to_string(iv.hi)},
                   {"multiplicity", iv.multiplicity}});
  return arr;
}

json interlacing_json(const hwk::InterlacingReport& r) {
  return {{"p_roots", isolation_json(r.p_roots)},
          {"q_roots", isolation_json(r.q_roots)},
          {"degree_ok", r.degree_ok},
          {"all_real", r.all_real},
          {"all_simple", r.all_simple},
          {"all_negative", r.all_negative},
          {"interlaced", r.interlaced},
          {"rightmost_is_p", r.rightmost_is_p},
          {"sign_condition", r.sign_condition},
          {"coprime", r.coprime},
          {"verdict", r.verdict}};
}

std::string input_echo(const hwk::Polynomial& f) {
  std::string s;
  for (std::size_t j = 0; j < f.coeffs().size(); ++j) {
    if (j) s += " ";
    s += hwk::to_string(f.coeffs()[j]);
  }
  return s;
}

struct CheckOutcome {
  json report;
  int exit_code;
};

CheckOutcome run_check(const hwk::Polynomial& f, const std::string& method,
                       double tol) {
  using namespace hwk;
  const auto start = std::chrono::steady_clock::now();
  json rep;
  rep["input"] = input_echo(f);
  rep["degree"] = f.degree();
  rep["verdicts"] = {{"routh", nullptr},
                     {"minors", nullptr},
                     {"hb", nullptr},
                     {"oracle", nullptr}};
  rep["chain"] = nullptr;
  rep["minors"] = nullptr;
  rep["interlacing"] = nullptr;

  bool want_all = method == "all";
  std::vector<Verdict> exact;
  std::optional<OracleOutcome> oracle_outcome;

  if (want_all || method == "routh") {
    StabilityReport r = is_stable_routh(f);
    rep["verdicts"]["routh"] = verdict_name(r.verdict);
    if (r.chain) rep["chain"] = chain_json(*r.chain);
    if (r.failure) rep["routh_failure"] = describe(*r.failure);
    exact.push_back(r.verdict);
  }
  if (want_all || method == "minors") {
    StabilityReport r = minor_criterion(f);
    rep["verdicts"]["minors"] = verdict_name(r.verdict);
    json minors = json::array();
    for (const auto& d : *r.minors) minors.push_back(hwk::to_string(d));
    rep["minors"] = minors;
    exact.push_back(r.verdict);
  }
  if ((want_all || method == "hb") && f.degree() >= 1) {
    StabilityReport r = condition_b(f);
    rep["verdicts"]["hb"] = verdict_name(r.verdict);
    if (r.interlacing) rep["interlacing"] = interlacing_json(*r.interlacing);
    if (r.phase_sign) rep["phase_sign"] = *r.phase_sign;
    exact.push_back(r.verdict);
  }
  if ((want_all || method == "oracle") && f.degree() >= 1) {
    OracleVerdict v = oracle_stability(f, tol);
    rep["verdicts"]["oracle"] = oracle_name(v.verdict);
    rep["oracle_margin"] = v.margin;
    oracle_outcome = v.verdict;
  }

  bool agreement = true;
  for (const auto& v : exact)
    if (v != exact.front()) agreement = false;
  rep["agreement"] = agreement;

  int code;
  if (!agreement) {
    code = kExitDisagreement;
  } else if (!exact.empty()) {
    code = exact.front() == Verdict::Stable ? kExitStable : kExitNotStable;
  } else if (oracle_outcome) {
    switch (*oracle_outcome) {
      case OracleOutcome::Stable: code = kExitStable; break;
      case OracleOutcome::NotStable: code = kExitNotStable; break;
      default: code = kExitBoundary; break;
    }
  } else {
    // oracle requested on a constant: no roots at all, vacuously stable
    code = f.coeff(0) != 0 ? kExitStable : kExitNotStable;
  }
  rep["exit"] = code;
  rep["elapsed_ms"] =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return {rep, code};
}

void print_check_text(const json& rep) {
  std::cout << "input: " << rep["input"].get<std::string>()
            << "  (degree " << rep["degree"].get<int>() << ")\n";
  for (const char* m : {"routh", "minors", "hb", "oracle"}) {
    const auto& v = rep["verdicts"][m];
    std::cout << "  " << m << ": " << (v.is_null() ? "-" : v.get<std::string>());
    if (std::string(m) == "routh" && rep.contains("routh_failure"))
      std::cout << "  [" << rep["routh_failure"].get<std::string>() << "]";
    std::cout << "\n";
  }
  if (!rep["chain"].is_null()) {
    std::cout << "  chain: cs = [";
    const auto& cs = rep["chain"]["cs"];
    for (std::size_t i = 0; i < cs.size(); ++i)
      std::cout << (i ? ", " : "") << cs[i].get<std::string>();
    std::cout << "], b = " << rep["chain"]["b"].get<std::string>() << "\n";
  }
  if (!rep["minors"].is_null()) {
    std::cout << "  minors: [";
    for (std::size_t i = 0; i < rep["minors"].size(); ++i)
      std::cout << (i ? ", " : "") << rep["minors"][i].get<std::string>();
    std::cout << "]\n";
  }
  std::cout << "  agreement: " << (rep["agreement"].get<bool>() ? "yes" : "NO")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hurwitzkit: Hurwitz stability of real polynomials by Routh "
               "reduction, Hurwitz-matrix minors, and root interlacing"};
  app.require_subcommand(1);

  bool json_out = false, descending = false;
  app.add_flag("--json", json_out, "emit JSON reports");
  app.add_flag("--descending", descending,
               "coefficients given highest power first");

  std::vector<std::string> coeff_args;
  std::string file_path;
  std::string method = "all";
  int rows = 0, cols = 0, order = 4, k = 0;
  int count = 0, degree_max = 6, coeff_bound = 20;
  unsigned long long seed = 1;
  double tol = 1e-9, spread = 4.0;
  bool gen_stable_mode = false, gen_random_mode = false;

  auto add_poly_opts = [&](CLI::App* cmd) {
    cmd->fallthrough();  // let --json / --descending appear after the subcommand
    cmd->add_option("coefficients", coeff_args, "polynomial coefficients");
    cmd->add_option("--file", file_path, "read polynomials from file");
  };

  auto* c_check = app.add_subcommand("check", "stability verdict");
  add_poly_opts(c_check);
  c_check->add_option("--method", method, "all|routh|minors|hb|oracle")
      ->check(CLI::IsMember({"all", "routh", "minors", "hb", "oracle"}));
  c_check->add_option("--tol", tol, "oracle margin tolerance");

  auto* c_factor = app.add_subcommand("factor", "Routh chain and H(f) factorization");
  add_poly_opts(c_factor);
  c_factor->add_option("--rows", rows, "truncation rows (default 2(n+1))");
  c_factor->add_option("--cols", cols, "truncation cols (default 2(n+1))");

  auto* c_minors = app.add_subcommand("minors", "leading principal minors of H(f)");
  add_poly_opts(c_minors);
  c_minors->add_option("--k", k, "number of minors (default n+1)");

  auto* c_tnn = app.add_subcommand("tnn", "total nonnegativity brute force");
  add_poly_opts(c_tnn);
  c_tnn->add_option("--rows", rows, "truncation rows (default n+3)");
  c_tnn->add_option("--cols", cols, "truncation cols (default n+3)");
  c_tnn->add_option("--order", order, "max minor order (default 4)");

  auto* c_inter = app.add_subcommand("interlace", "even/odd interlacing report");
  add_poly_opts(c_inter);

  auto* c_roots = app.add_subcommand("roots", "floating-point roots (oracle)");
  add_poly_opts(c_roots);
  c_roots->add_option("--tol", tol, "oracle margin tolerance");

  auto* c_gen = app.add_subcommand("generate", "emit test polynomials");
  c_gen->fallthrough();
  c_gen->add_option("--count", count, "how many")->default_val(1);
  c_gen->add_option("--degree-max", degree_max, "maximum degree");
  c_gen->add_option("--seed", seed, "RNG seed");
  c_gen->add_option("--coeff-bound", coeff_bound, "|coefficient| bound (random mode)");
  c_gen->add_option("--spread", spread, "root real-part spread (stable mode)");
  c_gen->add_flag("--stable", gen_stable_mode, "stable-by-construction inputs");
  c_gen->add_flag("--random", gen_random_mode, "uniform integer coefficients");

  auto* c_cross = app.add_subcommand("crosscheck",
                                     "randomized agreement suite across methods");
  c_cross->fallthrough();
  c_cross->add_option("--count", count, "number of polynomials");
  c_cross->add_option("--degree-max", degree_max, "maximum degree");
  c_cross->add_option("--seed", seed, "RNG seed");
  c_cross->add_option("--coeff-bound", coeff_bound, "|coefficient| bound");
  c_cross->add_option("--tol", tol, "oracle margin tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  auto gather_inputs = [&]() {
    std::vector<hwk::Polynomial> polys;
    if (!file_path.empty()) {
      for (const auto& tokens : read_poly_file(file_path))
        polys.push_back(parse_poly(tokens, descending));
    } else {
      polys.push_back(parse_poly(coeff_args, descending));
    }
    for (const auto& f : polys)
      if (f.is_zero())
        throw ParseError("the zero polynomial has no stability verdict");
    return polys;
  };

  try {
    if (c_check->parsed()) {
      int worst = kExitStable;
      auto bump = [&](int code) {
        // disagreement > usage > boundary > notstable > stable
        static const int rank[] = {0, 0, 3, 1, 2, 4};
        if (rank[code] > rank[worst]) worst = code;
      };
      for (const auto& f : gather_inputs()) {
        CheckOutcome out = run_check(f, method, tol);
        if (json_out)
          std::cout << out.report.dump() << "\n";
        else
          print_check_text(out.report);
        bump(out.exit_code);
      }
      return worst;
    }

    if (c_factor->parsed()) {
      hwk::Polynomial f = gather_inputs().front();
      int n = f.degree();
      if (rows <= 0) rows = 2 * (n + 1);
      if (cols <= 0) cols = 2 * (n + 1);
      hwk::ChainResult result = hwk::routh_chain(f);
      if (std::holds_alternative<hwk::Failure>(result)) {
        const auto& fail = std::get<hwk::Failure>(result);
        if (json_out)
          std::cout << json{{"input", input_echo(f)},
                            {"failure", hwk::describe(fail)}}
                           .dump()
                    << "\n";
        else
          std::cout << "chain failure: " << hwk::describe(fail) << "\n";
        return kExitNotStable;
      }
      const auto& chain = std::get<hwk::RouthChain>(result);
      bool verified = hwk::verify_full_factorization(f, rows, cols);
      if (json_out) {
        std::cout << json{{"input", input_echo(f)},
                          {"chain", chain_json(chain)},
                          {"rows", rows},
                          {"cols", cols},
                          {"verified", verified}}
                         .dump()
                  << "\n";
      } else {
        std::cout << "cs = [";
        for (std::size_t i = 0; i < chain.cs.size(); ++i)
          std::cout << (i ? ", " : "") << hwk::to_string(chain.cs[i]);
        std::cout << "], b = " << hwk::to_string(chain.terminal) << "\n";
        std::cout << "H(f) = J(c_1)...J(c_n) H(b) at " << rows << "x" << cols
                  << ": " << (verified ? "verified" : "MISMATCH") << "\n";
      }
      return verified ? 0 : 1;
    }

    if (c_minors->parsed()) {
      hwk::Polynomial f = gather_inputs().front();
      if (k <= 0) k = f.degree() + 1;
      auto minors = hwk::leading_principal_minors(f, k);
      if (json_out) {
        json arr = json::array();
        for (const auto& d : minors) arr.push_back(hwk::to_string(d));
        std::cout << json{{"input", input_echo(f)}, {"minors", arr}}.dump()
                  << "\n";
      } else {
        std::cout << "[";
        for (std::size_t i = 0; i < minors.size(); ++i)
          std::cout << (i ? ", " : "") << hwk::to_string(minors[i]);
        std::cout << "]\n";
      }
      return 0;
    }

    if (c_tnn->parsed()) {
      hwk::Polynomial f = gather_inputs().front();
      int n = f.degree();
      if (rows <= 0) rows = n + 3;
      if (cols <= 0) cols = n + 3;
      int max_order = std::min(order, std::min(rows, cols));
      auto m = hwk::hurwitz_truncation(f, rows, cols);
      auto result = hwk::all_minors_nonnegative(m, max_order);
      if (json_out) {
        json rep{{"input", input_echo(f)},
                 {"rows", rows},
                 {"cols", cols},
                 {"max_order", max_order},
                 {"ok", result.ok}};
        if (result.counterexample) {
          rep["counterexample"] = {
              {"rows", result.counterexample->row_idx},
              {"cols", result.counterexample->col_idx},
              {"value", hwk::to_string(result.counterexample->value)}};
        }
        std::cout << rep.dump() << "\n";
      } else if (result.ok) {
        std::cout << "ok: all minors of order <= " << max_order
                  << " of the " << rows << "x" << cols
                  << " truncation are nonnegative\n";
      } else {
        std::cout << "violation: minor value "
                  << hwk::to_string(result.counterexample->value) << "\n";
      }
      return result.ok ? 0 : 1;
    }

    if (c_inter->parsed()) {
      hwk::Polynomial f = gather_inputs().front();
      hwk::StabilityReport rep = hwk::condition_b(f);
      if (json_out) {
        json j{{"input", input_echo(f)},
               {"verdict", verdict_name(rep.verdict)},
               {"interlacing", rep.interlacing
                                   ? interlacing_json(*rep.interlacing)
                                   : json(nullptr)}};
        if (rep.phase_sign) j["phase_sign"] = *rep.phase_sign;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
        if (rep.interlacing) {
          const auto& r = *rep.interlacing;
          auto show = [](const char* name, bool v) {
            std::cout << "  " << name << ": " << (v ? "yes" : "no") << "\n";
          };
          show("degree_ok", r.degree_ok);
          show("all_real", r.all_real);
          show("all_simple", r.all_simple);
          show("all_negative", r.all_negative);
          show("interlaced", r.interlaced);
          show("rightmost_is_p", r.rightmost_is_p);
          show("sign_condition", r.sign_condition);
          show("coprime", r.coprime);
        }
      }
      return rep.stable() ? 0 : kExitNotStable;
    }

    if (c_roots->parsed()) {
      hwk::Polynomial f = gather_inputs().front();
      hwk::RootSet roots = hwk::all_roots(f);
      hwk::OracleVerdict v = hwk::oracle_stability(f, tol);
      if (json_out) {
        json arr = json::array();
        for (std::size_t i = 0; i < roots.roots.size(); ++i)
          arr.push_back({{"re", roots.roots[i].real()},
                         {"im", roots.roots[i].imag()},
                         {"residual", roots.residuals[i]}});
        std::cout << json{{"input", input_echo(f)},
                          {"roots", arr},
                          {"verdict", oracle_name(v.verdict)},
                          {"margin", v.margin}}
                         .dump()
                  << "\n";
      } else {
        for (const auto& z : roots.roots)
          std::cout << z.real() << (z.imag() < 0 ? " - " : " + ")
                    << std::abs(z.imag()) << "i\n";
        std::cout << "verdict: " << oracle_name(v.verdict)
                  << ", margin = " << v.margin << "\n";
      }
      return v.verdict == hwk::OracleOutcome::Stable      ? kExitStable
             : v.verdict == hwk::OracleOutcome::NotStable ? kExitNotStable
                                                          : kExitBoundary;
    }

    if (c_gen->parsed()) {
      if (count < 1) {
        std::cerr << "generate: --count must be >= 1\n";
        return kExitUsage;
      }
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> deg(1, std::max(1, degree_max));
      bool stable = gen_stable_mode || !gen_random_mode;
      for (int i = 0; i < count; ++i) {
        hwk::Polynomial f =
            stable ? hwk::gen_stable(deg(rng), rng(), spread)
                   : hwk::gen_random(deg(rng), rng(), coeff_bound);
        std::cout << input_echo(f) << "\n";
      }
      return 0;
    }

    if (c_cross->parsed()) {
      if (count < 1) {
        std::cerr << "crosscheck: --count must be >= 1\n";
        return kExitUsage;
      }
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> deg(1, std::max(1, degree_max));
      int agreed = 0, disagreed = 0, excluded = 0, oracle_mismatch = 0;
      for (int i = 0; i < count; ++i) {
        hwk::Polynomial f = (i % 2 == 0)
                                ? hwk::gen_stable(deg(rng), rng(), spread)
                                : hwk::gen_random(deg(rng), rng(), coeff_bound);
        hwk::Verdict routh = hwk::is_stable_routh(f).verdict;
        hwk::Verdict minors = hwk::minor_criterion(f).verdict;
        hwk::Verdict hb = hwk::condition_b(f).verdict;
        bool exact_agree = routh == minors && minors == hb;
        if (!exact_agree) {
          ++disagreed;
          std::cerr << "DISAGREEMENT on " << input_echo(f) << "\n";
          continue;
        }
        hwk::OracleVerdict ov = hwk::oracle_stability(f, tol);
        if (ov.verdict == hwk::OracleOutcome::Boundary) {
          ++excluded;
          ++agreed;
          continue;
        }
        bool oracle_agree =
            (ov.verdict == hwk::OracleOutcome::Stable) ==
            (routh == hwk::Verdict::Stable);
        if (!oracle_agree) {
          ++oracle_mismatch;
          std::cerr << "ORACLE MISMATCH on " << input_echo(f)
                    << " (margin " << ov.margin << ")\n";
        }
        ++agreed;
      }
      json summary{{"total", count},
                   {"agreed", agreed},
                   {"disagreed", disagreed},
                   {"oracle_mismatch", oracle_mismatch},
                   {"oracle_boundary_excluded", excluded}};
      if (json_out)
        std::cout << summary.dump() << "\n";
      else
        std::cout << "total " << count << ", exact-agree " << agreed
                  << ", disagreements " << disagreed << ", oracle mismatches "
                  << oracle_mismatch << ", boundary excluded " << excluded
                  << "\n";
      return (disagreed == 0 && oracle_mismatch == 0) ? 0 : kExitDisagreement;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
