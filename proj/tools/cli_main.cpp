#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "jsuper/evalops.hpp"
#include "jsuper/suite.hpp"

namespace {

using namespace jsuper;

struct DoubleEvalOps {
  using Element = GammaDouble::Element;
  const GammaDouble* alg;
  Element from_gamma(GammaEl g) const { return alg->from_parts(std::move(g), GammaEl()); }
  Element bar(GammaEl g) const { return alg->from_parts(GammaEl(), std::move(g)); }
  Element w(int, const GammaEl&) const {
    throw std::invalid_argument("w slots do not exist in this construction");
  }
  Element xi(int, const GammaEl&) const {
    throw std::invalid_argument("x slots do not exist in this construction");
  }
  Element add(const Element& a, const Element& b) const { return alg->add(a, b); }
  Element neg(const Element& a) const { return alg->scale(Rat(-1), a); }
  Element mul(const Element& a, const Element& b) const { return alg->mult(a, b); }
};

std::string eval_text(Construction c, const std::string& text) {
  switch (c) {
    case Construction::JVec:
      return jvec_describe(parse_jvec(text));
    case Construction::JADelta:
      return jadelta_describe(parse_jadelta(text));
    case Construction::Double: {
      GammaCarrier carrier;
      GammaDouble dbl(d_bracket_spec(carrier));
      DoubleEvalOps ops{&dbl};
      return dbl.describe(expr::eval_super(expr::parse(text), ops));
    }
    case Construction::CK:
      return ck_describe(parse_ck_expr(text));
    case Construction::GCK:
      return ck_describe(expr::eval_super(expr::parse(text), GCKEvalOps{}));
  }
  throw std::logic_error("unreachable construction");
}

std::vector<std::string> generator_set(Construction c) {
  switch (c) {
    case Construction::JVec:
    case Construction::Double:
      return {"1", "y", "x", "bar(1)", "bar(y)", "bar(x)"};
    case Construction::JADelta:
      return {"1", "y^2", "x*y", "bar(y)", "bar(x)"};
    case Construction::CK:
      return {"1", "w1(1)", "w2(1)", "w3(1)", "bar(1)", "x1(1)", "x2(1)", "x3(1)"};
    case Construction::GCK:
      return {"1",      "y^2",    "x*y",   "w1(1)", "w2(1)", "w3(1)",
              "bar(x)", "bar(y)", "x1(x)", "x2(x)", "x3(x)"};
  }
  throw std::logic_error("unreachable construction");
}

void print_table(Construction c, std::ostream& os) {
  std::vector<std::string> gens = generator_set(c);
  const size_t n = gens.size();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      cells[i][j] = eval_text(c, "(" + gens[i] + ") * (" + gens[j] + ")");

  std::vector<size_t> width(n + 1, 1);
  for (const auto& g : gens) width[0] = std::max(width[0], g.size());
  for (size_t j = 0; j < n; ++j) {
    width[j + 1] = gens[j].size();
    for (size_t i = 0; i < n; ++i) width[j + 1] = std::max(width[j + 1], cells[i][j].size());
  }

  auto pad = [&os](const std::string& s, size_t w) { os << std::left << std::setw(static_cast<int>(w)) << s; };
  os << "multiplication table, " << construction_name(c) << " generators (row * column)\n\n";
  pad("*", width[0]);
  for (size_t j = 0; j < n; ++j) {
    os << " | ";
    pad(gens[j], width[j + 1]);
  }
  os << "\n";
  size_t total = width[0];
  for (size_t j = 0; j < n; ++j) total += 3 + width[j + 1];
  os << std::string(total, '-') << "\n";
  for (size_t i = 0; i < n; ++i) {
    pad(gens[i], width[0]);
    for (size_t j = 0; j < n; ++j) {
      os << " | ";
      pad(cells[i][j], width[j + 1]);
    }
    os << "\n";
  }
}

void print_report(const RunReport& rep, std::ostream& os) {
  os << "construction " << construction_name(rep.config.construction) << ", suite "
     << suite_name(rep.config.suite) << ", seed " << rep.config.seed << "\n";
  for (const auto& chk : rep.checks) {
    os << "  [" << check_status_name(chk.status) << "] " << chk.identity << " (" << chk.trials
       << " trials)\n";
    if (chk.witness) {
      for (const auto& [name, value] : chk.witness->inputs) os << "      " << name << " = " << value << "\n";
      os << "      lhs: " << chk.witness->lhs << "\n";
      os << "      rhs: " << chk.witness->rhs << "\n";
      if (chk.witness->trial_index >= 0) os << "      at trial " << chk.witness->trial_index << "\n";
    }
  }
  os << "overall: " << overall_name(rep.overall) << "  (" << std::fixed << std::setprecision(2)
     << rep.wall_seconds << " s)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for curve-based Jordan superalgebras"};
  app.require_subcommand(1);

  const std::vector<std::string> construction_names = {"jvec", "jadelta", "double", "ck", "gck"};
  const std::vector<std::string> suite_names = {"jordan",    "bracket",      "simplicity", "noncyclic",
                                                "embedding", "certificates", "all"};

  // verify
  SuiteConfig cfg;
  std::string cons_name = "jvec";
  std::string suite_name_arg = "jordan";
  std::string json_path;
  bool parallel = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite and report pass/fail");
  verify->add_option("--construction", cons_name, "algebra under test")
      ->check(CLI::IsMember(construction_names));
  verify->add_option("--suite", suite_name_arg, "which checks to run")
      ->check(CLI::IsMember(suite_names));
  verify->add_option("--trials", cfg.trials, "random trials per identity")
      ->check(CLI::Range(1L, 1000000L));
  verify->add_option("--max-deg", cfg.max_deg, "degree bound for sampled elements")
      ->check(CLI::Range(0, 64));
  verify->add_option("--window", cfg.window, "starting saturation degree window")
      ->check(CLI::Range(1, 512));
  verify->add_option("--max-window", cfg.max_window, "saturation gives up past this window")
      ->check(CLI::Range(1, 512));
  verify->add_option("--deg-bound", cfg.deg_bound, "search bound for probes and certificates")
      ->check(CLI::Range(1, 64));
  verify->add_option("--seed", cfg.seed, "master seed; every run with the same seed is identical");
  verify->add_option("--json", json_path, "also write the report as JSON to this path");
  verify->add_flag("--parallel", parallel, "run trial batches on OpenMP threads");

  // eval
  std::string eval_cons = "jvec";
  std::string eval_expr;
  auto* eval = app.add_subcommand("eval", "evaluate an element expression to canonical form");
  eval->add_option("--construction", eval_cons, "algebra to evaluate in")
      ->check(CLI::IsMember(construction_names));
  eval->add_option("expr", eval_expr, "expression, e.g. \"bar(x) * bar(y)\"")->required();

  // table
  std::string table_cons = "jvec";
  auto* table = app.add_subcommand("table", "print the generator multiplication table");
  table->add_option("--construction", table_cons, "algebra to tabulate")
      ->check(CLI::IsMember(construction_names));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (verify->parsed()) {
      if (cfg.window > cfg.max_window) {
        std::cerr << "error: --window must not exceed --max-window\n";
        return 3;
      }
      cfg.construction = *construction_from_name(cons_name);
      cfg.suite = *suite_from_name(suite_name_arg);
      cfg.exec = parallel ? ExecPolicy::Parallel : ExecPolicy::Serial;
      RunReport rep = run_suite(cfg);
      print_report(rep, std::cout);
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
          std::cerr << "error: cannot write " << json_path << "\n";
          return 3;
        }
        out << report_to_json(rep).dump(2) << "\n";
      }
      switch (rep.overall) {
        case Overall::Pass: return 0;
        case Overall::Fail: return 1;
        case Overall::Inconclusive: return 2;
      }
    } else if (eval->parsed()) {
      std::cout << eval_text(*construction_from_name(eval_cons), eval_expr) << "\n";
      return 0;
    } else if (table->parsed()) {
      print_table(*construction_from_name(table_cons), std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
