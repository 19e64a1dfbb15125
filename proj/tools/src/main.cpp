#include <iostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qgroot/laurent.hpp"
#include "qgroot_cli/commands.hpp"
#include "qgroot_cli/expr.hpp"

namespace {

using qgroot::cli::RunConfig;

struct Optionals {
  int ell = 0;
  std::string cartan;
  int bound = 0;
};

void add_common(CLI::App* sub, RunConfig& cfg, Optionals& opt) {
  sub->add_option("--ell", opt.ell, "Order parameter of the root of unity (>= 2)");
  sub->add_option("--cartan", opt.cartan, "A1, A1xA1, A2, A3, D4 or a matrix such as \"2,-1;-1,2\"");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void finish(RunConfig& cfg, const Optionals& opt, const CLI::App* sub) {
  if (sub->count("--ell")) cfg.ell = opt.ell;
  if (sub->count("--cartan")) cfg.cartan = opt.cartan;
  if (sub->get_option_no_throw("--bound") && sub->count("--bound")) cfg.bound = opt.bound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in divided-power quantum groups at roots of unity"};
  app.require_subcommand(1);

  RunConfig cfg;
  Optionals opt;
  std::string expr, table = "p", left, right;
  int n = 3;

  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("expr", expr, "Expression, see docs/grammar.md")->required();
  add_common(nf, cfg, opt);
  nf->add_option("--d", cfg.d, "Symmetrizing vector (generic mode only), e.g. 1,2")->delimiter(',');

  auto* tables = app.add_subcommand("tables", "Coefficient tables p, q, b or h");
  tables->add_option("table", table, "p | q | b | h")->check(CLI::IsMember({"p", "q", "b", "h"}));
  tables->add_option("--n", n, "Largest row");
  add_common(tables, cfg, opt);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite,--suite", cfg.suite, "torus | iso | commutators | td | multi | all");
  verify->add_option("--bound", opt.bound, "Override the suite's degree bound");
  verify->add_option("--d", cfg.d, "Symmetrizing vector for the multi suite, e.g. 1,2")->delimiter(',');
  verify->add_option("--seed", cfg.seed, "Seed for sampled checks");
  add_common(verify, cfg, opt);

  auto* pairing = app.add_subcommand("pairing", "Left action, right action and pairing of F- and E-words");
  pairing->add_option("--left", left, "Element of V^- (F letters)")->required();
  pairing->add_option("--right", right, "Element of V^+ (E letters)")->required();
  add_common(pairing, cfg, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    qgroot::cli::Outcome o;
    if (*nf) {
      finish(cfg, opt, nf);
      o = qgroot::cli::cmd_nf(cfg, expr);
    } else if (*tables) {
      finish(cfg, opt, tables);
      o = qgroot::cli::cmd_tables(cfg, table, n);
    } else if (*verify) {
      finish(cfg, opt, verify);
      o = qgroot::cli::cmd_verify(cfg);
    } else {
      finish(cfg, opt, pairing);
      o = qgroot::cli::cmd_pairing(cfg, left, right);
    }
    std::cout << o.out;
    return o.exit_code;
  } catch (const qgroot::cli::ExprError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
  } catch (const qgroot::MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
