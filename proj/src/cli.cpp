#include "reals/cli.hpp"

#include "reals/verify.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace reals {
namespace {

int do_eval(const std::string& expr, int digits, int lookahead, const std::string& format,
            const std::string& on_unresolved, std::ostream& out) {
  RenderConfig cfg;
  cfg.digits = digits;
  cfg.format = format == "floor" ? RenderConfig::Format::FloorDigits
                                 : RenderConfig::Format::SignMagnitude;
  cfg.on_unresolved = on_unresolved == "interval" ? LookaheadPolicy::OnUnresolved::ReturnInterval
                                                  : LookaheadPolicy::OnUnresolved::RaiseError;
  ResolutionBudget budget;
  budget.policy.max_extra_digits = lookahead;
  budget.policy.on_unresolved = cfg.on_unresolved;
  out << eval_to_text(expr, cfg, budget) << "\n";
  return 0;
}

int do_verify(const std::string& suite, const std::string& arg, int trials, int precision,
              std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (suite == "period") {
    ExprPtr e = parse(arg);
    if (e->kind != Expr::Kind::Literal) {
      err << "period expects a rational argument like 1/7\n";
      return 1;
    }
    out << detect_period(e->value).to_string() << "\n";
    return 0;
  }
  SuiteResult r;
  if (suite == "axioms")
    r = run_axioms(trials, precision, seed);
  else if (suite == "iso-dedekind")
    r = run_iso(IsoKind::Dedekind, trials, precision, seed);
  else if (suite == "iso-cauchy")
    r = run_iso(IsoKind::Cauchy, trials, precision, seed);
  else {
    err << "unknown suite '" << suite << "' (axioms | iso-dedekind | iso-cauchy | period)\n";
    return 1;
  }
  out << format_report(r);
  return r.passed() ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact real arithmetic over decimal streams"};
  app.require_subcommand(1);

  std::string expr, format = "sign", on_unresolved = "error";
  int digits = 10, lookahead = 40;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression and print digits");
  eval_cmd->add_option("expr", expr, "expression")->required();
  eval_cmd->add_option("--digits", digits, "fractional digits to print");
  eval_cmd->add_option("--lookahead", lookahead, "extra digits of operand refinement");
  eval_cmd->add_option("--format", format, "sign | floor")
      ->check(CLI::IsMember({"sign", "floor"}));
  eval_cmd->add_option("--on-unresolved", on_unresolved, "error | interval")
      ->check(CLI::IsMember({"error", "interval"}));

  std::string suite, suite_arg;
  int trials = 100, precision = 15;
  std::uint64_t seed = 1;
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", suite, "axioms | iso-dedekind | iso-cauchy | period")
      ->required();
  verify_cmd->add_option("arg", suite_arg, "suite argument (rational for period)");
  verify_cmd->add_option("--trials", trials, "number of random trials");
  verify_cmd->add_option("--precision", precision, "digit precision of the checks");
  verify_cmd->add_option("--seed", seed, "deterministic seed");

  std::string period_arg;
  auto* period_cmd = app.add_subcommand("period", "print the periodic expansion of p/q");
  period_cmd->add_option("rational", period_arg, "rational like 1/7")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (eval_cmd->parsed()) return do_eval(expr, digits, lookahead, format, on_unresolved, out);
    if (verify_cmd->parsed())
      return do_verify(suite, suite_arg, trials, precision, seed, out, err);
    return do_verify("period", period_arg, 0, 0, 0, out, err);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace reals
