#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "acceptance/acceptance.hpp"
#include "cli/report_json.hpp"
#include "cli/sweep.hpp"
#include "lerchsum/cli.hpp"
#include "lerchsum/complex_literal.hpp"
#include "lerchsum/error.hpp"
#include "lerchsum/lerch.hpp"

namespace lerchsum {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void diagnose(std::ostream& err, const std::string& command, const Error& e) {
  err << "lerchsum " << command << ": " << to_string(e.kind()) << " error: " << e.what() << "\n";
}

Complex complex_flag(const std::string& flag, const std::string& text) {
  const auto z = parse_complex_literal(text);
  if (!z) throw Error(ErrorKind::validation, "--" + flag + ": '" + text + "' is not a complex literal");
  return *z;
}

struct EvalArgs {
  std::string z, s, v;
  double tol = 1e-10;
};

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  try {
    const LerchParams p{complex_flag("z", a.z), complex_flag("s", a.s), complex_flag("v", a.v)};
    const EvalResult result = lerch_phi(p, a.tol);
    out << cli::to_line(cli::eval_record(p, a.tol, result)) << "\n";
    return kExitPass;
  } catch (const Error& e) {
    diagnose(err, "eval", e);
    return kExitUsage;
  }
}

struct VerifyArgs {
  std::string identity;
  // flag name -> value, only for flags actually given
  std::map<std::string, std::string> flags;
  std::optional<double> tol;
  std::string mode = "strict";
};

// Flags whose parameter name differs from the flag.
std::string parameter_for_flag(IdentityId id, const std::string& flag) {
  if (id == IdentityId::recurrence) {
    if (flag == "zz") return "z";
    if (flag == "aa") return "a";
    if (flag == "a" || flag == "z") return "";
  } else if (flag == "zz" || flag == "aa") {
    return "";
  }
  return flag;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  IdentityReport report;
  try {
    const IdentityId id = identity_from_string(a.identity);
    const double tol = a.tol.value_or(cli::default_tolerance(id));
    if (!(tol > 0.0)) throw Error(ErrorKind::validation, "--tol must be positive");
    ValidationMode mode = ValidationMode::strict;
    if (a.mode == "permissive") mode = ValidationMode::permissive;
    else if (a.mode != "strict") throw Error(ErrorKind::validation, "--mode must be strict or permissive");

    const auto& names = cli::parameter_names(id);
    cli::ParamPoint point;
    for (const auto& [flag, value] : a.flags) {
      const std::string name = parameter_for_flag(id, flag);
      if (name.empty() || std::find(names.begin(), names.end(), name) == names.end())
        throw Error(ErrorKind::validation, "--" + flag + " does not apply to " + a.identity);
      point.emplace_back(name, value);
    }
    for (const auto& name : names) {
      const bool given = std::any_of(point.begin(), point.end(), [&](const auto& kv) { return kv.first == name; });
      if (!given) {
        const std::string flag = id == IdentityId::recurrence && (name == "z" || name == "a") ? name + name : name;
        throw Error(ErrorKind::validation, a.identity + " requires --" + flag);
      }
    }
    report = cli::run_point(id, point, tol, mode);
  } catch (const Error& e) {
    diagnose(err, "verify", e);
    return kExitUsage;
  }
  out << cli::to_line(cli::to_json(report)) << "\n";
  switch (report.status) {
    case ReportStatus::invalid:
      err << "lerchsum verify: validation failed: " << report.notes << "\n";
      return kExitUsage;
    case ReportStatus::error:
      err << "lerchsum verify: " << report.notes << "\n";
      return kExitUsage;
    case ReportStatus::evaluated:
    case ReportStatus::known_suspect: return report.pass ? kExitPass : kExitFail;
  }
  return kExitFail;
}

int cmd_sweep(const std::string& config_path, const std::string& output_override, std::ostream& out,
              std::ostream& err) {
  cli::SweepConfig config;
  try {
    config = cli::load_sweep_config(config_path);
  } catch (const Error& e) {
    diagnose(err, "sweep", e);
    return kExitUsage;
  }
  if (!output_override.empty()) config.output_path = output_override;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.output_path.empty() && config.output_path != "-") {
    file.open(config.output_path);
    if (!file) {
      err << "lerchsum sweep: cannot write '" << config.output_path << "'\n";
      return kExitUsage;
    }
    sink = &file;
  }

  std::vector<IdentityReport> reports;
  try {
    reports = cli::run_sweep(config);
  } catch (const Error& e) {
    diagnose(err, "sweep", e);
    return kExitUsage;
  }
  for (const auto& r : reports) *sink << cli::to_line(cli::to_json(r)) << "\n";
  const auto summary = cli::summarize(reports);
  *sink << cli::to_line(cli::to_json(summary)) << "\n";
  sink->flush();
  if (!*sink) {
    err << "lerchsum sweep: write failed\n";
    return kExitUsage;
  }
  return summary.failed == 0 && summary.errored == 0 ? kExitPass : kExitFail;
}

int cmd_selftest(std::ostream& out) {
  const auto results = acceptance::run_acceptance();
  int passed = 0;
  for (const auto& r : results) {
    out << acceptance::format_line(r) << "\n";
    passed += r.pass ? 1 : 0;
  }
  out << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<int>(results.size()) ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hurwitz-Lerch zeta evaluation and identity verification", "lerchsum"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate Phi(z, s, v)");
  eval->add_option("--z", eval_args.z, "complex literal, e.g. 0.4+0.8i")->required();
  eval->add_option("--s", eval_args.s, "complex literal")->required();
  eval->add_option("--v", eval_args.v, "complex literal")->required();
  eval->add_option("--tol", eval_args.tol, "absolute tolerance")->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check one identity and print its report");
  verify->add_option("--identity", verify_args.identity,
                     "theorem, tan_sum, product_ex2, product_ex3, product_ex4, catalan or recurrence")
      ->required();
  const std::vector<std::pair<std::string, std::string>> verify_flags = {
      {"n", "prime index"},          {"q", "step, q mod n != 0"},     {"k", "Lerch order (theorem)"},
      {"a", "log argument (theorem)"}, {"m", "shift (theorem, tan_sum, product_ex4)"},
      {"x", "argument (product_ex2, product_ex3)"}, {"r", "secant shift (product_ex4)"},
      {"zz", "z (recurrence)"},      {"s", "s (recurrence)"},         {"aa", "a (recurrence)"}};
  std::map<std::string, std::string> raw_flags;
  for (const auto& [name, help] : verify_flags) verify->add_option("--" + name, raw_flags[name], help);
  double verify_tol = 0.0;
  auto* tol_option = verify->add_option("--tol", verify_tol, "tolerance (default 1e-10 elementary, 1e-8 Phi-based)");
  verify->add_option("--mode", verify_args.mode, "strict or permissive (theorem)")->capture_default_str();

  std::string config_path;
  std::string output_override;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter grid from a config file, JSON lines out");
  sweep->add_option("config", config_path, "sweep configuration file")->required();
  sweep->add_option("--output", output_override, "overrides the config's output path ('-' for stdout)");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitUsage;
  }

  if (eval->parsed()) return cmd_eval(eval_args, out, err);
  if (verify->parsed()) {
    for (const auto& [name, help] : verify_flags) {
      if (verify->count("--" + name) > 0) verify_args.flags[name] = raw_flags[name];
    }
    if (tol_option->count() > 0) verify_args.tol = verify_tol;
    return cmd_verify(verify_args, out, err);
  }
  if (sweep->parsed()) return cmd_sweep(config_path, output_override, out, err);
  if (selftest->parsed()) return cmd_selftest(out);
  return kExitUsage;
}

}  // namespace lerchsum
