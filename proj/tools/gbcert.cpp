// gbcert: certified Groebner-basis computations over Q with lex order.
//
// Task subcommands read a task JSON document (--task FILE or stdin) and print
// one result envelope. `check` only runs the trusted checker.
//
// Exit codes: 0 positive verdict certified, 1 negative verdict certified,
// 2 usage or parse error, 3 budget or timeout, 4 certificate rejected.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "check_command.hpp"
#include "gbcert/runner.hpp"

namespace {

using namespace gbcert;

struct TaskFlags {
  std::string task_path = "-";
  int backend = 0;
  double timeout = 60.0;
  unsigned max_exp = 64;
  std::size_t pair_budget = 0;
  std::string oracle_cmd;
  CLI::Option* backend_opt = nullptr;
  CLI::Option* timeout_opt = nullptr;
  CLI::Option* max_exp_opt = nullptr;
  CLI::Option* pair_budget_opt = nullptr;
  CLI::Option* oracle_opt = nullptr;
};

void add_task_flags(CLI::App* sub, TaskFlags& f) {
  sub->add_option("--task", f.task_path, "task JSON file (default: stdin)");
  f.backend_opt = sub->add_option("--backend", f.backend, "0 internal, 1 remote, 2 oracle")
                      ->check(CLI::IsMember({0, 1, 2}));
  f.timeout_opt = sub->add_option("--timeout", f.timeout, "oracle timeout in seconds")
                      ->check(CLI::PositiveNumber);
  f.max_exp_opt = sub->add_option("--max-exp", f.max_exp, "largest radical exponent tried")
                      ->check(CLI::PositiveNumber);
  f.pair_budget_opt = sub->add_option("--pair-budget", f.pair_budget,
                                      "maximum S-pairs reduced by Buchberger");
  f.oracle_opt = sub->add_option("--oracle-cmd", f.oracle_cmd, "oracle command line");
}

BackendConfig config_from(const TaskFlags& f) {
  BackendConfig cfg = apply_env_overrides({});
  if (f.backend_opt->count() > 0) cfg.backend = static_cast<Backend>(f.backend);
  if (f.timeout_opt->count() > 0) cfg.timeout_seconds = f.timeout;
  if (f.max_exp_opt->count() > 0) cfg.max_exp = f.max_exp;
  if (f.pair_budget_opt->count() > 0) cfg.pair_budget = f.pair_budget;
  if (f.oracle_opt->count() > 0) cfg.oracle_command = f.oracle_cmd;
  return cfg;
}

int exit_code_for(const ResultEnvelope& env) {
  switch (env.status) {
    case Status::Ok:
    case Status::InRadical:
      return cli::kPositive;
    case Status::NotMember:
    case Status::NotEqual:
    case Status::NotInRadical:
      return cli::kNegative;
    case Status::Error:
      break;
  }
  switch (env.error.value_or(Errc::MalformedJson)) {
    case Errc::BudgetExceeded:
    case Errc::OracleTimeout:
      return cli::kBudget;
    case Errc::CertificateRejected:
      return cli::kRejected;
    default:
      return cli::kUsage;
  }
}

int emit(const ResultEnvelope& env) {
  std::cout << dump_json(encode_result(env)) << '\n';
  return exit_code_for(env);
}

int run_task_command(const std::string& name, const std::set<TaskKind>& accepted,
                     const TaskFlags& flags) {
  GbTask task;
  BackendConfig cfg;
  try {
    task = decode_task(parse_json(cli::read_input(flags.task_path)));
    cfg = config_from(flags);
  } catch (const Error& e) {
    return emit(error_envelope(e.code(), e.what()));
  }
  if (!accepted.empty() && accepted.count(task.kind) == 0) {
    return emit(error_envelope(Errc::UnknownTask, "`" + name + "` does not accept " +
                                                      std::string(to_string(task.kind)) + " tasks"));
  }
  return emit(run_task(task, cfg));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified Groebner-basis toolkit (Q, lex order)"};
  app.require_subcommand(1);

  const std::map<std::string, std::pair<std::string, std::set<TaskKind>>> commands = {
      {"reduce", {"divide f by the given polynomials (also accepts normal_form tasks)",
                  {TaskKind::Reduce, TaskKind::NormalForm}}},
      {"gb", {"compute and certify a Groebner basis", {TaskKind::GroebnerBasis}}},
      {"member", {"decide and certify ideal membership", {TaskKind::IdealMembership}}},
      {"radical", {"decide and certify radical membership", {TaskKind::RadicalMembership}}},
      {"ideal-eq", {"decide and certify equality of two ideals", {TaskKind::IdealEquality}}},
      {"run", {"run a task of any kind", {}}},
  };

  std::map<std::string, TaskFlags> flags;
  for (const auto& [name, spec] : commands) {
    CLI::App* sub = app.add_subcommand(name, spec.first);
    add_task_flags(sub, flags[name]);
  }

  std::string cert_path = "-";
  CLI::App* check = app.add_subcommand("check", "run only the trusted checker on a certificate");
  check->add_option("--cert,cert", cert_path, "certificate or result envelope JSON (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : cli::kUsage;
  }

  if (check->parsed()) {
    try {
      return cli::run_check(cli::read_input(cert_path), std::cout);
    } catch (const Error& e) {
      return emit(error_envelope(e.code(), e.what()));
    }
  }
  for (const auto& [name, spec] : commands) {
    if (app.got_subcommand(name)) return run_task_command(name, spec.second, flags[name]);
  }
  return cli::kUsage;
}
