#include "gbcert/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>

#include "gbcert/checker.hpp"
#include "gbcert/subprocess.hpp"

namespace gbcert {

namespace {

bool contains(const PolyList& list, const Poly& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

// Whether `cert` is an answer to `task` with the given status, before any
// checking of its contents.
bool answers(const GbTask& task, Status status, const Certificate& cert) {
  auto is = [&](auto* ptr) { return ptr != nullptr && ptr->nvars == task.nvars; };
  switch (task.kind) {
    case TaskKind::Reduce: {
      auto* c = std::get_if<RemainderCert>(&cert);
      return status == Status::Ok && is(c) && c->f == task.f && c->divisors == task.polys;
    }
    case TaskKind::GroebnerBasis: {
      auto* c = std::get_if<GroebnerCert>(&cert);
      return status == Status::Ok && is(c) && c->target == task.polys;
    }
    case TaskKind::NormalForm: {
      auto* c = std::get_if<NormalFormCert>(&cert);
      return status == Status::Ok && is(c) && c->target == task.f && c->generators == task.polys;
    }
    case TaskKind::IdealMembership: {
      if (status == Status::Ok) {
        auto* c = std::get_if<MembershipCert>(&cert);
        return is(c) && c->target == task.f && c->generators == task.polys;
      }
      auto* c = std::get_if<NonMembershipCert>(&cert);
      return status == Status::NotMember && is(c) && c->target == task.f &&
             c->generators == task.polys;
    }
    case TaskKind::RadicalMembership: {
      if (status == Status::Ok) {
        auto* c = std::get_if<RadicalMemberCert>(&cert);
        return is(c) && c->target == task.f && c->generators == task.polys;
      }
      auto* c = std::get_if<RadicalNonMemberCert>(&cert);
      return status == Status::NotInRadical && is(c) && c->target == task.f &&
             c->generators == task.polys;
    }
    case TaskKind::IdealEquality: {
      if (status == Status::Ok) {
        auto* c = std::get_if<IdealEqCert>(&cert);
        return is(c) && c->left == task.left && c->right == task.right;
      }
      auto* c = std::get_if<NonMembershipCert>(&cert);
      return status == Status::NotEqual && is(c) &&
             ((contains(task.left, c->target) && c->generators == task.right) ||
              (contains(task.right, c->target) && c->generators == task.left));
    }
  }
  return false;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

ResultEnvelope compute(const GbTask& task, const ProverOptions& opts) {
  switch (task.kind) {
    case TaskKind::Reduce:
      return {Status::Ok, gen_remainder(task.f, task.polys), std::nullopt, std::nullopt};
    case TaskKind::GroebnerBasis:
      return {Status::Ok, gen_groebner_cert(task.nvars, task.polys, opts), std::nullopt, std::nullopt};
    case TaskKind::NormalForm:
      return {Status::Ok, gen_normal_form(task.f, task.polys, opts), std::nullopt, std::nullopt};
    case TaskKind::IdealMembership: {
      auto r = gen_membership(task.f, task.polys, opts);
      if (auto* m = std::get_if<MembershipCert>(&r)) return {Status::Ok, std::move(*m), {}, {}};
      return {Status::NotMember, std::move(std::get<NotAMember>(r).witness), {}, {}};
    }
    case TaskKind::RadicalMembership: {
      auto r = gen_radical_member(task.f, task.polys, opts);
      if (auto* m = std::get_if<RadicalMemberCert>(&r)) return {Status::Ok, std::move(*m), {}, {}};
      return {Status::NotInRadical, std::move(std::get<NotInRadical>(r).witness), {}, {}};
    }
    case TaskKind::IdealEquality: {
      auto r = gen_ideal_eq(task.nvars, task.left, task.right, opts);
      if (auto* c = std::get_if<IdealEqCert>(&r)) return {Status::Ok, std::move(*c), {}, {}};
      auto& ne = std::get<NotEqual>(r);
      std::string where = (ne.side == Side::Left ? "left[" : "right[") + std::to_string(ne.index) +
                          "] is not in the other ideal";
      return {Status::NotEqual, std::move(ne.witness), std::move(where), {}};
    }
  }
  return error_envelope(Errc::UnknownTask, "unhandled task kind");
}

ResultEnvelope reject(const std::string& why) { return error_envelope(Errc::CertificateRejected, why); }

ResultEnvelope run_oracle(const GbTask& task, const BackendConfig& cfg) {
  auto timeout = std::chrono::milliseconds(static_cast<long long>(std::ceil(cfg.timeout_seconds * 1000.0)));
  ProcessResult pr = run_process(cfg.oracle_command, dump_json(encode_task(task)), timeout);
  if (pr.timed_out) {
    return error_envelope(Errc::OracleTimeout,
                          "oracle exceeded " + std::to_string(cfg.timeout_seconds) + "s and was killed");
  }
  if (pr.exit_code == 126 || pr.exit_code == 127) {
    return error_envelope(Errc::OracleSpawnFailure, "could not run oracle: " + pr.err);
  }

  ResultEnvelope raw;
  try {
    raw = decode_result(parse_json(pr.out));
  } catch (const Error& e) {
    if (pr.exit_code != 0) {
      return error_envelope(Errc::MalformedOracleOutput,
                            "oracle exited with " + std::to_string(pr.exit_code) + ": " + pr.err);
    }
    return error_envelope(Errc::MalformedOracleOutput, e.what());
  }
  if (pr.exit_code != 0 || raw.status == Status::Error) {
    ResultEnvelope err = error_envelope(raw.error.value_or(Errc::MalformedOracleOutput),
                                        raw.message.value_or("oracle reported an error"));
    return err;
  }
  return certify_result(task, raw, cfg);
}

}  // namespace

void BackendConfig::validate() const {
  if (!(timeout_seconds > 0)) throw Error(Errc::InvalidConfig, "timeout must be positive");
  if (max_exp == 0) throw Error(Errc::InvalidConfig, "max_exp must be at least 1");
  if (backend == Backend::Oracle && oracle_command.empty()) {
    throw Error(Errc::InvalidConfig, "the oracle backend needs an oracle command");
  }
}

ProverOptions BackendConfig::prover_options() const {
  ProverOptions opts;
  opts.max_exp = max_exp;
  opts.buchberger.pair_budget = pair_budget;
  return opts;
}

BackendConfig apply_env_overrides(BackendConfig cfg) {
  if (const char* b = std::getenv("GB_BACKEND"); b != nullptr && *b != '\0') {
    std::string v(b);
    if (v == "0") {
      cfg.backend = Backend::Internal;
    } else if (v == "1") {
      cfg.backend = Backend::Remote;
    } else if (v == "2") {
      cfg.backend = Backend::Oracle;
    } else {
      throw Error(Errc::InvalidConfig, "GB_BACKEND must be 0, 1 or 2");
    }
  }
  if (const char* c = std::getenv("GB_ORACLE_CMD"); c != nullptr && *c != '\0') cfg.oracle_command = c;
  return cfg;
}

std::optional<std::string> certificate_problem(const GbTask& task, const ResultEnvelope& env) {
  if (!env.certificate) return "no certificate";
  if (!answers(task, env.status, *env.certificate)) {
    return std::string("a \"") + std::string(certificate_kind(*env.certificate)) +
           "\" certificate does not answer this " + std::string(to_string(task.kind)) +
           " task with status " + std::string(to_string(env.status));
  }
  CheckReport report = check_certificate(*env.certificate);
  if (!report.accepted) return "checker rejected: " + join(report.failed());
  return std::nullopt;
}

ResultEnvelope run_internal(const GbTask& task, const BackendConfig& cfg) {
  ResultEnvelope env;
  try {
    env = compute(task, cfg.prover_options());
  } catch (const Error& e) {
    return error_envelope(e.code(), e.what());
  }
  if (auto problem = certificate_problem(task, env)) return reject("internal engine: " + *problem);
  return env;
}

ResultEnvelope certify_result(const GbTask& task, const ResultEnvelope& raw,
                              const BackendConfig& cfg) {
  switch (raw.status) {
    case Status::Error:
      return raw;
    case Status::Ok:
      if (auto problem = certificate_problem(task, raw)) return reject(*problem);
      return raw;
    default:
      // A negative claim is only ever reported with a witness we derived.
      return run_internal(task, cfg);
  }
}

ResultEnvelope run_task(const GbTask& task, const BackendConfig& cfg) {
  try {
    cfg.validate();
    switch (cfg.backend) {
      case Backend::Internal:
        return run_internal(task, cfg);
      case Backend::Remote:
        return error_envelope(Errc::UnsupportedBackend, "the remote backend is not available");
      case Backend::Oracle:
        return run_oracle(task, cfg);
    }
  } catch (const Error& e) {
    return error_envelope(e.code(), e.what());
  }
  return error_envelope(Errc::UnsupportedBackend, "unknown backend");
}

}  // namespace gbcert
