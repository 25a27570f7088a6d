#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "gbcert/prover.hpp"
#include "gbcert/wire.hpp"

namespace gbcert {

/// Numbering follows the backend option values: 0 computes in-process,
/// 1 is the remote API (not provided), 2 spawns an external oracle.
enum class Backend { Internal = 0, Remote = 1, Oracle = 2 };

struct BackendConfig {
  Backend backend = Backend::Internal;
  /// Shell command for the oracle; receives the task JSON on stdin and
  /// prints a result envelope on stdout.
  std::string oracle_command;
  double timeout_seconds = 60.0;
  unsigned max_exp = 64;
  std::optional<std::size_t> pair_budget;

  /// Throws InvalidConfig.
  void validate() const;
  ProverOptions prover_options() const;
};

/// Applies GB_BACKEND (0/1/2) and GB_ORACLE_CMD when set.
BackendConfig apply_env_overrides(BackendConfig cfg);

/// Executes a task and returns a certified envelope. Failures are reported
/// as Status::Error envelopes, never thrown.
ResultEnvelope run_task(const GbTask& task, const BackendConfig& cfg);

/// The in-process engine. Its certificates are re-checked before return.
ResultEnvelope run_internal(const GbTask& task, const BackendConfig& cfg);

/// Validates an untrusted envelope against the task: positive answers must
/// carry a certificate for exactly this task that passes the trusted
/// checker; negative answers are recomputed by the internal engine.
ResultEnvelope certify_result(const GbTask& task, const ResultEnvelope& raw,
                              const BackendConfig& cfg);

/// Empty if the envelope's certificate answers `task` and checks; otherwise
/// the reason it does not.
std::optional<std::string> certificate_problem(const GbTask& task, const ResultEnvelope& env);

}  // namespace gbcert
