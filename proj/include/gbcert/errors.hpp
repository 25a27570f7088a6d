#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gbcert {

enum class Errc {
  MismatchedArity,
  ZeroPolynomial,
  LengthMismatch,
  BudgetExceeded,
  MalformedJson,
  VariableOutOfRange,
  ZeroDenominator,
  UnknownTask,
  UnsupportedOrder,
  ExtensionMismatch,
  ExponentZero,
  ExponentOverflow,
  OracleSpawnFailure,
  OracleTimeout,
  MalformedOracleOutput,
  CertificateRejected,
  UnsupportedBackend,
  InvalidConfig,
};

std::string_view to_string(Errc code) noexcept;
std::optional<Errc> errc_from_string(std::string_view name) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// message is free-form context.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace gbcert
