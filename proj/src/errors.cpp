#include "gbcert/errors.hpp"

#include <array>
#include <utility>

namespace gbcert {

namespace {

constexpr std::array<std::pair<Errc, std::string_view>, 18> kNames{{
    {Errc::MismatchedArity, "MismatchedArity"},
    {Errc::ZeroPolynomial, "ZeroPolynomial"},
    {Errc::LengthMismatch, "LengthMismatch"},
    {Errc::BudgetExceeded, "BudgetExceeded"},
    {Errc::MalformedJson, "MalformedJson"},
    {Errc::VariableOutOfRange, "VariableOutOfRange"},
    {Errc::ZeroDenominator, "ZeroDenominator"},
    {Errc::UnknownTask, "UnknownTask"},
    {Errc::UnsupportedOrder, "UnsupportedOrder"},
    {Errc::ExtensionMismatch, "ExtensionMismatch"},
    {Errc::ExponentZero, "ExponentZero"},
    {Errc::ExponentOverflow, "ExponentOverflow"},
    {Errc::OracleSpawnFailure, "OracleSpawnFailure"},
    {Errc::OracleTimeout, "OracleTimeout"},
    {Errc::MalformedOracleOutput, "MalformedOracleOutput"},
    {Errc::CertificateRejected, "CertificateRejected"},
    {Errc::UnsupportedBackend, "UnsupportedBackend"},
    {Errc::InvalidConfig, "InvalidConfig"},
}};

}  // namespace

std::string_view to_string(Errc code) noexcept {
  for (const auto& [c, name] : kNames) {
    if (c == code) return name;
  }
  return "Unknown";
}

std::optional<Errc> errc_from_string(std::string_view name) noexcept {
  for (const auto& [c, n] : kNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

}  // namespace gbcert
