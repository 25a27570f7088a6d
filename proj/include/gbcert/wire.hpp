#pragma once

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "gbcert/certificates.hpp"
#include "gbcert/check_report.hpp"
#include "gbcert/errors.hpp"

namespace gbcert {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Raw JSON documents
//
// Integers that do not fit in 64 bits are kept exact: the reader stores them
// as tagged binary nodes and the writer emits them as bare JSON numbers.

/// Throws MalformedJson.
Json parse_json(std::string_view text);
/// Compact form: no whitespace, object keys in sorted order.
std::string dump_json(const Json& j);

// ---------------------------------------------------------------------------
// Polynomials: [{"c":[num,den],"e":[[var,exp],...]}, ...]

Json serialize_poly(const Poly& p);
/// Normalizes non-canonical input (order, duplicates, unreduced fractions,
/// zero coefficients, zero exponents). Throws MalformedJson,
/// VariableOutOfRange or ZeroDenominator.
Poly parse_poly(const Json& j, std::size_t nvars);

Json serialize_polys(const PolyList& ps);
PolyList parse_polys(const Json& j, std::size_t nvars);

// ---------------------------------------------------------------------------
// Task descriptors

enum class TaskKind {
  Reduce,
  GroebnerBasis,
  NormalForm,
  IdealMembership,
  RadicalMembership,
  IdealEquality,
};

std::string_view to_string(TaskKind kind);

/// Payload by kind:
///   reduce             f, polys (divisors)
///   groebner_basis     polys
///   normal_form        f, polys
///   ideal_membership   f, polys
///   radical_membership f, polys
///   ideal_equality     left, right
/// Unused fields stay empty. The monomial order is always lex.
struct GbTask {
  TaskKind kind = TaskKind::GroebnerBasis;
  std::size_t nvars = 0;
  Poly f;
  PolyList polys;
  PolyList left;
  PolyList right;
  friend bool operator==(const GbTask&, const GbTask&) = default;
};

Json encode_task(const GbTask& task);
/// Throws MalformedJson, UnknownTask, UnsupportedOrder and the parse_poly
/// errors.
GbTask decode_task(const Json& j);

// ---------------------------------------------------------------------------
// Certificates, reports and result envelopes

Json encode_certificate(const Certificate& cert);
Certificate decode_certificate(const Json& j);

Json encode_report(const CheckReport& report);

enum class Status { Ok, NotMember, NotEqual, NotInRadical, InRadical, Error };

std::string_view to_string(Status status);

/// True for statuses that must carry a certificate.
bool carries_certificate(Status status);

struct ResultEnvelope {
  Status status = Status::Error;
  std::optional<Certificate> certificate;
  std::optional<std::string> message;
  /// Set with Status::Error.
  std::optional<Errc> error;
  friend bool operator==(const ResultEnvelope&, const ResultEnvelope&) = default;
};

ResultEnvelope error_envelope(Errc code, std::string message);

Json encode_result(const ResultEnvelope& result);
ResultEnvelope decode_result(const Json& j);

}  // namespace gbcert
