#include "gbcert/wire.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <utility>

namespace gbcert {

namespace {

// Binary subtype marking an exact integer too wide for int64/uint64.
constexpr std::uint64_t kBigIntSubtype = 0x6269;

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Json bigint_node(const std::string& digits) {
  return Json::binary(std::vector<std::uint8_t>(digits.begin(), digits.end()), kBigIntSubtype);
}

bool is_bigint_node(const Json& j) {
  return j.is_binary() && j.get_binary().has_subtype() && j.get_binary().subtype() == kBigIntSubtype;
}

// DOM builder that keeps oversized integer literals exact instead of
// degrading them to doubles.
class ExactDomParser : public nlohmann::detail::json_sax_dom_parser<Json> {
 public:
  using json_sax_dom_parser::json_sax_dom_parser;

  bool number_float(double value, const std::string& literal) {
    if (is_integer_literal(literal)) {
      auto node = Json::binary_t(std::vector<std::uint8_t>(literal.begin(), literal.end()), kBigIntSubtype);
      return binary(node);
    }
    return json_sax_dom_parser::number_float(value, literal);
  }
};

void write(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        write(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        write(value, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::binary:
      if (is_bigint_node(j)) {
        const auto& bytes = j.get_binary();
        out.append(bytes.begin(), bytes.end());
        break;
      }
      [[fallthrough]];
    default:
      out += j.dump();
  }
}

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedJson, what); }

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) malformed(std::string("expected an object holding \"") + key + "\"");
  auto it = obj.find(key);
  if (it == obj.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t as_unsigned(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  malformed(std::string(what) + " must be a non-negative integer");
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Json encode_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return bigint_node(z.get_str());
}

mpz_class decode_integer(const Json& j) {
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (is_bigint_node(j)) {
    const auto& b = j.get_binary();
    return mpz_class(std::string(b.begin(), b.end()));
  }
  if (j.is_string() && is_integer_literal(j.get<std::string>())) return mpz_class(j.get<std::string>());
  malformed("coefficient entries must be integers");
}

std::size_t decode_nvars(const Json& j) {
  auto n = as_unsigned(field(j, "nvars"), "nvars");
  if (n > std::numeric_limits<VarIndex>::max()) malformed("nvars too large");
  return static_cast<std::size_t>(n);
}

Json encode_matrix(const PolyMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(serialize_polys(row));
  return out;
}

PolyMatrix decode_matrix(const Json& j, std::size_t nvars) {
  if (!j.is_array()) malformed("expected an array of polynomial lists");
  PolyMatrix out;
  for (const auto& row : j) out.push_back(parse_polys(row, nvars));
  return out;
}

template <typename T>
T decode_as(const Json& j, std::string_view type) {
  Certificate c = decode_certificate(j);
  if (auto* v = std::get_if<T>(&c)) return std::move(*v);
  malformed("expected a nested \"" + std::string(type) + "\" certificate");
}

Json encode_cert(const RemainderCert& c) {
  return {{"type", "remainder"},
          {"nvars", c.nvars},
          {"f", serialize_poly(c.f)},
          {"divisors", serialize_polys(c.divisors)},
          {"quotients", serialize_polys(c.quotients)},
          {"remainder", serialize_poly(c.remainder)}};
}

Json encode_cert(const MembershipCert& c) {
  return {{"type", "membership"},
          {"nvars", c.nvars},
          {"target", serialize_poly(c.target)},
          {"generators", serialize_polys(c.generators)},
          {"cofactors", serialize_polys(c.cofactors)}};
}

Json encode_cert(const IdealEqCert& c) {
  return {{"type", "ideal_eq"},
          {"nvars", c.nvars},
          {"left", serialize_polys(c.left)},
          {"right", serialize_polys(c.right)},
          {"left_in_right", encode_matrix(c.left_in_right)},
          {"right_in_left", encode_matrix(c.right_in_left)}};
}

Json encode_cert(const GroebnerCert& c) {
  return {{"type", "groebner"},
          {"nvars", c.nvars},
          {"basis", serialize_polys(c.basis)},
          {"target", serialize_polys(c.target)},
          {"s_pair_witnesses", encode_matrix(c.s_pair_witnesses)},
          {"ideal_eq", encode_cert(c.ideal_eq)}};
}

template <typename Cert>
Json encode_reduction(const Cert& c, const char* type) {
  return {{"type", type},
          {"nvars", c.nvars},
          {"target", serialize_poly(c.target)},
          {"generators", serialize_polys(c.generators)},
          {"groebner", encode_cert(c.groebner)},
          {"quotients", serialize_polys(c.quotients)},
          {"remainder", serialize_poly(c.remainder)}};
}

Json encode_cert(const NonMembershipCert& c) { return encode_reduction(c, "non_membership"); }
Json encode_cert(const NormalFormCert& c) { return encode_reduction(c, "normal_form"); }

Json encode_cert(const RadicalMemberCert& c) {
  return {{"type", "radical_member"},
          {"nvars", c.nvars},
          {"target", serialize_poly(c.target)},
          {"generators", serialize_polys(c.generators)},
          {"exponent", c.exponent},
          {"membership", encode_cert(c.membership)}};
}

Json encode_cert(const RadicalNonMemberCert& c) {
  return {{"type", "radical_non_member"},
          {"nvars", c.nvars},
          {"target", serialize_poly(c.target)},
          {"generators", serialize_polys(c.generators)},
          {"extended", encode_cert(c.extended)}};
}

template <typename Cert>
Cert decode_reduction(const Json& j, std::size_t n) {
  Cert c;
  c.nvars = n;
  c.target = parse_poly(field(j, "target"), n);
  c.generators = parse_polys(field(j, "generators"), n);
  c.groebner = decode_as<GroebnerCert>(field(j, "groebner"), "groebner");
  c.quotients = parse_polys(field(j, "quotients"), n);
  c.remainder = parse_poly(field(j, "remainder"), n);
  return c;
}

constexpr std::array<std::pair<TaskKind, std::string_view>, 6> kTaskNames{{
    {TaskKind::Reduce, "reduce"},
    {TaskKind::GroebnerBasis, "groebner_basis"},
    {TaskKind::NormalForm, "normal_form"},
    {TaskKind::IdealMembership, "ideal_membership"},
    {TaskKind::RadicalMembership, "radical_membership"},
    {TaskKind::IdealEquality, "ideal_equality"},
}};

constexpr std::array<std::pair<Status, std::string_view>, 6> kStatusNames{{
    {Status::Ok, "ok"},
    {Status::NotMember, "not_member"},
    {Status::NotEqual, "not_equal"},
    {Status::NotInRadical, "not_in_radical"},
    {Status::InRadical, "in_radical"},
    {Status::Error, "error"},
}};

}  // namespace

Json parse_json(std::string_view text) {
  Json result;
  ExactDomParser sax(result, true);
  try {
    if (!Json::sax_parse(text, &sax)) malformed("unparseable JSON");
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
  return result;
}

std::string dump_json(const Json& j) {
  std::string out;
  write(j, out);
  return out;
}

Json serialize_poly(const Poly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) {
    Json exps = Json::array();
    for (const auto& f : t.mono.factors()) exps.push_back(Json::array({f.var, f.exp}));
    out.push_back({{"c", Json::array({encode_integer(t.coeff.num()), encode_integer(t.coeff.den())})},
                   {"e", std::move(exps)}});
  }
  return out;
}

Poly parse_poly(const Json& j, std::size_t nvars) {
  if (!j.is_array()) malformed("a polynomial must be an array of terms");
  std::vector<Term> terms;
  terms.reserve(j.size());
  for (const auto& entry : j) {
    const Json& c = field(entry, "c");
    const Json& e = field(entry, "e");
    if (!c.is_array() || c.size() != 2) malformed("\"c\" must be [numerator, denominator]");
    if (!e.is_array()) malformed("\"e\" must be a list of [variable, exponent] pairs");
    std::vector<Monomial::Factor> factors;
    for (const auto& pair : e) {
      if (!pair.is_array() || pair.size() != 2) malformed("exponent entries must be pairs");
      auto var = as_unsigned(pair[0], "variable index");
      auto exp = as_unsigned(pair[1], "exponent");
      if (var >= nvars) {
        throw Error(Errc::VariableOutOfRange,
                    "variable " + std::to_string(var) + " with nvars = " + std::to_string(nvars));
      }
      if (exp > std::numeric_limits<Exponent>::max()) malformed("exponent too large");
      factors.push_back({static_cast<VarIndex>(var), static_cast<Exponent>(exp)});
    }
    terms.push_back({Rational(decode_integer(c[0]), decode_integer(c[1])),
                     Monomial::from_factors(std::move(factors))});
  }
  return Poly::from_terms(nvars, std::move(terms));
}

Json serialize_polys(const PolyList& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(serialize_poly(p));
  return out;
}

PolyList parse_polys(const Json& j, std::size_t nvars) {
  if (!j.is_array()) malformed("expected an array of polynomials");
  PolyList out;
  out.reserve(j.size());
  for (const auto& p : j) out.push_back(parse_poly(p, nvars));
  return out;
}

std::string_view to_string(TaskKind kind) {
  for (const auto& [k, name] : kTaskNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

Json encode_task(const GbTask& task) {
  Json j = {{"task", to_string(task.kind)}, {"order", "lex"}, {"nvars", task.nvars}};
  switch (task.kind) {
    case TaskKind::GroebnerBasis:
      j["polys"] = serialize_polys(task.polys);
      break;
    case TaskKind::IdealEquality:
      j["left"] = serialize_polys(task.left);
      j["right"] = serialize_polys(task.right);
      break;
    default:
      j["f"] = serialize_poly(task.f);
      j["polys"] = serialize_polys(task.polys);
  }
  return j;
}

GbTask decode_task(const Json& j) {
  std::string name = as_string(field(j, "task"), "task");
  auto it = std::find_if(kTaskNames.begin(), kTaskNames.end(),
                         [&](const auto& entry) { return entry.second == name; });
  if (it == kTaskNames.end()) throw Error(Errc::UnknownTask, "\"" + name + "\"");
  std::string order = as_string(field(j, "order"), "order");
  if (order != "lex") throw Error(Errc::UnsupportedOrder, "\"" + order + "\"");

  GbTask task;
  task.kind = it->first;
  task.nvars = decode_nvars(j);
  task.f = Poly(task.nvars);
  switch (task.kind) {
    case TaskKind::GroebnerBasis:
      task.polys = parse_polys(field(j, "polys"), task.nvars);
      break;
    case TaskKind::IdealEquality:
      task.left = parse_polys(field(j, "left"), task.nvars);
      task.right = parse_polys(field(j, "right"), task.nvars);
      break;
    default:
      task.f = parse_poly(field(j, "f"), task.nvars);
      task.polys = parse_polys(field(j, "polys"), task.nvars);
  }
  return task;
}

Json encode_certificate(const Certificate& cert) {
  return std::visit([](const auto& c) { return encode_cert(c); }, cert);
}

Certificate decode_certificate(const Json& j) {
  std::string type = as_string(field(j, "type"), "type");
  std::size_t n = decode_nvars(j);

  if (type == "remainder") {
    return RemainderCert{n, parse_poly(field(j, "f"), n), parse_polys(field(j, "divisors"), n),
                         parse_polys(field(j, "quotients"), n), parse_poly(field(j, "remainder"), n)};
  }
  if (type == "membership") {
    return MembershipCert{n, parse_poly(field(j, "target"), n),
                          parse_polys(field(j, "generators"), n),
                          parse_polys(field(j, "cofactors"), n)};
  }
  if (type == "ideal_eq") {
    return IdealEqCert{n, parse_polys(field(j, "left"), n), parse_polys(field(j, "right"), n),
                       decode_matrix(field(j, "left_in_right"), n),
                       decode_matrix(field(j, "right_in_left"), n)};
  }
  if (type == "groebner") {
    return GroebnerCert{n, parse_polys(field(j, "basis"), n), parse_polys(field(j, "target"), n),
                        decode_matrix(field(j, "s_pair_witnesses"), n),
                        decode_as<IdealEqCert>(field(j, "ideal_eq"), "ideal_eq")};
  }
  if (type == "non_membership") return decode_reduction<NonMembershipCert>(j, n);
  if (type == "normal_form") return decode_reduction<NormalFormCert>(j, n);
  if (type == "radical_member") {
    auto e = as_unsigned(field(j, "exponent"), "exponent");
    if (e > std::numeric_limits<unsigned>::max()) malformed("exponent too large");
    return RadicalMemberCert{n, parse_poly(field(j, "target"), n),
                             parse_polys(field(j, "generators"), n), static_cast<unsigned>(e),
                             decode_as<MembershipCert>(field(j, "membership"), "membership")};
  }
  if (type == "radical_non_member") {
    return RadicalNonMemberCert{n, parse_poly(field(j, "target"), n),
                                parse_polys(field(j, "generators"), n),
                                decode_as<NonMembershipCert>(field(j, "extended"), "non_membership")};
  }
  malformed("unknown certificate type \"" + type + "\"");
}

Json encode_report(const CheckReport& report) {
  Json conditions = Json::array();
  for (const auto& c : report.conditions) {
    Json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    conditions.push_back(std::move(entry));
  }
  Json j = {{"kind", report.kind}, {"accepted", report.accepted}, {"conditions", std::move(conditions)}};
  if (report.error) j["error"] = to_string(*report.error);
  return j;
}

std::string_view to_string(Status status) {
  for (const auto& [s, name] : kStatusNames) {
    if (s == status) return name;
  }
  return "error";
}

bool carries_certificate(Status status) {
  return status == Status::Ok || status == Status::NotMember || status == Status::NotEqual ||
         status == Status::NotInRadical;
}

ResultEnvelope error_envelope(Errc code, std::string message) {
  return {Status::Error, std::nullopt, std::move(message), code};
}

Json encode_result(const ResultEnvelope& result) {
  Json j = {{"status", to_string(result.status)}};
  if (result.certificate) j["certificate"] = encode_certificate(*result.certificate);
  if (result.message) j["message"] = *result.message;
  if (result.error) j["error"] = to_string(*result.error);
  return j;
}

ResultEnvelope decode_result(const Json& j) {
  std::string name = as_string(field(j, "status"), "status");
  auto it = std::find_if(kStatusNames.begin(), kStatusNames.end(),
                         [&](const auto& entry) { return entry.second == name; });
  if (it == kStatusNames.end()) malformed("unknown status \"" + name + "\"");

  ResultEnvelope result;
  result.status = it->first;
  if (auto c = j.find("certificate"); c != j.end() && !c->is_null()) {
    result.certificate = decode_certificate(*c);
  }
  if (auto m = j.find("message"); m != j.end() && !m->is_null()) {
    result.message = as_string(*m, "message");
  }
  if (auto e = j.find("error"); e != j.end() && !e->is_null()) {
    auto code = errc_from_string(as_string(*e, "error"));
    if (!code) malformed("unknown error code");
    result.error = code;
  }
  if (carries_certificate(result.status) != result.certificate.has_value()) {
    malformed("status \"" + name + "\" " +
              (result.certificate ? "must not carry a certificate" : "requires a certificate"));
  }
  return result;
}

}  // namespace gbcert
