#include "gbcert/checker.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "gbcert/division.hpp"
#include "gbcert/spoly.hpp"

namespace gbcert {

namespace {

std::string show(const Poly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

bool arity_ok(std::size_t n, const Poly& p) { return p.nvars() == n; }

bool arity_ok(std::size_t n, const PolyList& ps) {
  return std::all_of(ps.begin(), ps.end(), [n](const Poly& p) { return p.nvars() == n; });
}

bool arity_ok(std::size_t n, const PolyMatrix& m) {
  return std::all_of(m.begin(), m.end(), [n](const PolyList& row) { return arity_ok(n, row); });
}

template <typename... Parts>
bool arity_ok(std::size_t n, const Parts&... parts) {
  return (arity_ok(n, parts) && ...);
}

bool rows_ok(const PolyMatrix& m, std::size_t rows, std::size_t cols) {
  return m.size() == rows &&
         std::all_of(m.begin(), m.end(), [cols](const PolyList& r) { return r.size() == cols; });
}

std::uint64_t total_degree(const Poly& p) {
  std::uint64_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.mono.total_degree());
  return d;
}

// Runs a checker body, turning any library error into a structural failure.
template <typename Body>
CheckReport guarded(const char* kind, Body body) {
  CheckReport report;
  report.kind = kind;
  try {
    body(report);
  } catch (const Error& e) {
    report.fail(e.code(), e.what());
  }
  return report;
}

}  // namespace

PolyList rabinowitsch_extension(const Poly& target, const PolyList& generators) {
  const std::size_t n = target.nvars();
  PolyList out;
  out.reserve(generators.size() + 1);
  for (const auto& g : generators) out.push_back(g.lift_to_extended());
  Poly t = Poly::variable(n + 1, static_cast<VarIndex>(n));
  out.push_back(Poly::one(n + 1) - t * target.lift_to_extended());
  return out;
}

CheckReport check_remainder_cert(const RemainderCert& cert) {
  return guarded("remainder", [&](CheckReport& report) {
    if (!arity_ok(cert.nvars, cert.f, cert.divisors, cert.quotients, cert.remainder)) {
      report.fail(Errc::MismatchedArity, "certificate mixes rings");
      return;
    }
    report.absorb("", check_remainder(cert.f, cert.divisors, cert.remainder, cert.quotients));
  });
}

CheckReport check_membership(const MembershipCert& cert) {
  return guarded("membership", [&](CheckReport& report) {
    if (!arity_ok(cert.nvars, cert.target, cert.generators, cert.cofactors)) {
      report.fail(Errc::MismatchedArity, "certificate mixes rings");
      return;
    }
    if (cert.cofactors.size() != cert.generators.size()) {
      report.fail(Errc::LengthMismatch, std::to_string(cert.cofactors.size()) + " cofactors for " +
                                            std::to_string(cert.generators.size()) + " generators");
      return;
    }
    Poly residual = cert.target - dot(cert.nvars, cert.cofactors, cert.generators);
    report.require("identity", residual.is_zero(),
                   residual.is_zero() ? "" : "f - sum c_i s_i = " + show(residual));
  });
}

CheckReport check_ideal_eq(const IdealEqCert& cert) {
  return guarded("ideal_eq", [&](CheckReport& report) {
    if (!arity_ok(cert.nvars, cert.left, cert.right, cert.left_in_right, cert.right_in_left)) {
      report.fail(Errc::MismatchedArity, "certificate mixes rings");
      return;
    }
    if (!rows_ok(cert.left_in_right, cert.left.size(), cert.right.size()) ||
        !rows_ok(cert.right_in_left, cert.right.size(), cert.left.size())) {
      report.fail(Errc::LengthMismatch, "cofactor matrix shape does not match generator counts");
      return;
    }
    for (std::size_t i = 0; i < cert.left.size(); ++i) {
      Poly residual = cert.left[i] - dot(cert.nvars, cert.left_in_right[i], cert.right);
      report.require("left[" + std::to_string(i) + "]", residual.is_zero(),
                     residual.is_zero() ? "" : "residual " + show(residual));
    }
    for (std::size_t j = 0; j < cert.right.size(); ++j) {
      Poly residual = cert.right[j] - dot(cert.nvars, cert.right_in_left[j], cert.left);
      report.require("right[" + std::to_string(j) + "]", residual.is_zero(),
                     residual.is_zero() ? "" : "residual " + show(residual));
    }
  });
}

CheckReport check_groebner_cert(const GroebnerCert& cert) {
  return guarded("groebner", [&](CheckReport& report) {
    if (!arity_ok(cert.nvars, cert.basis, cert.target, cert.s_pair_witnesses) ||
        cert.ideal_eq.nvars != cert.nvars) {
      report.fail(Errc::MismatchedArity, "certificate mixes rings");
      return;
    }
    for (std::size_t k = 0; k < cert.basis.size(); ++k) {
      if (cert.basis[k].is_zero()) {
        report.fail(Errc::ZeroPolynomial, "basis[" + std::to_string(k) + "] is zero");
        return;
      }
    }
    auto pairs = basis_pairs(cert.basis.size());
    if (!rows_ok(cert.s_pair_witnesses, pairs.size(), cert.basis.size())) {
      report.fail(Errc::LengthMismatch, "expected " + std::to_string(pairs.size()) +
                                            " S-pair witnesses of length " +
                                            std::to_string(cert.basis.size()));
      return;
    }
    const Poly zero(cert.nvars);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      auto [i, j] = pairs[p];
      Poly s = s_polynomial(cert.basis[i], cert.basis[j]);
      report.absorb("s_pair[" + std::to_string(i) + "," + std::to_string(j) + "]",
                    check_remainder(s, cert.basis, zero, cert.s_pair_witnesses[p]));
    }
    report.require("ideal_eq.left_is_basis", cert.ideal_eq.left == cert.basis);
    report.require("ideal_eq.right_is_target", cert.ideal_eq.right == cert.target);
    report.absorb("ideal_eq", check_ideal_eq(cert.ideal_eq));
  });
}

namespace {

// Shared by non-membership and normal-form certificates.
template <typename Cert>
void check_reduction_against_basis(const Cert& cert, CheckReport& report) {
  if (!arity_ok(cert.nvars, cert.target, cert.generators, cert.quotients, cert.remainder) ||
      cert.groebner.nvars != cert.nvars) {
    report.fail(Errc::MismatchedArity, "certificate mixes rings");
    return;
  }
  report.require("groebner.target_is_generators", cert.groebner.target == cert.generators);
  report.absorb("groebner", check_groebner_cert(cert.groebner));
  report.absorb("remainder",
                check_remainder(cert.target, cert.groebner.basis, cert.remainder, cert.quotients));
}

}  // namespace

CheckReport check_nonmembership(const NonMembershipCert& cert) {
  return guarded("non_membership", [&](CheckReport& report) {
    check_reduction_against_basis(cert, report);
    report.require("nonzero_remainder", !cert.remainder.is_zero(), "r must be nonzero");
  });
}

CheckReport check_normal_form(const NormalFormCert& cert) {
  return guarded("normal_form",
                 [&](CheckReport& report) { check_reduction_against_basis(cert, report); });
}

CheckReport check_radical_member(const RadicalMemberCert& cert) {
  return guarded("radical_member", [&](CheckReport& report) {
    if (cert.exponent == 0) {
      report.fail(Errc::ExponentZero, "exponent must be at least 1");
      return;
    }
    if (!arity_ok(cert.nvars, cert.target, cert.generators) || cert.membership.nvars != cert.nvars) {
      report.fail(Errc::MismatchedArity, "certificate mixes rings");
      return;
    }
    report.require("membership.generators_match", cert.membership.generators == cert.generators);
    // Cheap degree test first so an absurd exponent cannot force a huge power.
    bool target_ok = false;
    std::uint64_t d = total_degree(cert.target);
    if (d == 0 || total_degree(cert.membership.target) == d * cert.exponent) {
      target_ok = cert.membership.target.nvars() == cert.nvars &&
                  cert.membership.target == pow(cert.target, cert.exponent);
    }
    report.require("membership.target_is_power", target_ok,
                   target_ok ? "" : "membership target differs from f^n");
    report.absorb("membership", check_membership(cert.membership));
  });
}

CheckReport check_radical_nonmember(const RadicalNonMemberCert& cert) {
  return guarded("radical_non_member", [&](CheckReport& report) {
    if (!arity_ok(cert.nvars, cert.target, cert.generators)) {
      report.fail(Errc::MismatchedArity, "certificate mixes rings");
      return;
    }
    if (cert.extended.nvars != cert.nvars + 1 ||
        cert.extended.generators != rabinowitsch_extension(cert.target, cert.generators)) {
      report.fail(Errc::ExtensionMismatch,
                  "extended generators are not lift(B) followed by 1 - t*f");
    } else {
      report.require("extension", true);
    }
    report.require("extended.unit_target", cert.extended.target == Poly::one(cert.nvars + 1),
                   "inner target must be 1");
    report.absorb("extended", check_nonmembership(cert.extended));
  });
}

CheckReport check_certificate(const Certificate& cert) {
  return std::visit(
      [](const auto& c) -> CheckReport {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RemainderCert>) return check_remainder_cert(c);
        if constexpr (std::is_same_v<T, MembershipCert>) return check_membership(c);
        if constexpr (std::is_same_v<T, IdealEqCert>) return check_ideal_eq(c);
        if constexpr (std::is_same_v<T, GroebnerCert>) return check_groebner_cert(c);
        if constexpr (std::is_same_v<T, NonMembershipCert>) return check_nonmembership(c);
        if constexpr (std::is_same_v<T, RadicalMemberCert>) return check_radical_member(c);
        if constexpr (std::is_same_v<T, RadicalNonMemberCert>) return check_radical_nonmember(c);
        if constexpr (std::is_same_v<T, NormalFormCert>) return check_normal_form(c);
      },
      cert);
}

std::string_view certificate_kind(const Certificate& cert) {
  static constexpr std::string_view kNames[] = {
      "remainder",      "membership",     "ideal_eq",           "groebner",
      "non_membership", "radical_member", "radical_non_member", "normal_form"};
  return kNames[cert.index()];
}

}  // namespace gbcert
