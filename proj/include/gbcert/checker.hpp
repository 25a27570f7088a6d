#pragma once

#include "gbcert/certificates.hpp"
#include "gbcert/check_report.hpp"

namespace gbcert {

// The trusted side. Everything here uses only polynomial arithmetic, lex
// comparison, check_remainder and (for Groebner certificates) S-polynomial
// recomputation. Nothing in this header searches for witnesses.

CheckReport check_remainder_cert(const RemainderCert& cert);
CheckReport check_membership(const MembershipCert& cert);
CheckReport check_ideal_eq(const IdealEqCert& cert);
CheckReport check_groebner_cert(const GroebnerCert& cert);
CheckReport check_nonmembership(const NonMembershipCert& cert);
CheckReport check_radical_member(const RadicalMemberCert& cert);
CheckReport check_radical_nonmember(const RadicalNonMemberCert& cert);
CheckReport check_normal_form(const NormalFormCert& cert);

CheckReport check_certificate(const Certificate& cert);

/// lift(generators) followed by 1 - x_nvars * lift(target), in nvars + 1
/// variables.
PolyList rabinowitsch_extension(const Poly& target, const PolyList& generators);

}  // namespace gbcert
