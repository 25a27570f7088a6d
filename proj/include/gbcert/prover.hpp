#pragma once

#include <cstddef>
#include <variant>

#include "gbcert/buchberger.hpp"
#include "gbcert/certificates.hpp"

namespace gbcert {

// The untrusted side: searches for witnesses with division and Buchberger.
// Every certificate produced here is expected to pass its checker, but
// nothing downstream relies on that without running the check.

struct ProverOptions {
  BuchbergerOptions buchberger;
  /// Largest exponent tried by the radical-membership witness search.
  unsigned max_exp = 64;
};

struct NotAMember {
  NonMembershipCert witness;
};

struct IsAMember {
  MembershipCert witness;
};

enum class Side { Left, Right };

/// The first generator of one side that is not in the ideal of the other.
struct NotEqual {
  Side side = Side::Left;
  std::size_t index = 0;
  NonMembershipCert witness;
};

struct NotInRadical {
  RadicalNonMemberCert witness;
};

struct InRadical {};

RemainderCert gen_remainder(const Poly& f, const PolyList& divisors);

std::variant<MembershipCert, NotAMember> gen_membership(const Poly& f, const PolyList& generators,
                                                        const ProverOptions& options = {});
std::variant<NonMembershipCert, IsAMember> gen_nonmembership(const Poly& f,
                                                             const PolyList& generators,
                                                             const ProverOptions& options = {});

std::variant<IdealEqCert, NotEqual> gen_ideal_eq(std::size_t nvars, const PolyList& left,
                                                 const PolyList& right,
                                                 const ProverOptions& options = {});

GroebnerCert gen_groebner_cert(std::size_t nvars, const PolyList& generators,
                               const ProverOptions& options = {});

NormalFormCert gen_normal_form(const Poly& f, const PolyList& generators,
                               const ProverOptions& options = {});

/// Decides radical membership via the Rabinowitsch extension, then searches
/// n = 1, 2, ..., max_exp for the least n with f^n in <S>. Throws
/// BudgetExceeded if f is in the radical but no n <= max_exp works.
std::variant<RadicalMemberCert, NotInRadical> gen_radical_member(const Poly& f,
                                                                 const PolyList& generators,
                                                                 const ProverOptions& options = {});

std::variant<RadicalNonMemberCert, InRadical> gen_radical_nonmember(
    const Poly& f, const PolyList& generators, const ProverOptions& options = {});

}  // namespace gbcert
