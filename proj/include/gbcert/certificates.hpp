#pragma once

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

#include "gbcert/poly.hpp"

namespace gbcert {

using PolyList = std::vector<Poly>;
using PolyMatrix = std::vector<std::vector<Poly>>;

/// f - r = sum q_i * b_i with r irreducible modulo the divisors.
struct RemainderCert {
  std::size_t nvars = 0;
  Poly f;
  PolyList divisors;
  PolyList quotients;
  Poly remainder;
  friend bool operator==(const RemainderCert&, const RemainderCert&) = default;
};

/// target = sum cofactors[i] * generators[i].
struct MembershipCert {
  std::size_t nvars = 0;
  Poly target;
  PolyList generators;
  PolyList cofactors;
  friend bool operator==(const MembershipCert&, const MembershipCert&) = default;
};

/// left[i] = sum_j left_in_right[i][j] * right[j] and
/// right[j] = sum_i right_in_left[j][i] * left[i].
struct IdealEqCert {
  std::size_t nvars = 0;
  PolyList left;
  PolyList right;
  PolyMatrix left_in_right;
  PolyMatrix right_in_left;
  friend bool operator==(const IdealEqCert&, const IdealEqCert&) = default;
};

/// `basis` is a Groebner basis of the ideal generated by `target`.
/// s_pair_witnesses[p] holds the quotients reducing the p-th S-pair (in
/// basis_pairs() order) to zero; the checker recomputes the S-polynomials.
struct GroebnerCert {
  std::size_t nvars = 0;
  PolyList basis;
  PolyList target;
  PolyMatrix s_pair_witnesses;
  IdealEqCert ideal_eq;
  friend bool operator==(const GroebnerCert&, const GroebnerCert&) = default;
};

/// target is not in <generators>: a certified basis plus a nonzero remainder.
struct NonMembershipCert {
  std::size_t nvars = 0;
  Poly target;
  PolyList generators;
  GroebnerCert groebner;
  PolyList quotients;
  Poly remainder;
  friend bool operator==(const NonMembershipCert&, const NonMembershipCert&) = default;
};

/// target^exponent lies in <generators>.
struct RadicalMemberCert {
  std::size_t nvars = 0;
  Poly target;
  PolyList generators;
  unsigned exponent = 1;
  MembershipCert membership;
  friend bool operator==(const RadicalMemberCert&, const RadicalMemberCert&) = default;
};

/// 1 is not in <lift(generators), 1 - t*target> with t the variable at index
/// nvars, hence target is not in the radical of <generators>.
struct RadicalNonMemberCert {
  std::size_t nvars = 0;
  Poly target;
  PolyList generators;
  NonMembershipCert extended;
  friend bool operator==(const RadicalNonMemberCert&, const RadicalNonMemberCert&) = default;
};

/// The normal form of target modulo a certified Groebner basis of
/// <generators>. Same shape as NonMembershipCert without the r != 0 claim.
struct NormalFormCert {
  std::size_t nvars = 0;
  Poly target;
  PolyList generators;
  GroebnerCert groebner;
  PolyList quotients;
  Poly remainder;
  friend bool operator==(const NormalFormCert&, const NormalFormCert&) = default;
};

using Certificate = std::variant<RemainderCert, MembershipCert, IdealEqCert, GroebnerCert,
                                 NonMembershipCert, RadicalMemberCert, RadicalNonMemberCert,
                                 NormalFormCert>;

/// Wire name of the certificate alternative ("membership", ...).
std::string_view certificate_kind(const Certificate& cert);

}  // namespace gbcert
