#pragma once

#include <span>
#include <vector>

#include "gbcert/check_report.hpp"
#include "gbcert/poly.hpp"

namespace gbcert {

struct DivisionResult {
  std::vector<Poly> quotients;
  Poly remainder;
};

/// Multivariate division of f by an ordered divisor list.
///
/// When several leading monomials divide the current leading term the first
/// divisor in list order is used. Zero divisors are allowed and receive a
/// zero quotient.
DivisionResult divide(const Poly& f, std::span<const Poly> divisors);

/// Trusted remainder predicate. Accepts iff
///   (a) f - r == sum_i q_i * b_i,
///   (b) no monomial of r is divisible by LM(b_i) for a nonzero b_i,
///   (c) multideg(q_i * b_i) <= multideg(f) for every nonzero product.
/// Condition (c) is vacuous when f and r are both zero.
CheckReport check_remainder(const Poly& f, std::span<const Poly> divisors, const Poly& r,
                            std::span<const Poly> quotients);

}  // namespace gbcert
