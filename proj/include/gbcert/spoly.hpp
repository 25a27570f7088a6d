#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gbcert/poly.hpp"

namespace gbcert {

/// Multipliers turning f and g into the two halves of their S-polynomial:
/// S(f, g) = left * f - right * g.
struct SPairMultipliers {
  Term left;
  Term right;
};

/// Throws ZeroPolynomial if either argument is zero.
SPairMultipliers s_pair_multipliers(const Poly& f, const Poly& g);

/// (lcm / LT(f)) * f - (lcm / LT(g)) * g with lcm = lcm(LM(f), LM(g)).
Poly s_polynomial(const Poly& f, const Poly& g);

/// All index pairs (i, j) with i < j < n, ordered by i then j. This is the
/// order in which S-pair witnesses are stored in a Groebner certificate.
std::vector<std::pair<std::size_t, std::size_t>> basis_pairs(std::size_t n);

}  // namespace gbcert
