#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gbcert/poly.hpp"

namespace gbcert {

struct BuchbergerOptions {
  /// Maximum number of S-pairs reduced before giving up with BudgetExceeded.
  /// Unset means no cap.
  std::optional<std::size_t> pair_budget;
};

/// Reduced monic Groebner basis with its expression in the input generators:
/// basis[k] == sum_j cofactors[k][j] * generators[j].
struct GroebnerOutput {
  std::vector<Poly> basis;
  std::vector<std::vector<Poly>> cofactors;
};

/// Buchberger's algorithm with cofactor tracking. Pairs are processed FIFO in
/// creation order; pairs with coprime leading monomials or covered by the
/// chain criterion are skipped. The
/// result is the reduced basis sorted by descending leading monomial.
GroebnerOutput buchberger(std::size_t nvars, std::span<const Poly> generators,
                          const BuchbergerOptions& options = {});

struct CriterionResult {
  bool holds = true;
  /// One quotient list per pair, in basis_pairs() order.
  std::vector<std::vector<Poly>> witnesses;
  std::vector<Poly> remainders;
};

/// Buchberger's criterion: divides every S(g_i, g_j), i < j, by G.
/// Throws ZeroPolynomial if G contains zero.
CriterionResult is_groebner_basis(std::span<const Poly> basis);

}  // namespace gbcert
