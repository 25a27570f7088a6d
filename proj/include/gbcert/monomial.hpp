#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace gbcert {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// Power product stored sparsely as (variable, exponent) factors.
///
/// Factors are sorted by strictly increasing variable index and every stored
/// exponent is at least one, so the constant monomial is the empty list and
/// structural equality coincides with mathematical equality.
class Monomial {
 public:
  struct Factor {
    VarIndex var;
    Exponent exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  Monomial() = default;

  /// Accepts factors in any order; repeated variables are merged and zero
  /// exponents dropped.
  static Monomial from_factors(std::vector<Factor> factors);
  static Monomial variable(VarIndex var, Exponent exp = 1);

  std::span<const Factor> factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Exponent exponent(VarIndex var) const;
  std::uint64_t total_degree() const;
  /// One past the largest variable index that occurs (0 for the constant).
  VarIndex var_bound() const { return factors_.empty() ? 0 : factors_.back().var + 1; }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Lexicographic order with variable 0 the most significant.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

/// Strict "greater" under lex, for sorting terms into descending order.
struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace gbcert
