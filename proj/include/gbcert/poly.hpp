#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "gbcert/monomial.hpp"
#include "gbcert/rational.hpp"

namespace gbcert {

struct Term {
  Rational coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in Q[x_0, ..., x_{nvars-1}] under lex order.
///
/// Terms are kept in strictly descending lex order with nonzero coefficients,
/// so the leading term is the front element and equality is structural.
/// Every binary operation requires both operands to have the same nvars.
class Poly {
 public:
  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  /// Normalizes arbitrary input: sorts, merges equal monomials and drops
  /// zero coefficients. Throws VariableOutOfRange if a variable index is
  /// not below nvars.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms);
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly one(std::size_t nvars) { return constant(nvars, 1); }
  static Poly variable(std::size_t nvars, VarIndex var, Exponent exp = 1);
  static Poly term(std::size_t nvars, Term t);

  std::size_t nvars() const { return nvars_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Throws ZeroPolynomial on the zero polynomial.
  const Term& leading_term() const;
  const Monomial& multideg() const { return leading_term().mono; }
  const Rational& leading_coeff() const { return leading_term().coeff; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  /// Removes the leading term; no-op on zero.
  void pop_leading();

  Poly scaled(const Rational& c) const;
  Poly times_term(const Term& t) const;
  /// Same terms, one extra variable appended at index nvars.
  Poly lift_to_extended() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Poly(std::size_t nvars, std::vector<Term> sorted_terms)
      : nvars_(nvars), terms_(std::move(sorted_terms)) {}

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// p^0 = 1, including for p = 0.
Poly pow(const Poly& p, unsigned n);

/// Sum of a[i] * b[i]; both spans must have equal length and the result
/// lives in `nvars` variables.
Poly dot(std::size_t nvars, std::span<const Poly> a, std::span<const Poly> b);

/// Throws MismatchedArity unless every polynomial has `nvars` variables.
void require_arity(std::size_t nvars, std::span<const Poly> polys);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace gbcert
