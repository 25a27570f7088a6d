#include "gbcert/poly.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "gbcert/errors.hpp"

namespace gbcert {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(Errc::MismatchedArity,
                std::to_string(a.nvars()) + " vs " + std::to_string(b.nvars()) + " variables");
  }
}

// Merges two descending term lists, b scaled by `sign`.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = lex_compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(sign > 0 ? b[j] : Term{-b[j].coeff, b[j].mono});
      ++j;
    } else {
      Rational s = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
      if (!s.is_zero()) out.push_back({std::move(s), a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(sign > 0 ? b[j] : Term{-b[j].coeff, b[j].mono});
  return out;
}

}  // namespace

Poly Poly::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (t.mono.var_bound() > nvars) {
      throw Error(Errc::VariableOutOfRange, "variable x" + std::to_string(t.mono.var_bound() - 1) +
                                                " in a ring with " + std::to_string(nvars) +
                                                " variables");
    }
  }
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return LexGreater{}(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return Poly(nvars, std::move(out));
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  if (c.is_zero()) return Poly(nvars);
  return Poly(nvars, std::vector<Term>{{c, Monomial{}}});
}

Poly Poly::variable(std::size_t nvars, VarIndex var, Exponent exp) {
  return from_terms(nvars, {{Rational(1), Monomial::variable(var, exp)}});
}

Poly Poly::term(std::size_t nvars, Term t) { return from_terms(nvars, {std::move(t)}); }

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  return terms_.front();
}

void Poly::pop_leading() {
  if (!terms_.empty()) terms_.erase(terms_.begin());
}

Poly Poly::operator-() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({-t.coeff, t.mono});
  return Poly(nvars_, std::move(out));
}

Poly& Poly::operator+=(const Poly& o) {
  require_same(*this, o);
  terms_ = merge(terms_, o.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same(*this, o);
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.nvars());
  if (a.size() == 1) return b.times_term(a.terms_.front());
  if (b.size() == 1) return a.times_term(b.terms_.front());
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.coeff * t.coeff, s.mono * t.mono});
  }
  return Poly::from_terms(a.nvars(), std::move(products));
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly(nvars_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.coeff * c, t.mono});
  return Poly(nvars_, std::move(out));
}

Poly Poly::times_term(const Term& t) const {
  if (t.coeff.is_zero()) return Poly(nvars_);
  if (t.mono.var_bound() > nvars_) {
    throw Error(Errc::VariableOutOfRange, "term multiplier outside the ring");
  }
  // Multiplying by a monomial preserves the order, so no re-sort is needed.
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& s : terms_) out.push_back({s.coeff * t.coeff, s.mono * t.mono});
  return Poly(nvars_, std::move(out));
}

Poly Poly::lift_to_extended() const { return Poly(nvars_ + 1, terms_); }

Poly pow(const Poly& p, unsigned n) {
  Poly result = Poly::one(p.nvars());
  Poly base = p;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Poly dot(std::size_t nvars, std::span<const Poly> a, std::span<const Poly> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::LengthMismatch,
                std::to_string(a.size()) + " cofactors for " + std::to_string(b.size()) + " polynomials");
  }
  Poly sum(nvars);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) {
      require_same(sum, a[i]);
      require_same(sum, b[i]);
      continue;
    }
    sum += a[i] * b[i];
  }
  return sum;
}

void require_arity(std::size_t nvars, std::span<const Poly> polys) {
  for (const auto& p : polys) {
    if (p.nvars() != nvars) {
      throw Error(Errc::MismatchedArity, "expected " + std::to_string(nvars) + " variables, got " +
                                             std::to_string(p.nvars()));
    }
  }
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  if (t.mono.is_one()) return os << t.coeff;
  if (t.coeff == Rational(-1)) {
    os << '-';
  } else if (!t.coeff.is_one()) {
    os << t.coeff << '*';
  }
  return os << t.mono;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      os << t;
    } else if (t.coeff.sign() < 0) {
      os << " - " << Term{-t.coeff, t.mono};
    } else {
      os << " + " << t;
    }
    first = false;
  }
  return os;
}

}  // namespace gbcert
