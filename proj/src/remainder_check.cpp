#include <sstream>
#include <string>

#include "gbcert/division.hpp"

namespace gbcert {

namespace {

std::string show(const Poly& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

bool same_arity(std::size_t nvars, std::span<const Poly> polys) {
  for (const auto& p : polys) {
    if (p.nvars() != nvars) return false;
  }
  return true;
}

}  // namespace

CheckReport check_remainder(const Poly& f, std::span<const Poly> divisors, const Poly& r,
                            std::span<const Poly> quotients) {
  CheckReport report;
  report.kind = "remainder";
  const std::size_t n = f.nvars();
  if (r.nvars() != n || !same_arity(n, divisors) || !same_arity(n, quotients)) {
    report.fail(Errc::MismatchedArity, "polynomials live in different rings");
    return report;
  }
  if (quotients.size() != divisors.size()) {
    report.fail(Errc::LengthMismatch, std::to_string(quotients.size()) + " quotients for " +
                                          std::to_string(divisors.size()) + " divisors");
    return report;
  }

  Poly residual = f - r - dot(n, quotients, divisors);
  report.require("identity", residual.is_zero(),
                 residual.is_zero() ? "" : "f - r - sum q_i b_i = " + show(residual));

  bool irreducible = true;
  std::string offending;
  for (const auto& t : r.terms()) {
    for (std::size_t i = 0; i < divisors.size() && irreducible; ++i) {
      if (!divisors[i].is_zero() && divisors[i].multideg().divides(t.mono)) {
        irreducible = false;
        std::ostringstream os;
        os << "remainder monomial " << t.mono << " divisible by LM(b_" << i << ")";
        offending = os.str();
      }
    }
    if (!irreducible) break;
  }
  report.require("irreducible", irreducible, offending);

  bool bounded = true;
  std::string why;
  if (!(f.is_zero() && r.is_zero())) {
    for (std::size_t i = 0; i < divisors.size() && bounded; ++i) {
      if (quotients[i].is_zero() || divisors[i].is_zero()) continue;
      // Q has no zero divisors, so LM(q*b) = LM(q) * LM(b).
      Monomial product = quotients[i].multideg() * divisors[i].multideg();
      if (f.is_zero() || lex_compare(product, f.multideg()) > 0) {
        bounded = false;
        std::ostringstream os;
        os << "multideg(q_" << i << " b_" << i << ") = " << product << " exceeds multideg(f)";
        why = os.str();
      }
    }
  }
  report.require("degree", bounded, why);
  return report;
}

}  // namespace gbcert
