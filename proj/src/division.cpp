#include "gbcert/division.hpp"

#include <algorithm>
#include <iterator>

#include "gbcert/errors.hpp"

namespace gbcert {

namespace {

// work holds the running dividend in ascending lex order, so the leading
// term is at the back. Subtracts c * m * tail, where tail is descending.
void subtract_scaled(std::vector<Term>& work, std::span<const Term> tail, const Rational& c,
                     const Monomial& m) {
  std::vector<Term> out;
  out.reserve(work.size() + tail.size());
  auto w = work.begin();
  for (auto t = tail.rbegin(); t != tail.rend(); ++t) {
    Monomial mono = t->mono * m;
    while (w != work.end() && lex_compare(w->mono, mono) < 0) out.push_back(std::move(*w++));
    Rational prod = t->coeff * c;
    if (w != work.end() && w->mono == mono) {
      w->coeff -= prod;
      if (!w->coeff.is_zero()) out.push_back(std::move(*w));
      ++w;
    } else {
      out.push_back({-prod, std::move(mono)});
    }
  }
  std::move(w, work.end(), std::back_inserter(out));
  work = std::move(out);
}

}  // namespace

DivisionResult divide(const Poly& f, std::span<const Poly> divisors) {
  require_arity(f.nvars(), divisors);
  const std::size_t n = f.nvars();

  std::vector<std::vector<Term>> quotient_terms(divisors.size());
  std::vector<Term> remainder_terms;
  std::vector<Term> work(f.terms().rbegin(), f.terms().rend());

  while (!work.empty()) {
    Term lead = std::move(work.back());
    work.pop_back();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const Poly& b = divisors[i];
      if (b.is_zero() || !b.multideg().divides(lead.mono)) continue;
      Term step{lead.coeff / b.leading_coeff(), lead.mono / b.multideg()};
      subtract_scaled(work, b.terms().subspan(1), step.coeff, step.mono);
      // Leading terms strictly decrease, so quotient terms arrive in
      // descending order.
      quotient_terms[i].push_back(std::move(step));
      reduced = true;
      break;
    }
    if (!reduced) remainder_terms.push_back(std::move(lead));
  }

  DivisionResult out{{}, Poly::from_terms(n, std::move(remainder_terms))};
  out.quotients.reserve(divisors.size());
  for (auto& q : quotient_terms) out.quotients.push_back(Poly::from_terms(n, std::move(q)));
  return out;
}

}  // namespace gbcert
