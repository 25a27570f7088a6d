#include "gbcert/spoly.hpp"

#include "gbcert/errors.hpp"

namespace gbcert {

SPairMultipliers s_pair_multipliers(const Poly& f, const Poly& g) {
  if (f.nvars() != g.nvars()) throw Error(Errc::MismatchedArity, "S-polynomial operands");
  const Term& lf = f.leading_term();
  const Term& lg = g.leading_term();
  Monomial l = lcm(lf.mono, lg.mono);
  return {Term{lf.coeff.inverse(), l / lf.mono}, Term{lg.coeff.inverse(), l / lg.mono}};
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  auto m = s_pair_multipliers(f, g);
  return f.times_term(m.left) - g.times_term(m.right);
}

std::vector<std::pair<std::size_t, std::size_t>> basis_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n > 1) out.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

}  // namespace gbcert
