#include "gbcert/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <utility>

#include "gbcert/division.hpp"
#include "gbcert/errors.hpp"
#include "gbcert/spoly.hpp"

namespace gbcert {

namespace {

// A polynomial together with its expression in the original generators.
struct Tracked {
  Poly poly;
  std::vector<Poly> cof;
};

class TrackedBasis {
 public:
  TrackedBasis(std::size_t nvars, std::size_t ngens) : nvars_(nvars), ngens_(ngens) {}

  std::size_t size() const { return polys_.size(); }
  const Poly& poly(std::size_t k) const { return polys_[k]; }
  std::span<const Poly> polys() const { return polys_; }
  const std::vector<Poly>& cof(std::size_t k) const { return cofs_[k]; }

  void push(Tracked t) {
    polys_.push_back(std::move(t.poly));
    cofs_.push_back(std::move(t.cof));
  }

  // Full reduction of h by the elements selected by `active`, threading the
  // quotients through the cofactor vectors.
  Tracked reduce(Tracked h, const std::vector<std::size_t>& active) const {
    DivisionResult d = divide_by(h.poly, active);
    subtract_quotients(h.cof, d.quotients, active);
    h.poly = std::move(d.remainder);
    return h;
  }

  // Reduces S(g_i, g_j) by the whole basis. Most S-polynomials reduce to
  // zero, so the cofactors are only assembled for a nonzero remainder.
  std::optional<Tracked> reduce_s_pair(std::size_t i, std::size_t j) const {
    auto m = s_pair_multipliers(polys_[i], polys_[j]);
    Poly s = polys_[i].times_term(m.left) - polys_[j].times_term(m.right);
    std::vector<std::size_t> active = all();
    DivisionResult d = divide_by(s, active);
    if (d.remainder.is_zero()) return std::nullopt;
    Tracked h{std::move(d.remainder), {}};
    h.cof.reserve(ngens_);
    for (std::size_t c = 0; c < ngens_; ++c) {
      h.cof.push_back(cofs_[i][c].times_term(m.left) - cofs_[j][c].times_term(m.right));
    }
    subtract_quotients(h.cof, d.quotients, active);
    return h;
  }

  std::vector<std::size_t> all() const {
    std::vector<std::size_t> idx(size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    return idx;
  }

  std::size_t nvars() const { return nvars_; }
  std::size_t ngens() const { return ngens_; }

 private:
  DivisionResult divide_by(const Poly& p, const std::vector<std::size_t>& active) const {
    std::vector<Poly> divisors;
    divisors.reserve(active.size());
    for (auto k : active) divisors.push_back(polys_[k]);
    return divide(p, divisors);
  }

  void subtract_quotients(std::vector<Poly>& cof, const std::vector<Poly>& quotients,
                          const std::vector<std::size_t>& active) const {
    for (std::size_t a = 0; a < active.size(); ++a) {
      const Poly& q = quotients[a];
      if (q.is_zero()) continue;
      const auto& ck = cofs_[active[a]];
      for (std::size_t j = 0; j < ngens_; ++j) {
        if (!ck[j].is_zero()) cof[j] -= q * ck[j];
      }
    }
  }

  std::size_t nvars_;
  std::size_t ngens_;
  std::vector<Poly> polys_;
  std::vector<std::vector<Poly>> cofs_;
};

Tracked make_monic(Tracked t) {
  Rational inv = t.poly.leading_coeff().inverse();
  if (inv.is_one()) return t;
  t.poly = t.poly.scaled(inv);
  for (auto& c : t.cof) c = c.scaled(inv);
  return t;
}

GroebnerOutput unit_basis(const TrackedBasis& g, std::size_t k) {
  Tracked t = make_monic({g.poly(k), g.cof(k)});
  GroebnerOutput out;
  out.basis.push_back(std::move(t.poly));
  out.cofactors.push_back(std::move(t.cof));
  return out;
}

// Drops elements whose leading monomial is divisible by another's, reduces
// the tails, makes everything monic and sorts by descending leading monomial.
GroebnerOutput reduce_basis(const TrackedBasis& g) {
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const Monomial& lk = g.poly(k).multideg();
    bool redundant = false;
    for (std::size_t m = 0; m < g.size() && !redundant; ++m) {
      if (m == k) continue;
      const Monomial& lm = g.poly(m).multideg();
      redundant = lm.divides(lk) && (lm != lk || m < k);
    }
    if (!redundant) kept.push_back(k);
  }

  std::vector<Tracked> reduced;
  reduced.reserve(kept.size());
  for (auto k : kept) {
    std::vector<std::size_t> others;
    for (auto m : kept) {
      if (m != k) others.push_back(m);
    }
    reduced.push_back(make_monic(g.reduce({g.poly(k), g.cof(k)}, others)));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Tracked& a, const Tracked& b) {
    return LexGreater{}(a.poly.multideg(), b.poly.multideg());
  });

  GroebnerOutput out;
  for (auto& t : reduced) {
    out.basis.push_back(std::move(t.poly));
    out.cofactors.push_back(std::move(t.cof));
  }
  return out;
}

}  // namespace

GroebnerOutput buchberger(std::size_t nvars, std::span<const Poly> generators,
                          const BuchbergerOptions& options) {
  require_arity(nvars, generators);
  const std::size_t m = generators.size();
  TrackedBasis g(nvars, m);

  for (std::size_t j = 0; j < m; ++j) {
    if (generators[j].is_zero()) continue;
    std::vector<Poly> cof(m, Poly(nvars));
    cof[j] = Poly::one(nvars);
    g.push({generators[j], std::move(cof)});
    if (generators[j].multideg().is_one()) return unit_basis(g, g.size() - 1);
  }

  // pending[j][i], i < j, marks pairs still waiting in the queue.
  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<bool>> pending;
  auto add_element_pairs = [&](std::size_t n) {
    pending.emplace_back(n, true);
    for (std::size_t k = 0; k < n; ++k) pairs.emplace_back(k, n);
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return a < b ? pending[b][a] : pending[a][b];
  };
  // Buchberger's chain criterion: S(i, j) reduces to zero if some other
  // g_k has LM(g_k) | lcm(LM(g_i), LM(g_j)) and neither (i, k) nor (j, k)
  // is still pending.
  auto chain_skip = [&](std::size_t i, std::size_t j) {
    Monomial l = lcm(g.poly(i).multideg(), g.poly(j).multideg());
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (k == i || k == j) continue;
      if (is_pending(i, k) || is_pending(j, k)) continue;
      if (g.poly(k).multideg().divides(l)) return true;
    }
    return false;
  };
  for (std::size_t j = 0; j < g.size(); ++j) add_element_pairs(j);

  std::size_t reduced_pairs = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    pending[j][i] = false;
    if (coprime(g.poly(i).multideg(), g.poly(j).multideg())) continue;
    if (chain_skip(i, j)) continue;
    if (options.pair_budget && reduced_pairs >= *options.pair_budget) {
      throw Error(Errc::BudgetExceeded,
                  "pair budget of " + std::to_string(*options.pair_budget) + " exhausted");
    }
    ++reduced_pairs;

    std::optional<Tracked> h = g.reduce_s_pair(i, j);
    if (!h) continue;
    const std::size_t n = g.size();
    bool unit = h->poly.multideg().is_one();
    g.push(std::move(*h));
    if (unit) return unit_basis(g, n);
    add_element_pairs(n);
  }

  return reduce_basis(g);
}

CriterionResult is_groebner_basis(std::span<const Poly> basis) {
  for (const auto& b : basis) {
    if (b.is_zero()) throw Error(Errc::ZeroPolynomial, "Groebner basis element is zero");
  }
  if (!basis.empty()) require_arity(basis.front().nvars(), basis);

  CriterionResult out;
  for (auto [i, j] : basis_pairs(basis.size())) {
    DivisionResult d = divide(s_polynomial(basis[i], basis[j]), basis);
    if (!d.remainder.is_zero()) out.holds = false;
    out.witnesses.push_back(std::move(d.quotients));
    out.remainders.push_back(std::move(d.remainder));
  }
  return out;
}

}  // namespace gbcert
