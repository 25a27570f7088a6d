#include "gbcert/monomial.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "gbcert/errors.hpp"

namespace gbcert {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) {
    throw Error(Errc::ExponentOverflow, "exponent exceeds 2^32-1");
  }
  return a + b;
}

}  // namespace

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Factor& a, const Factor& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& f : factors) {
    if (f.exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().var == f.var) {
      m.factors_.back().exp = checked_add(m.factors_.back().exp, f.exp);
    } else {
      m.factors_.push_back(f);
    }
  }
  return m;
}

Monomial Monomial::variable(VarIndex var, Exponent exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({var, exp});
  return m;
}

Exponent Monomial::exponent(VarIndex var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, VarIndex v) { return f.var < v; });
  return (it != factors_.end() && it->var == var) ? it->exp : 0;
}

std::uint64_t Monomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& f : factors_) d += f.exp;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  auto it = other.factors_.begin();
  for (const auto& f : factors_) {
    while (it != other.factors_.end() && it->var < f.var) ++it;
    if (it == other.factors_.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->var < i->var) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->var, checked_add(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial r;
  auto j = b.factors_.begin();
  for (const auto& f : a.factors_) {
    if (j != b.factors_.end() && j->var == f.var) {
      if (f.exp > j->exp) r.factors_.push_back({f.var, f.exp - j->exp});
      ++j;
    } else {
      r.factors_.push_back(f);
    }
  }
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->var < j->var)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->var < i->var) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->var, std::max(i->exp, j->exp)});
      ++i;
      ++j;
    }
  }
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() && j != b.factors_.end()) {
    if (i->var == j->var) return false;
    if (i->var < j->var) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  auto fa = a.factors();
  auto fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    // The side holding the smaller variable index has a positive exponent
    // where the other has zero.
    if (fa[i].var != fb[i].var) {
      return fa[i].var < fb[i].var ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    if (fa[i].exp != fb[i].exp) return fa[i].exp <=> fb[i].exp;
  }
  if (fa.size() != fb.size()) {
    return fa.size() > i ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  if (m.is_one()) return os << "1";
  bool first = true;
  for (const auto& f : m.factors()) {
    if (!first) os << '*';
    first = false;
    os << 'x' << f.var;
    if (f.exp > 1) os << '^' << f.exp;
  }
  return os;
}

}  // namespace gbcert
