#pragma once

// Test-only helpers: a polynomial literal parser, seeded random generators
// and a dense coefficient-map oracle that shares no code with Poly's
// arithmetic.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbcert/poly.hpp"

namespace gbcert::test {

/// Parses literals such as "3/4*x1^2*x2 - 7*x3^5 + 2".
inline Poly P(std::size_t nvars, const std::string& text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::string {
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    return digits;
  };
  skip();
  if (text.substr(i) == "0") return Poly(nvars);
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    }
    mpz_class num = 1;
    mpz_class den = 1;
    std::vector<Monomial::Factor> factors;
    bool first = true;
    while (true) {
      skip();
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        num *= mpz_class(number());
        if (i < text.size() && text[i] == '/') {
          ++i;
          den *= mpz_class(number());
        }
      } else if (i < text.size() && text[i] == 'x') {
        ++i;
        auto var = static_cast<VarIndex>(std::stoul(number()));
        Exponent exp = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          exp = static_cast<Exponent>(std::stoul(number()));
        }
        factors.push_back({var, exp});
      } else if (first) {
        throw std::invalid_argument("bad polynomial literal: " + text);
      }
      first = false;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    terms.push_back({Rational(sign * num, den), Monomial::from_factors(std::move(factors))});
    skip();
  }
  return Poly::from_terms(nvars, std::move(terms));
}

inline std::vector<Poly> Ps(std::size_t nvars, const std::vector<std::string>& texts) {
  std::vector<Poly> out;
  for (const auto& t : texts) out.push_back(P(nvars, t));
  return out;
}

struct RandomPolySpec {
  std::size_t nvars = 3;
  std::size_t max_terms = 4;
  unsigned max_degree = 3;  // total degree bound
  unsigned max_exp = 3;     // per-variable bound
  long max_num = 9;
  long max_den = 1;
  bool allow_zero = false;
};

inline Poly random_poly(std::mt19937_64& rng, const RandomPolySpec& spec) {
  std::uniform_int_distribution<std::size_t> nterms(spec.allow_zero ? 0 : 1, spec.max_terms);
  std::uniform_int_distribution<unsigned> expd(0, spec.max_exp);
  std::uniform_int_distribution<long> numd(-spec.max_num, spec.max_num);
  std::uniform_int_distribution<long> dend(1, spec.max_den);
  for (;;) {
    std::vector<Term> terms;
    std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t) {
      std::vector<Monomial::Factor> f;
      unsigned budget = spec.max_degree;
      for (std::size_t v = 0; v < spec.nvars; ++v) {
        unsigned e = std::min(expd(rng), budget);
        budget -= e;
        f.push_back({static_cast<VarIndex>(v), e});
      }
      // Shuffle which variables soak up the degree budget.
      std::shuffle(f.begin(), f.end(), rng);
      long num = numd(rng);
      terms.push_back({Rational(num, dend(rng)), Monomial::from_factors(std::move(f))});
    }
    Poly p = Poly::from_terms(spec.nvars, std::move(terms));
    if (!p.is_zero() || spec.allow_zero) return p;
  }
}

// ---------------------------------------------------------------------------
// Dense oracle: exponent vectors padded to nvars, coefficients in mpq_class.

using DenseKey = std::vector<unsigned>;
using Dense = std::map<DenseKey, mpq_class>;

inline Dense to_dense(const Poly& p) {
  Dense d;
  for (const auto& t : p.terms()) {
    DenseKey k(p.nvars(), 0);
    for (const auto& f : t.mono.factors()) k[f.var] = f.exp;
    d[k] = mpq_class(t.coeff.num(), t.coeff.den());
  }
  return d;
}

inline Dense dense_add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (const auto& [k, c] : b) out[k] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      DenseKey k(ka.size());
      for (std::size_t v = 0; v < k.size(); ++v) k[v] = ka[v] + kb[v];
      out[k] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Brute-force lex comparison over densely padded exponent vectors.
inline int dense_lex(const Monomial& a, const Monomial& b, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v) {
    auto ea = a.exponent(static_cast<VarIndex>(v));
    auto eb = b.exponent(static_cast<VarIndex>(v));
    if (ea != eb) return ea > eb ? 1 : -1;
  }
  return 0;
}

}  // namespace gbcert::test
