#include "gbcert/prover.hpp"

#include <optional>
#include <string>

#include "gbcert/checker.hpp"
#include "gbcert/division.hpp"
#include "gbcert/errors.hpp"

namespace gbcert {

namespace {

struct Lifted {
  DivisionResult division;
  /// Cofactors in terms of the original generators; meaningful only when
  /// the remainder is zero.
  PolyList cofactors;
};

// Divides f by the basis and pushes the quotients through the basis
// cofactor matrix: f = sum_k q_k G_k + r and G_k = sum_j M[k][j] B_j.
Lifted lift_through(const Poly& f, const GroebnerOutput& gb, std::size_t ngens) {
  Lifted out{divide(f, gb.basis), PolyList(ngens, Poly(f.nvars()))};
  for (std::size_t k = 0; k < gb.basis.size(); ++k) {
    const Poly& q = out.division.quotients[k];
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < ngens; ++j) {
      if (!gb.cofactors[k][j].is_zero()) out.cofactors[j] += q * gb.cofactors[k][j];
    }
  }
  return out;
}

// When f is literally one of the generators the unit row is the obvious
// witness; it is also what callers expect for identical ideal lists.
std::optional<PolyList> unit_row(const Poly& f, const PolyList& generators) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == f) {
      PolyList row(generators.size(), Poly(f.nvars()));
      row[i] = Poly::one(f.nvars());
      return row;
    }
  }
  return std::nullopt;
}

GroebnerCert groebner_cert_from(std::size_t nvars, const PolyList& generators,
                                const GroebnerOutput& gb) {
  GroebnerCert cert;
  cert.nvars = nvars;
  cert.basis = gb.basis;
  cert.target = generators;
  cert.s_pair_witnesses = is_groebner_basis(gb.basis).witnesses;

  cert.ideal_eq.nvars = nvars;
  cert.ideal_eq.left = gb.basis;
  cert.ideal_eq.right = generators;
  cert.ideal_eq.left_in_right = gb.cofactors;
  // Each generator reduces to zero against its own Groebner basis, so the
  // division quotients already express it in the basis.
  cert.ideal_eq.right_in_left.reserve(generators.size());
  for (const auto& g : generators) {
    cert.ideal_eq.right_in_left.push_back(divide(g, gb.basis).quotients);
  }
  return cert;
}

NonMembershipCert nonmembership_from(const Poly& f, const PolyList& generators,
                                     const GroebnerOutput& gb, DivisionResult division) {
  return {f.nvars(),
          f,
          generators,
          groebner_cert_from(f.nvars(), generators, gb),
          std::move(division.quotients),
          std::move(division.remainder)};
}

MembershipCert membership_from(const Poly& f, const PolyList& generators, PolyList cofactors) {
  return {f.nvars(), f, generators, std::move(cofactors)};
}

RadicalNonMemberCert radical_nonmember_from(const Poly& f, const PolyList& generators,
                                            const PolyList& extended, const GroebnerOutput& gb_ext,
                                            DivisionResult division) {
  return {f.nvars(), f, generators,
          nonmembership_from(Poly::one(f.nvars() + 1), extended, gb_ext, std::move(division))};
}

}  // namespace

RemainderCert gen_remainder(const Poly& f, const PolyList& divisors) {
  DivisionResult d = divide(f, divisors);
  return {f.nvars(), f, divisors, std::move(d.quotients), std::move(d.remainder)};
}

std::variant<MembershipCert, NotAMember> gen_membership(const Poly& f, const PolyList& generators,
                                                        const ProverOptions& options) {
  require_arity(f.nvars(), generators);
  if (auto row = unit_row(f, generators)) return membership_from(f, generators, std::move(*row));
  GroebnerOutput gb = buchberger(f.nvars(), generators, options.buchberger);
  Lifted lifted = lift_through(f, gb, generators.size());
  if (lifted.division.remainder.is_zero()) {
    return membership_from(f, generators, std::move(lifted.cofactors));
  }
  return NotAMember{nonmembership_from(f, generators, gb, std::move(lifted.division))};
}

std::variant<NonMembershipCert, IsAMember> gen_nonmembership(const Poly& f,
                                                             const PolyList& generators,
                                                             const ProverOptions& options) {
  auto r = gen_membership(f, generators, options);
  if (auto* member = std::get_if<MembershipCert>(&r)) return IsAMember{std::move(*member)};
  return std::move(std::get<NotAMember>(r).witness);
}

std::variant<IdealEqCert, NotEqual> gen_ideal_eq(std::size_t nvars, const PolyList& left,
                                                 const PolyList& right,
                                                 const ProverOptions& options) {
  require_arity(nvars, left);
  require_arity(nvars, right);

  IdealEqCert cert{nvars, left, right, {}, {}};

  // Each side's basis is only computed once some generator of the other
  // side is not literally present in it.
  std::optional<GroebnerOutput> gb_right;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (auto row = unit_row(left[i], right)) {
      cert.left_in_right.push_back(std::move(*row));
      continue;
    }
    if (!gb_right) gb_right = buchberger(nvars, right, options.buchberger);
    Lifted l = lift_through(left[i], *gb_right, right.size());
    if (!l.division.remainder.is_zero()) {
      return NotEqual{Side::Left, i, nonmembership_from(left[i], right, *gb_right, std::move(l.division))};
    }
    cert.left_in_right.push_back(std::move(l.cofactors));
  }

  std::optional<GroebnerOutput> gb_left;
  for (std::size_t j = 0; j < right.size(); ++j) {
    if (auto row = unit_row(right[j], left)) {
      cert.right_in_left.push_back(std::move(*row));
      continue;
    }
    if (!gb_left) gb_left = buchberger(nvars, left, options.buchberger);
    Lifted l = lift_through(right[j], *gb_left, left.size());
    if (!l.division.remainder.is_zero()) {
      return NotEqual{Side::Right, j, nonmembership_from(right[j], left, *gb_left, std::move(l.division))};
    }
    cert.right_in_left.push_back(std::move(l.cofactors));
  }
  return cert;
}

GroebnerCert gen_groebner_cert(std::size_t nvars, const PolyList& generators,
                               const ProverOptions& options) {
  require_arity(nvars, generators);
  return groebner_cert_from(nvars, generators, buchberger(nvars, generators, options.buchberger));
}

NormalFormCert gen_normal_form(const Poly& f, const PolyList& generators,
                               const ProverOptions& options) {
  require_arity(f.nvars(), generators);
  GroebnerOutput gb = buchberger(f.nvars(), generators, options.buchberger);
  DivisionResult d = divide(f, gb.basis);
  return {f.nvars(),
          f,
          generators,
          groebner_cert_from(f.nvars(), generators, gb),
          std::move(d.quotients),
          std::move(d.remainder)};
}

std::variant<RadicalMemberCert, NotInRadical> gen_radical_member(const Poly& f,
                                                                 const PolyList& generators,
                                                                 const ProverOptions& options) {
  require_arity(f.nvars(), generators);
  if (options.max_exp == 0) throw Error(Errc::InvalidConfig, "max_exp must be at least 1");
  if (auto row = unit_row(f, generators)) {
    return RadicalMemberCert{f.nvars(), f, generators, 1,
                             membership_from(f, generators, std::move(*row))};
  }

  PolyList extended = rabinowitsch_extension(f, generators);
  GroebnerOutput gb_ext = buchberger(f.nvars() + 1, extended, options.buchberger);
  DivisionResult unit = divide(Poly::one(f.nvars() + 1), gb_ext.basis);
  if (!unit.remainder.is_zero()) {
    return NotInRadical{radical_nonmember_from(f, generators, extended, gb_ext, std::move(unit))};
  }

  GroebnerOutput gb = buchberger(f.nvars(), generators, options.buchberger);
  Poly power = f;
  for (unsigned n = 1; n <= options.max_exp; ++n) {
    if (n > 1) power *= f;
    Lifted l = lift_through(power, gb, generators.size());
    if (l.division.remainder.is_zero()) {
      return RadicalMemberCert{f.nvars(), f, generators, n,
                               membership_from(power, generators, std::move(l.cofactors))};
    }
  }
  throw Error(Errc::BudgetExceeded, "f is in the radical but no exponent n <= " +
                                        std::to_string(options.max_exp) + " was found");
}

std::variant<RadicalNonMemberCert, InRadical> gen_radical_nonmember(
    const Poly& f, const PolyList& generators, const ProverOptions& options) {
  require_arity(f.nvars(), generators);
  PolyList extended = rabinowitsch_extension(f, generators);
  GroebnerOutput gb_ext = buchberger(f.nvars() + 1, extended, options.buchberger);
  DivisionResult unit = divide(Poly::one(f.nvars() + 1), gb_ext.basis);
  if (unit.remainder.is_zero()) return InRadical{};
  return radical_nonmember_from(f, generators, extended, gb_ext, std::move(unit));
}

}  // namespace gbcert
