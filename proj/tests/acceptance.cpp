// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gbcert/checker.hpp"
#include "gbcert/division.hpp"
#include "gbcert/errors.hpp"
#include "gbcert/prover.hpp"
#include "gbcert/runner.hpp"
#include "gbcert/spoly.hpp"
#include "gbcert/wire.hpp"
#include "support.hpp"
#include "tamper.hpp"

using namespace gbcert;
using gbcert::test::P;
using gbcert::test::Ps;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (problems.size() < 10) problems.push_back(what);
  }
};

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

// ---------------------------------------------------------------------------
// Worked examples

struct Example {
  std::string name;
  std::function<Certificate(Outcome&)> build;
};

// Returns the certificate after checking it, and after checking that it
// survives the wire format unchanged.
Certificate certified(Outcome& o, const std::string& name, Certificate cert) {
  CheckReport r = check_certificate(cert);
  o.expect(r.accepted, name + ": checker rejected the certificate");
  Certificate back = decode_certificate(parse_json(dump_json(encode_certificate(cert))));
  o.expect(back == cert, name + ": certificate changed across the wire format");
  return cert;
}

std::vector<Example> examples() {
  return {
      {"ex1 ideal equality",
       [](Outcome& o) {
         auto r = gen_ideal_eq(2, Ps(2, {"x0 + x1^2", "x1^2"}), Ps(2, {"x0", "x1^2"}));
         o.expect(std::holds_alternative<IdealEqCert>(r), "ex1: ideals reported unequal");
         const auto& c = std::get<IdealEqCert>(r);
         o.expect(c.left_in_right == PolyMatrix{Ps(2, {"1", "1"}), Ps(2, {"0", "1"})},
                  "ex1: unexpected left_in_right");
         o.expect(c.right_in_left == PolyMatrix{Ps(2, {"1", "-1"}), Ps(2, {"0", "1"})},
                  "ex1: unexpected right_in_left");
         return certified(o, "ex1", c);
       }},
      {"ex2 remainder",
       [](Outcome& o) {
         RemainderCert c = gen_remainder(P(2, "x0^2*x1 + x0*x1^2"), Ps(2, {"x0*x1 - 1"}));
         o.expect(c.remainder == P(2, "x0 + x1"), "ex2: remainder is " + str(c.remainder));
         o.expect(c.quotients == Ps(2, {"x0 + x1"}), "ex2: unexpected quotient");
         return certified(o, "ex2", c);
       }},
      {"ex3 groebner basis",
       [](Outcome& o) {
         GroebnerCert c = gen_groebner_cert(2, Ps(2, {"x0 + x1", "x0*x1 - 1"}));
         o.expect(c.basis == Ps(2, {"x0 + x1", "x1^2 + 1"}), "ex3: unexpected basis");
         return certified(o, "ex3", c);
       }},
      {"ex4 membership",
       [](Outcome& o) {
         auto r = gen_membership(P(2, "1"), Ps(2, {"x0", "1 - x1*x0"}));
         o.expect(std::holds_alternative<MembershipCert>(r), "ex4: 1 reported not in the ideal");
         return certified(o, "ex4", std::get<MembershipCert>(r));
       }},
      {"ex5 non-membership",
       [](Outcome& o) {
         auto r = gen_nonmembership(P(2, "x0 + x1"), Ps(2, {"x0 + x1^2", "x1^2"}));
         o.expect(std::holds_alternative<NonMembershipCert>(r), "ex5: reported as a member");
         const auto& c = std::get<NonMembershipCert>(r);
         o.expect(c.remainder == P(2, "x1"), "ex5: remainder is " + str(c.remainder));
         o.expect(c.groebner.basis == Ps(2, {"x0", "x1^2"}), "ex5: unexpected basis");
         return certified(o, "ex5", c);
       }},
      {"ex6 radical membership",
       [](Outcome& o) {
         auto r = gen_radical_member(P(2, "x0^2 - x1^2"), Ps(2, {"x0^2", "x1^2"}));
         o.expect(std::holds_alternative<RadicalMemberCert>(r), "ex6: reported not in radical");
         const auto& c = std::get<RadicalMemberCert>(r);
         o.expect(c.exponent == 1, "ex6: exponent " + std::to_string(c.exponent));
         o.expect(c.membership.cofactors == Ps(2, {"1", "-1"}), "ex6: unexpected cofactors");
         return certified(o, "ex6", c);
       }},
      {"ex7 radical non-membership",
       [](Outcome& o) {
         auto r = gen_radical_nonmember(P(2, "x0"), Ps(2, {"x0 + x1"}));
         o.expect(std::holds_alternative<RadicalNonMemberCert>(r), "ex7: reported in radical");
         const auto& c = std::get<RadicalNonMemberCert>(r);
         o.expect(c.extended.generators == Ps(3, {"x0 + x1", "1 - x0*x2"}),
                  "ex7: unexpected extension");
         o.expect(c.extended.groebner.basis == Ps(3, {"x0 + x1", "x1*x2 + 1"}),
                  "ex7: unexpected extended basis");
         o.expect(c.extended.remainder == P(3, "1"), "ex7: normal form of 1 is not 1");
         return certified(o, "ex7", c);
       }},
  };
}

Outcome worked_examples(std::vector<Certificate>& certs_out) {
  Outcome o;
  double slowest = 0;
  for (const auto& ex : examples()) {
    auto start = Clock::now();
    try {
      certs_out.push_back(ex.build(o));
    } catch (const std::exception& e) {
      o.expect(false, ex.name + ": threw " + e.what());
    }
    double t = seconds_since(start);
    slowest = std::max(slowest, t);
    o.expect(t < 1.0, ex.name + " took " + fmt_seconds(t));
  }
  o.summary = std::to_string(certs_out.size()) + "/7 examples certified, slowest " +
              fmt_seconds(slowest);
  return o;
}

// ---------------------------------------------------------------------------
// Random task suite

test::RandomPolySpec small_spec(std::size_t nvars) {
  test::RandomPolySpec s;
  s.nvars = nvars;
  // Dense generators (four or more terms in three variables) can make the
  // lex basis of the Rabinowitsch extension intractable for any Buchberger
  // variant, so generators stay sparse.
  s.max_terms = 3;
  s.max_degree = 3;
  s.max_exp = 3;
  s.max_num = 9;
  s.max_den = 3;
  return s;
}

GbTask random_task(std::mt19937_64& rng, TaskKind kind) {
  std::size_t nvars = 1 + rng() % 3;
  auto spec = small_spec(nvars);
  auto gens = [&] {
    PolyList out;
    for (std::size_t k = 1 + rng() % 3; k > 0; --k) out.push_back(test::random_poly(rng, spec));
    return out;
  };
  GbTask t;
  t.kind = kind;
  t.nvars = nvars;
  t.f = Poly(nvars);
  if (kind == TaskKind::IdealEquality) {
    t.left = gens();
    // Half the time the right side generates the same ideal.
    if (rng() % 2 == 0) {
      t.right = t.left;
      t.right.push_back(t.left[0] * test::random_poly(rng, spec) + t.left.back());
      std::reverse(t.right.begin(), t.right.end());
    } else {
      t.right = gens();
    }
    return t;
  }
  t.polys = gens();
  if (kind == TaskKind::GroebnerBasis) return t;
  t.f = test::random_poly(rng, spec);
  // Bias towards members so both verdicts occur.
  if (rng() % 2 == 0) {
    Poly combo(nvars);
    for (const auto& g : t.polys) combo += test::random_poly(rng, spec) * g;
    if (!combo.is_zero()) t.f = combo;
  }
  if (kind == TaskKind::RadicalMembership && rng() % 3 == 0) t.f = t.polys[0];
  return t;
}

struct RandomSuite {
  Outcome closure;
  Outcome buchberger;
};

RandomSuite random_tasks() {
  RandomSuite s;
  std::mt19937_64 rng(20240601);
  const TaskKind kinds[] = {TaskKind::Reduce,          TaskKind::GroebnerBasis,
                            TaskKind::NormalForm,      TaskKind::IdealMembership,
                            TaskKind::RadicalMembership, TaskKind::IdealEquality};
  std::map<std::string, int> verdicts;
  int bases = 0;
  auto start = Clock::now();
  for (int i = 0; i < 300; ++i) {
    GbTask task = random_task(rng, kinds[i % 6]);
    std::string label = "task " + std::to_string(i) + " (" + std::string(to_string(task.kind)) + ")";
    ResultEnvelope env = run_task(task, BackendConfig{});
    verdicts[std::string(to_string(env.status))]++;
    if (env.status == Status::Error) {
      s.closure.expect(false, label + ": " + env.message.value_or("error"));
      continue;
    }
    if (!env.certificate) {
      s.closure.expect(false, label + ": no certificate");
      continue;
    }
    s.closure.expect(check_certificate(*env.certificate).accepted, label + ": certificate rejected");
    s.closure.expect(!certificate_problem(task, env).has_value(), label + ": does not answer task");

    // Every generator list in the suite gets its basis checked directly.
    std::vector<const PolyList*> lists;
    if (task.kind == TaskKind::IdealEquality) {
      lists = {&task.left, &task.right};
    } else if (task.kind != TaskKind::Reduce) {
      lists = {&task.polys};
    }
    for (const PolyList* gens : lists) {
      GroebnerOutput gb = buchberger(task.nvars, *gens);
      ++bases;
      if (!gb.basis.empty()) {
        s.buchberger.expect(is_groebner_basis(gb.basis).holds, label + ": criterion fails");
      }
      for (const auto& g : *gens) {
        s.buchberger.expect(divide(g, gb.basis).remainder.is_zero(),
                            label + ": generator does not reduce to 0");
      }
    }
  }
  double elapsed = seconds_since(start);
  s.closure.expect(elapsed < 60.0, "took " + fmt_seconds(elapsed));
  std::string mix;
  for (const auto& [k, v] : verdicts) mix += (mix.empty() ? "" : ", ") + k + "=" + std::to_string(v);
  s.closure.summary = "300 tasks in " + fmt_seconds(elapsed) + " (" + mix + ")";
  s.buchberger.summary = std::to_string(bases) + " bases satisfy the criterion";
  return s;
}

// ---------------------------------------------------------------------------

Outcome tamper_suite(const std::vector<Certificate>& certs) {
  Outcome o;
  std::mt19937_64 rng(4242);
  int rejected = 0;
  int total = 0;
  for (const auto& cert : certs) {
    for (int k = 0; k < 20; ++k) {
      Certificate bad = test::mutate_one_coefficient(cert, rng);
      ++total;
      if (bad == cert) {
        o.expect(false, std::string(certificate_kind(cert)) + ": mutation was a no-op");
        continue;
      }
      if (!check_certificate(bad).accepted) {
        ++rejected;
      } else {
        o.expect(false, std::string(certificate_kind(cert)) + ": mutated certificate accepted");
      }
    }
  }
  o.expect(total == 140, "expected 140 mutations, made " + std::to_string(total));
  o.summary = std::to_string(rejected) + "/" + std::to_string(total) + " mutations rejected";
  return o;
}

Outcome division_invariants() {
  Outcome o;
  std::mt19937_64 rng(500);
  auto fspec = small_spec(3);
  fspec.max_terms = 5;
  fspec.max_degree = 4;
  fspec.max_exp = 4;
  fspec.allow_zero = true;
  auto bspec = small_spec(3);
  for (int i = 0; i < 500; ++i) {
    Poly f = test::random_poly(rng, fspec);
    PolyList divisors;
    for (std::size_t k = rng() % 4; k > 0; --k) divisors.push_back(test::random_poly(rng, bspec));
    DivisionResult d = divide(f, divisors);
    std::string label = "instance " + std::to_string(i);
    Poly rebuilt = d.remainder;
    for (std::size_t j = 0; j < divisors.size(); ++j) rebuilt += d.quotients[j] * divisors[j];
    o.expect(rebuilt == f, label + ": f != sum q_i b_i + r");
    for (const auto& t : d.remainder.terms()) {
      for (const auto& b : divisors) {
        o.expect(!b.multideg().divides(t.mono), label + ": remainder term is reducible");
      }
    }
    for (std::size_t j = 0; j < divisors.size(); ++j) {
      Poly prod = d.quotients[j] * divisors[j];
      if (prod.is_zero()) continue;
      o.expect(!f.is_zero() && lex_compare(prod.multideg(), f.multideg()) <= 0,
               label + ": multidegree bound violated");
    }
    o.expect(check_remainder(f, divisors, d.remainder, d.quotients).accepted,
             label + ": check_remainder rejects");
  }
  o.summary = "500 instances";
  return o;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome wire_round_trip() {
  Outcome o;
  std::string golden = read_file(std::string(GBCERT_TEST_DATA) + "/listing_1_1.json");
  while (!golden.empty() && golden.back() == '\n') golden.pop_back();
  Poly listing = P(4, "3/4*x1^2*x2 - 7*x3^5 + 2");
  o.expect(!golden.empty(), "golden file missing");
  o.expect(dump_json(serialize_poly(listing)) == golden, "serialization differs from golden file");
  try {
    o.expect(parse_poly(parse_json(golden), 4) == listing, "golden file parses differently");
  } catch (const std::exception& e) {
    o.expect(false, std::string("golden file: ") + e.what());
  }

  std::mt19937_64 rng(1000);
  test::RandomPolySpec spec;
  spec.nvars = 4;
  spec.max_terms = 6;
  spec.max_degree = 12;
  spec.max_exp = 6;
  spec.max_num = 1000000;
  spec.max_den = 1000;
  spec.allow_zero = true;
  for (int i = 0; i < 1000; ++i) {
    Poly p = test::random_poly(rng, spec);
    std::string text = dump_json(serialize_poly(p));
    Poly back = parse_poly(parse_json(text), 4);
    o.expect(back == p, "polynomial " + std::to_string(i) + " changed: " + text);
  }
  o.summary = "golden file byte-exact, 1000 random polynomials";
  return o;
}

// ---------------------------------------------------------------------------
// Brute-force membership: integer polynomials of degree <= 4 in at most two
// variables as dense coefficient vectors indexed by (a, b) with a + b <= 4.

constexpr int kMaxDeg = 4;

using Dense2 = std::vector<long>;

int slot(unsigned a, unsigned b) {
  // Triangular indexing over a + b <= kMaxDeg.
  int d = static_cast<int>(a + b);
  return d * (d + 1) / 2 + static_cast<int>(b);
}

constexpr int kSlots = (kMaxDeg + 1) * (kMaxDeg + 2) / 2;

Dense2 dense2(const Poly& p) {
  Dense2 out(kSlots, 0);
  for (const auto& t : p.terms()) {
    out[slot(t.mono.exponent(0), t.mono.exponent(1))] = t.coeff.num().get_si();
  }
  return out;
}

// All monomials of degree <= 2 in `nvars` (1 or 2) variables.
std::vector<std::pair<unsigned, unsigned>> cofactor_monomials(std::size_t nvars) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned a = 0; a <= 2; ++a) {
    for (unsigned b = 0; a + b <= 2; ++b) {
      if (nvars == 1 && b > 0) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

// Every c * g with c of degree <= 2 and coefficients in {-2..2}.
std::vector<Dense2> all_multiples(const Poly& g, std::size_t nvars) {
  auto monos = cofactor_monomials(nvars);
  Dense2 gd = dense2(g);
  // Shifted copies of g, one per cofactor monomial.
  std::vector<Dense2> shifted;
  for (auto [ma, mb] : monos) {
    Dense2 s(kSlots, 0);
    for (unsigned a = 0; a <= kMaxDeg; ++a) {
      for (unsigned b = 0; a + b <= kMaxDeg; ++b) {
        long c = gd[slot(a, b)];
        if (c != 0) s[slot(a + ma, b + mb)] += c;
      }
    }
    shifted.push_back(std::move(s));
  }
  std::vector<Dense2> out;
  std::vector<int> coeff(monos.size(), -2);
  while (true) {
    Dense2 v(kSlots, 0);
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (coeff[k] == 0) continue;
      for (int s = 0; s < kSlots; ++s) v[s] += coeff[k] * shifted[k][s];
    }
    out.push_back(std::move(v));
    std::size_t k = 0;
    while (k < coeff.size() && coeff[k] == 2) coeff[k++] = -2;
    if (k == coeff.size()) break;
    ++coeff[k];
  }
  return out;
}

// Whether f = c1*g1 (+ c2*g2) for cofactors in the search space, by meeting
// in the middle over the second generator.
bool brute_member(const Poly& f, const PolyList& gens, std::size_t nvars) {
  Dense2 fd = dense2(f);
  auto first = all_multiples(gens[0], nvars);
  if (gens.size() == 1) {
    for (const auto& v : first) {
      if (v == fd) return true;
    }
    return false;
  }
  std::map<Dense2, bool> table;
  for (auto& v : first) table.emplace(std::move(v), true);
  for (const auto& w : all_multiples(gens[1], nvars)) {
    Dense2 need(kSlots);
    for (int s = 0; s < kSlots; ++s) need[s] = fd[s] - w[s];
    if (table.count(need) != 0) return true;
  }
  return false;
}

Outcome brute_force_membership() {
  Outcome o;
  std::mt19937_64 rng(777);
  int instances = 0;
  int hits = 0;
  int engine_members = 0;
  for (int i = 0; i < 200; ++i) {
    std::size_t nvars = 1 + rng() % 2;
    test::RandomPolySpec gspec;
    gspec.nvars = nvars;
    gspec.max_terms = 3;
    gspec.max_degree = 2;
    gspec.max_exp = 2;
    gspec.max_num = 2;
    PolyList gens;
    for (std::size_t k = 1 + rng() % 2; k > 0; --k) gens.push_back(test::random_poly(rng, gspec));

    Poly f(nvars);
    if (i % 2 == 0) {
      f = test::random_poly(rng, gspec);
    } else {
      // A combination with small cofactors, kept only if its degree fits.
      for (int attempt = 0; attempt < 20; ++attempt) {
        Poly combo(nvars);
        for (const auto& g : gens) {
          test::RandomPolySpec cspec = gspec;
          cspec.max_degree = 2 - static_cast<unsigned>(g.multideg().total_degree());
          cspec.max_exp = cspec.max_degree;
          cspec.allow_zero = true;
          combo += test::random_poly(rng, cspec) * g;
        }
        bool fits = true;
        for (const auto& t : combo.terms()) fits = fits && t.mono.total_degree() <= 2;
        if (fits) {
          f = combo;
          break;
        }
      }
    }
    ++instances;
    bool brute = brute_member(f, gens, nvars);
    auto r = gen_membership(f, gens);
    bool engine = std::holds_alternative<MembershipCert>(r);
    if (brute) ++hits;
    if (engine) {
      ++engine_members;
      o.expect(check_membership(std::get<MembershipCert>(r)).accepted,
               "instance " + std::to_string(i) + ": membership certificate rejected");
    } else {
      o.expect(check_nonmembership(std::get<NotAMember>(r).witness).accepted,
               "instance " + std::to_string(i) + ": non-membership certificate rejected");
    }
    o.expect(!brute || engine, "instance " + std::to_string(i) + ": brute force found f = " +
                                   str(f) + " in the ideal but the engine did not");
  }
  o.expect(hits > 0, "the brute-force search never found a combination");
  o.summary = std::to_string(instances) + " instances, brute force found " + std::to_string(hits) +
              ", engine certified " + std::to_string(engine_members) + " members";
  return o;
}

void report(const std::string& name, const Outcome& o, bool& all) {
  std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.summary << '\n';
  for (const auto& p : o.problems) std::cout << "    " << p << '\n';
  std::cout.flush();
  all = all && o.pass;
}

template <typename F>
Outcome guarded(F&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    Outcome o;
    o.pass = false;
    o.summary = std::string("threw ") + e.what();
    return o;
  }
}

}  // namespace

int main() {
  bool all = true;
  std::vector<Certificate> example_certs;
  report("worked example suite", guarded([&] { return worked_examples(example_certs); }), all);

  RandomSuite suite;
  try {
    suite = random_tasks();
  } catch (const std::exception& e) {
    suite.closure.pass = suite.buchberger.pass = false;
    suite.closure.summary = suite.buchberger.summary = std::string("threw ") + e.what();
  }
  report("gen/check closure", suite.closure, all);
  report("tamper suite", guarded([&] { return tamper_suite(example_certs); }), all);
  report("division invariants", guarded(division_invariants), all);
  report("buchberger criterion closure", suite.buchberger, all);
  report("wire round-trip", guarded(wire_round_trip), all);
  report("brute-force membership oracle", guarded(brute_force_membership), all);
  return all ? 0 : 1;
}
