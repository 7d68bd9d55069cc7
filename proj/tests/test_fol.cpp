#include <numeric>
#include <random>

#include "doctest.h"
#include "fgring/errors.hpp"
#include "fgring/fol.hpp"
#include "fgring/presentation.hpp"

using namespace fgring;
using namespace fgring::fol;
using Index = FiniteRingTable::Index;

namespace {

const char* kJacText = "(forall u (exists v (exists w (and (= (* (- 1 (* x u)) v) (+ 1 w)) (= w 0)))))";

FormulaPtr jac_of_zero() { return emit_jac(eq(var("w"), constant(0)), "w"); }

FiniteRingTable table_of(const std::string& text, std::size_t cap = 64) {
  return FiniteRingTable::enumerate(parse_presentation(text), cap);
}

std::set<Index> nilpotents_by_powers(const FiniteRingTable& t) {
  std::set<Index> out;
  for (std::size_t a = 0; a < t.size(); ++a) {
    Index p = static_cast<Index>(a);
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (p == t.zero()) {
        out.insert(static_cast<Index>(a));
        break;
      }
      p = t.mul(p, static_cast<Index>(a));
    }
  }
  return out;
}

std::set<Index> first_components(const std::vector<std::vector<Index>>& tuples) {
  std::set<Index> out;
  for (const auto& t : tuples) out.insert(t.at(0));
  return out;
}

// Ideals of a finite ring: sums of principal ideals, closed to a fixpoint.
std::set<std::set<Index>> all_ideals(const FiniteRingTable& t) {
  std::set<std::set<Index>> ideals;
  for (std::size_t a = 0; a < t.size(); ++a) {
    std::set<Index> principal;
    for (std::size_t r = 0; r < t.size(); ++r) principal.insert(t.mul(static_cast<Index>(a), static_cast<Index>(r)));
    ideals.insert(principal);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::set<Index>> current(ideals.begin(), ideals.end());
    for (const auto& i : current)
      for (const auto& j : current) {
        std::set<Index> sum;
        for (Index a : i)
          for (Index b : j) sum.insert(t.add(a, b));
        grew = ideals.insert(sum).second || grew;
      }
  }
  return ideals;
}

std::set<std::set<Index>> maximal_ideals(const FiniteRingTable& t) {
  auto ideals = all_ideals(t);
  std::set<std::set<Index>> out;
  for (const auto& m : ideals) {
    if (m.size() == t.size()) continue;
    bool maximal = true;
    for (const auto& j : ideals)
      if (j.size() > m.size() && j.size() < t.size() && std::includes(j.begin(), j.end(), m.begin(), m.end()))
        maximal = false;
    if (maximal) out.insert(m);
  }
  return out;
}

FormulaPtr random_formula(std::mt19937& rng, int depth, std::vector<std::string>& scope) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 6);
  auto random_term = [&]() -> TermPtr {
    std::uniform_int_distribution<std::size_t> v(0, scope.size() - 1);
    std::uniform_int_distribution<int> c(-2, 3);
    switch (rng() % 4) {
      case 0: return var(scope[v(rng)]);
      case 1: return constant(c(rng));
      case 2: return add({var(scope[v(rng)]), constant(c(rng))});
      default: return mul({var(scope[v(rng)]), var(scope[v(rng)])});
    }
  };
  switch (pick(rng)) {
    case 0:
    case 1: return eq(random_term(), random_term());
    case 2: return negation(random_formula(rng, depth - 1, scope));
    case 3: return conj({random_formula(rng, depth - 1, scope), random_formula(rng, depth - 1, scope)});
    case 4: return disj({random_formula(rng, depth - 1, scope), random_formula(rng, depth - 1, scope)});
    default: {
      std::string name = "q" + std::to_string(scope.size());
      scope.push_back(name);
      FormulaPtr body = random_formula(rng, depth - 1, scope);
      scope.pop_back();
      return pick(rng) % 2 ? forall(name, body) : exists(name, body);
    }
  }
}

}  // namespace

TEST_CASE("s-expression round trip") {
  FormulaPtr j = jac_of_zero();
  CHECK(to_sexpr(j) == kJacText);
  CHECK(to_sexpr(parse_formula(kJacText)) == kJacText);
  const char* samples[] = {
      "true",
      "(not (= x -3))",
      "(iff (implies (= x 0) false) (or (= (^ x 3) (- x)) (= 0 1)))",
      "(exists a (forall b (= (* a b 2) (+ a b (- a b)))))",
  };
  for (const char* s : samples) CHECK(to_sexpr(parse_formula(s)) == s);
  CHECK(to_sexpr(parse_term("(- (^ x 2) x)")) == "(- (^ x 2) x)");
  CHECK_THROWS_AS(parse_formula("(and (= x 0)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(= x)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(forall and (= x 0))"), ParseError);
  CHECK_THROWS_AS(parse_formula("(= x 0) junk"), ParseError);
  try {
    parse_formula("(and\n  (= x 0)\n  (bogus))");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("scoping and substitution") {
  FormulaPtr j = jac_of_zero();
  CHECK(free_variables(j) == std::set<std::string>{"x"});
  FormulaPtr nested = emit_jac(j, "x");
  CHECK(well_scoped(nested, {"x"}));
  CHECK(free_variables(nested) == std::set<std::string>{"x"});

  // free(emit_jac(φ)) = free(φ) - designated + out
  FormulaPtr phi = eq(mul({var("w"), var("a")}), var("u"));
  FormulaPtr out = emit_jac(phi, "w");
  CHECK(free_variables(out) == std::set<std::string>{"a", "u", "x"});
  CHECK(to_sexpr(out) ==
        "(forall u1 (exists v (exists w (and (= (* (- 1 (* x u1)) v) (+ 1 w)) (= (* w a) u)))))");

  FormulaPtr f = parse_formula("(exists y (= x y))");
  CHECK(to_sexpr(substitute(f, "x", var("y"))) == "(exists y1 (= y y1))");
  CHECK(to_sexpr(substitute(f, "y", var("z"))) == "(exists y (= x y))");

  for (unsigned n = 0; n <= 8; ++n) {
    for (auto k : {Kronecker::Gamma, Kronecker::Jac, Kronecker::Pi, Kronecker::Mu, Kronecker::PrimeIdeal,
                   Kronecker::PiCirc}) {
      Emitted e = emit_kronecker(n, k);
      CHECK(well_scoped(e.formula, e.slots));
      CHECK(to_sexpr(parse_formula(to_sexpr(e.formula))) == to_sexpr(e.formula));
    }
  }
}

TEST_CASE("Kronecker formulas") {
  Emitted g0 = emit_kronecker(0, Kronecker::Gamma);
  CHECK(to_sexpr(g0.formula) == "(= x 0)");
  Emitted g2 = emit_kronecker(2, Kronecker::Gamma);
  CHECK(to_sexpr(g2.formula) == "(exists z1 (exists z2 (= x (+ (* y1 z1) (* y2 z2)))))");
  CHECK(g2.slots == std::vector<std::string>{"x", "y1", "y2"});

  Emitted pi0 = emit_kronecker(0, Kronecker::Pi);
  CHECK(pi0.slots.size() == 1);
  Emitted pi3 = emit_kronecker(3, Kronecker::Pi);
  CHECK(pi3.slots.size() == 4);
  CHECK(emit_kronecker(0, Kronecker::PrimeIdeal).slots == std::vector<std::string>{"x", "y1"});
  CHECK(to_sexpr(emit_kronecker(0, Kronecker::Jac).formula) == kJacText);

  for (unsigned n : {0u, 1u, 4u}) {
    Emitted circ = emit_kronecker(n, Kronecker::PiCirc);
    REQUIRE(circ.formula->kind == Formula::Kind::And);
    REQUIRE(circ.formula->args.size() == 2);
    CHECK(to_sexpr(circ.formula->args[0]) == to_sexpr(emit_kronecker(n, Kronecker::Pi).formula));
    REQUIRE(circ.formula->args[1]->kind == Formula::Kind::Not);
    CHECK(to_sexpr(circ.formula->args[1]->args[0]) == to_sexpr(emit_kronecker(n, Kronecker::Mu).formula));
  }
  CHECK(kronecker_from_name("pi-circ") == Kronecker::PiCirc);
  CHECK_THROWS_AS(kronecker_from_name("sigma"), std::invalid_argument);
}

TEST_CASE("morphism formula") {
  CHECK(to_sexpr(emit_morphism_formula(parse_presentation("ring Z[x] / (x^2 - x)")).formula) ==
        "(= (- (^ x 2) x) 0)");
  Emitted z = emit_morphism_formula(parse_presentation("ring Z"));
  CHECK(to_sexpr(z.formula) == "true");
  CHECK(z.slots.empty());
  Emitted two = emit_morphism_formula(parse_presentation("ring Z[x,y] / (x*y, 2*x)"));
  CHECK(to_sexpr(two.formula) == "(and (= (* x y) 0) (= (* 2 x) 0))");
  CHECK(two.slots == std::vector<std::string>{"x", "y"});
  CHECK(to_sexpr(from_polynomial(parse_polynomial("-3*x^2*y + 2*y - 1", parse_presentation("ring Z[x,y]").ctx))) ==
        "(- (+ (- (* 3 (^ x 2) y)) (* 2 y)) 1)");

  // The formula holds exactly at tuples satisfying the relations.
  auto t = table_of("ring Z / (6)");
  auto idem = defined_set(emit_morphism_formula(parse_presentation("ring Z[x] / (x^2 - x)")).formula, t, {"x"});
  CHECK(idem.size() == 4);  // 0, 1, 3, 4 in Z/6
}

TEST_CASE("finite ring enumeration") {
  auto z6 = table_of("ring Z / (6)");
  CHECK(z6.size() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      CHECK(z6.add(z6.from_integer(a), z6.from_integer(b)) == z6.from_integer((a + b) % 6));
      CHECK(z6.mul(z6.from_integer(a), z6.from_integer(b)) == z6.from_integer((a * b) % 6));
    }
  CHECK(z6.from_integer(-1) == z6.from_integer(5));

  auto f2x = table_of("ring Z[x] / (2, x^3)");
  CHECK(f2x.size() == 8);
  CHECK(nilpotents_by_powers(f2x).size() == 4);

  CHECK_THROWS_AS(table_of("ring Z[x] / (x)"), ResourceCapExceeded);
  CHECK_THROWS_AS(table_of("ring Z[x] / (16, x^2)", 64), ResourceCapExceeded);
  CHECK(table_of("ring Z / (1)").size() == 1);
  CHECK(table_of("ring Z[x,y] / (3, x^2, y^2, x*y)").size() == 27);
}

TEST_CASE("evaluation") {
  auto z6 = table_of("ring Z / (6)");
  CHECK(eval(parse_formula("(= x 0)"), z6, {{"x", z6.zero()}}));
  CHECK_FALSE(eval(parse_formula("(= x 0)"), z6, {{"x", z6.one()}}));
  CHECK_THROWS_AS(eval(parse_formula("(= x 0)"), z6), std::invalid_argument);
  CHECK(eval(parse_formula("(exists x (= (* 2 x) 4))"), z6));
  CHECK_FALSE(eval(parse_formula("(forall x (exists y (= (* x y) 1)))"), z6));
  CHECK(defined_set(parse_formula("(= x x)"), z6, {"x"}).size() == 6);

  auto z12 = table_of("ring Z / (12)");
  FormulaPtr j = jac_of_zero();
  CHECK(eval(j, z12, {{"x", z12.from_integer(6)}}));
  CHECK_FALSE(eval(j, z12, {{"x", z12.from_integer(2)}}));
  CHECK(first_components(defined_set(j, z12, {"x"})) == std::set<Index>{z12.from_integer(0), z12.from_integer(6)});

  // Partially bound parameters: γ_1(x, 4) in Z/12 is the ideal (4).
  auto ideal4 = defined_set(emit_kronecker(1, Kronecker::Gamma).formula, z12, {"x"}, {{"y1", z12.from_integer(4)}});
  CHECK(first_components(ideal4) ==
        std::set<Index>{z12.from_integer(0), z12.from_integer(4), z12.from_integer(8)});
}

TEST_CASE("Jac(w = 0) defines the nilpotents") {
  FormulaPtr j = jac_of_zero();
  for (int n = 2; n <= 30; ++n) {
    auto t = table_of("ring Z / (" + std::to_string(n) + ")");
    // Independent oracle: a is nilpotent mod n iff the radical of n divides a.
    int rad = 1;
    for (int p = 2, m = n; p <= m; ++p)
      if (m % p == 0) {
        rad *= p;
        while (m % p == 0) m /= p;
      }
    std::set<Index> expected;
    for (int a = 0; a < n; a += rad) expected.insert(t.from_integer(a));
    CHECK_MESSAGE(first_components(defined_set(j, t, {"x"})) == expected, "n = " << n);
  }
  for (const char* text : {"ring Z[x] / (2, x^3)", "ring Z[x,y] / (2, x^2, y^2)", "ring Z[x] / (4, x^2 + 1)",
                           "ring Z[x] / (3, x^3 - x)"}) {
    auto t = table_of(text);
    CHECK_MESSAGE(first_components(defined_set(j, t, {"x"})) == nilpotents_by_powers(t), text);
  }
}

TEST_CASE("Pi_0 over mu_0 parameters gives the maximal ideals") {
  FormulaPtr mu = emit_kronecker(0, Kronecker::Mu).formula;
  FormulaPtr prime = emit_kronecker(0, Kronecker::PrimeIdeal).formula;
  FormulaPtr pi = emit_kronecker(0, Kronecker::Pi).formula;
  for (const char* text : {"ring Z / (6)", "ring Z / (12)", "ring Z[x] / (2, x^2 + x + 1)", "ring Z[x] / (2, x^2)",
                           "ring Z[x] / (2, x^2 + x)", "ring Z / (8)", "ring Z[x] / (3, x^2)"}) {
    auto t = table_of(text);
    std::set<std::set<Index>> family, primes;
    for (std::size_t a = 0; a < t.size(); ++a) {
      Assignment param{{"y1", static_cast<Index>(a)}};
      auto members = first_components(defined_set(prime, t, {"x"}, param));
      // A unit parameter yields the improper ideal, which the oracle excludes.
      if (members.size() == t.size()) continue;
      if (eval(mu, t, param)) family.insert(members);
      if (eval(pi, t, param)) primes.insert(members);
    }
    CHECK_MESSAGE(family == maximal_ideals(t), text);
    // Finite rings are zero-dimensional: every prime is maximal.
    CHECK_MESSAGE(primes == family, text);
  }
  // Field with four elements: the zero ideal.
  auto f4 = table_of("ring Z[x] / (2, x^2 + x + 1)");
  auto zero_ideal = first_components(defined_set(prime, f4, {"x"}, {{"y1", f4.zero()}}));
  CHECK(eval(mu, f4, {{"y1", f4.zero()}}));
  CHECK(zero_ideal == std::set<Index>{f4.zero()});
  CHECK_FALSE(eval(emit_kronecker(0, Kronecker::PiCirc).formula, f4, {{"y1", f4.zero()}}));
}

TEST_CASE("evaluator respects logical equivalences") {
  std::mt19937 rng(20240611);
  auto t = table_of("ring Z / (6)");
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> scope{"a", "b"};
    FormulaPtr phi = random_formula(rng, 3, scope);
    FormulaPtr psi = random_formula(rng, 3, scope);
    for (int a = 0; a < 6; a += 5)
      for (int b = 0; b < 6; b += 2) {
        Assignment env{{"a", t.from_integer(a)}, {"b", t.from_integer(b)}};
        bool p = eval(phi, t, env), q = eval(psi, t, env);
        CHECK(eval(negation(negation(phi)), t, env) == p);
        CHECK(eval(negation(conj({phi, psi})), t, env) == eval(disj({negation(phi), negation(psi)}), t, env));
        CHECK(eval(negation(disj({phi, psi})), t, env) == eval(conj({negation(phi), negation(psi)}), t, env));
        CHECK(eval(implies(phi, psi), t, env) == (!p || q));
        CHECK(eval(iff(phi, psi), t, env) == (p == q));
        Assignment only_b{{"b", env["b"]}};
        CHECK(eval(forall("a", phi), t, only_b) == eval(negation(exists("a", negation(phi))), t, only_b));
        CHECK(eval(exists("a", phi), t, only_b) == eval(negation(forall("a", negation(phi))), t, only_b));
      }
  }
}
