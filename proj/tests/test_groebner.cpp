#include "doctest.h"
#include "fgring/errors.hpp"
#include "fgring/groebner.hpp"

using namespace fgring;

namespace {

ContextPtr ctx(std::vector<std::string> names) { return Context::make(std::move(names)); }

Polynomial P(const char* s, const ContextPtr& c) { return parse_polynomial(s, c); }

IdealPresentation I(const ContextPtr& c, std::vector<const char*> gens, Domain d = Domain::integers()) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(P(g, c));
  return IdealPresentation(c, ps, d);
}

std::vector<std::string> texts(const IdealPresentation& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(to_string(g));
  return out;
}

}  // namespace

TEST_CASE("normal form over Z uses Euclidean reduction") {
  auto c = ctx({"x"});
  auto gb = strong_groebner(I(c, {"2*x"}));
  CHECK(normal_form(P("3*x", c), gb) == P("x", c));
  CHECK(normal_form(P("-x", c), gb) == P("x", c));
  CHECK(normal_form(P("4*x + 1", c), gb) == P("1", c));
}

TEST_CASE("strong basis over Z contains gcd combinations") {
  auto c = ctx({"x"});
  auto gb = strong_groebner(I(c, {"4*x", "6*x"}));
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == P("2*x", c));
  auto gb2 = strong_groebner(I(c, {"2*x - 1", "3"}));
  CHECK_FALSE(gb2.is_unit());
  CHECK(ideal_member(P("x - 2", c), gb2));
  CHECK(strong_groebner(I(c, {"2*x - 1", "x^2"})).is_unit());
}

TEST_CASE("strong basis leading terms divide every ideal element's leading term") {
  auto c = ctx({"x", "y"});
  auto ideal = I(c, {"2*x*y - y", "3*x^2 + 1", "6*y"});
  auto gb = strong_groebner(ideal);
  std::vector<Polynomial> samples;
  for (const auto& a : ideal.generators())
    for (const auto& m : {P("1", c), P("x", c), P("y + 2", c), P("5*x*y - 3", c)}) samples.push_back(a * m);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    Polynomial f = samples[i] + samples[i + 1].scaled(i % 2 ? 7 : -2);
    if (f.is_zero()) continue;
    CHECK(ideal_member(f, gb));
    bool divisible = false;
    for (const auto& g : gb.elements) {
      Polynomial fl = f.with_order(gb.order);
      if (g.leading_monomial().divides(fl.leading_monomial()) &&
          mpz_divisible_p(fl.leading_coeff().get_mpz_t(), g.leading_coeff().get_mpz_t()))
        divisible = true;
    }
    CHECK(divisible);
  }
}

TEST_CASE("normal forms are canonical modulo the ideal") {
  auto c = ctx({"x", "y"});
  auto ideal = I(c, {"x^2 - 2*y", "4*y^2", "2*x*y + 6"});
  auto gb = strong_groebner(ideal);
  Polynomial f = P("x^3*y + 7*x - 5", c);
  Polynomial shift = ideal.generators()[0] * P("x*y - 1", c) + ideal.generators()[2] * P("3*x", c);
  CHECK(normal_form(f, gb) == normal_form(f + shift, gb));
}

TEST_CASE("elimination") {
  auto c = ctx({"x", "y"});
  auto e = eliminate(I(c, {"2*x", "2*y", "x - y"}), {0});
  CHECK(texts(e) == std::vector<std::string>{"2*x"});
  auto e2 = eliminate(I(c, {"x - y^2", "y - 2"}), {0});
  CHECK(texts(e2) == std::vector<std::string>{"x - 4"});
}

TEST_CASE("ideal operations") {
  auto c = ctx({"x", "y"});
  auto meet = ideal_ops(I(c, {"x"}), I(c, {"y"}), IdealOp::Intersect);
  CHECK(texts(meet) == std::vector<std::string>{"x*y"});
  auto q = ideal_ops(I(c, {"x*y"}), I(c, {"y"}), IdealOp::Quotient);
  CHECK(texts(q) == std::vector<std::string>{"x"});
  auto unit = ideal_ops(I(c, {"x"}), I(c, {}), IdealOp::Quotient);
  CHECK(strong_groebner(unit).is_unit());
  auto sat = ideal_ops(I(c, {"x^3*y", "x^2*y^2"}), I(c, {"x"}), IdealOp::Saturate);
  CHECK(texts(sat) == std::vector<std::string>{"y"});
  auto zsat = ideal_ops(I(c, {"4*x", "2*y"}), I(c, {"2"}), IdealOp::Saturate);
  CHECK(ideal_equal(zsat, I(c, {"x", "y"})));
  auto zq = ideal_ops(I(c, {"4*x"}), I(c, {"2"}), IdealOp::Quotient);
  CHECK(texts(zq) == std::vector<std::string>{"2*x"});
  auto prod = ideal_ops(I(c, {"x", "2"}), I(c, {"y"}), IdealOp::Product);
  CHECK(ideal_equal(prod, I(c, {"x*y", "2*y"})));
}

TEST_CASE("contraction to Z") {
  auto c = ctx({"x"});
  CHECK(contract_integers(I(c, {"x^2 - 1", "2*x"})) == 2);
  CHECK(contract_integers(I(c, {"x^2 + 1", "3"})) == 3);
  CHECK(contract_integers(I(c, {"x^2"})) == 0);
  CHECK(contract_integers(I(c, {"2*x - 1", "x"})) == 1);
}

TEST_CASE("membership and radical membership") {
  auto c = ctx({"x", "y"});
  auto ideal = I(c, {"x^2", "y^3"});
  CHECK(ideal_member(P("x^2*y - 3*y^3", c), ideal));
  CHECK_FALSE(ideal_member(P("x*y^2", c), ideal));
  CHECK_FALSE(ideal_member(P("x + y", c), ideal));
  CHECK(radical_member(P("x + y", c), ideal));
  CHECK_FALSE(radical_member(P("x + 1", c), ideal));
  auto z = I(c, {"4"});
  CHECK(radical_member(P("2", c), z));
  CHECK_FALSE(ideal_member(P("2", c), z));
}

TEST_CASE("fields") {
  auto c = ctx({"x", "y"});
  CHECK(dimension_over_field(I(c, {"x*y"}, Domain::rationals())) == 1);
  CHECK(dimension_over_field(I(c, {"x^2 - 1", "y"}, Domain::rationals())) == 0);
  CHECK(dimension_over_field(I(c, {"x", "x - 1"}, Domain::rationals())) == -1);
  CHECK(dimension_over_field(I(c, {}, Domain::rationals())) == 2);
  auto gb = strong_groebner(I(c, {"x^2 + 1", "y - x"}, Domain::prime_field(3)));
  CHECK(quotient_dimension(gb) == 2);
  auto gbq = strong_groebner(I(c, {"2*x - 1"}, Domain::rationals()));
  CHECK(ideal_member(P("4*x - 2", c), gbq));
  // 2 is a unit over Q but not over Z.
  CHECK(strong_groebner(I(c, {"2"}, Domain::rationals())).is_unit());
  CHECK_FALSE(strong_groebner(I(c, {"2"})).is_unit());
  // Modulo 2, x^2 + 1 = (x + 1)^2.
  CHECK(radical_member(P("x + 1", c), I(c, {"x^2 + 1"}, Domain::prime_field(2))));
}

TEST_CASE("reduced field bases are unique") {
  auto c = ctx({"x", "y", "z"});
  auto a = strong_groebner(I(c, {"x + y + z", "x*y + y*z + z*x", "x*y*z - 1"}, Domain::rationals()));
  auto b = strong_groebner(I(c, {"x*y*z - 1", "x*y + y*z + z*x + x + y + z", "x + y + z"}, Domain::rationals()));
  REQUIRE(a.elements.size() == b.elements.size());
  for (std::size_t k = 0; k < a.elements.size(); ++k) CHECK(a.elements[k] == b.elements[k]);
  CHECK(quotient_dimension(a) == 6);
}

TEST_CASE("resource caps") {
  auto c = ctx({"x", "y", "z"});
  GroebnerConfig tight;
  tight.max_reduction_steps = 5;
  CHECK_THROWS_AS(strong_groebner(I(c, {"x^3 + y^2*z - 2", "x*y*z - 3*y", "z^4 - x^2*y + 1"}),
                                  MonomialOrder::grevlex(), tight),
                  ResourceCapExceeded);
}
