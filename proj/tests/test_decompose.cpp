#include "doctest.h"
#include "fgring/decompose.hpp"
#include "fgring/errors.hpp"

using namespace fgring;

namespace {

ContextPtr ctx(std::vector<std::string> names) { return Context::make(std::move(names)); }

IdealPresentation I(const ContextPtr& c, std::vector<const char*> gens, Domain d) {
  std::vector<Polynomial> ps;
  for (auto g : gens) ps.push_back(parse_polynomial(g, c));
  return IdealPresentation(c, ps, d);
}

std::vector<std::vector<std::string>> texts(const std::vector<FieldPrime>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : ps) {
    std::vector<std::string> g;
    for (const auto& e : p.ideal.generators()) g.push_back(to_string(e));
    out.push_back(g);
  }
  return out;
}

// Radical of the ideal equals the intersection of the primes, both ways.
void check_sound(const IdealPresentation& ideal, const std::vector<FieldPrime>& primes) {
  REQUIRE_FALSE(primes.empty());
  IdealPresentation meet = primes[0].ideal;
  for (std::size_t k = 1; k < primes.size(); ++k) meet = ideal_ops(meet, primes[k].ideal, IdealOp::Intersect);
  for (const auto& p : primes) CHECK(ideal_contains(p.ideal, ideal));
  CHECK(radical_contains(ideal, meet));
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i != j) CHECK_FALSE(ideal_contains(primes[j].ideal, primes[i].ideal));
}

}  // namespace

TEST_CASE("univariate splits over Q and F_p") {
  auto c = ctx({"x"});
  auto q = I(c, {"x^2 - x"}, Domain::rationals());
  auto ps = field_minimal_primes(q);
  CHECK(texts(ps) == std::vector<std::vector<std::string>>{{"x - 1"}, {"x"}});
  check_sound(q, ps);
  auto f3 = I(c, {"x^2 + 1"}, Domain::prime_field(3));
  CHECK(field_minimal_primes(f3).size() == 1);
  auto f5 = I(c, {"x^2 + 1"}, Domain::prime_field(5));
  CHECK(field_minimal_primes(f5).size() == 2);
  auto f2 = I(c, {"x^2 + 1"}, Domain::prime_field(2));
  CHECK(texts(field_minimal_primes(f2)) == std::vector<std::vector<std::string>>{{"x + 1"}});
}

TEST_CASE("monomial factors and coordinate axes") {
  auto c = ctx({"x", "y"});
  auto q = I(c, {"x*y"}, Domain::rationals());
  auto ps = field_minimal_primes(q);
  CHECK(texts(ps) == std::vector<std::vector<std::string>>{{"x"}, {"y"}});
  auto emb = I(c, {"x^2", "x*y"}, Domain::rationals());
  CHECK(texts(field_minimal_primes(emb)) == std::vector<std::vector<std::string>>{{"x"}});
}

TEST_CASE("zero-dimensional ideals") {
  auto c = ctx({"x", "y"});
  auto points = I(c, {"x^2 - 1", "y^2 - 1", "x*y - 1"}, Domain::rationals());
  auto ps = field_minimal_primes(points);
  CHECK(ps.size() == 2);
  check_sound(points, ps);
  // Needs a primitive element: Q(sqrt 2, sqrt 3) has degree 4.
  auto field = I(c, {"x^2 - 2", "y^2 - 3"}, Domain::rationals());
  auto fp = field_minimal_primes(field);
  CHECK(fp.size() == 1);
  CHECK(field_is_prime(field) == true);
  // Over Q(sqrt 2), y^2 - 2 splits.
  auto twice = I(c, {"x^2 - 2", "y^2 - 2"}, Domain::rationals());
  auto tp = field_minimal_primes(twice);
  CHECK(tp.size() == 2);
  check_sound(twice, tp);
  auto nonrad = I(c, {"x^2", "y - x"}, Domain::prime_field(7));
  CHECK(texts(field_minimal_primes(nonrad)) == std::vector<std::vector<std::string>>{{"y", "x"}});
}

TEST_CASE("hypersurfaces of degree one in a variable") {
  auto c = ctx({"x", "y", "z"});
  CHECK(field_is_prime(I(c, {"x*y - z^2 - 1"}, Domain::rationals())) == true);
  auto red = I(c, {"x*y + x*z^2 + y^2 + y*z^2"}, Domain::rationals());
  auto ps = field_minimal_primes(red);
  CHECK(ps.size() == 2);
  check_sound(red, ps);
}

TEST_CASE("dense cubic is refused") {
  auto c = ctx({"x", "y", "z"});
  auto cubic = I(c, {"x^3 + 2*y^3 + 3*z^3 + x*y*z + x^2*y + y^2*z + z^2*x + x + y + z + 1"}, Domain::rationals());
  CHECK_THROWS_AS(field_minimal_primes(cubic), DecompositionIncomplete);
  CHECK_FALSE(field_is_prime(cubic).has_value());
}
