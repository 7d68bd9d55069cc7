#include "doctest.h"
#include "fgring/errors.hpp"
#include "fgring/presentation.hpp"
#include "fgring/spectrum.hpp"
#include "fgring/upoly.hpp"

using namespace fgring;

namespace {

std::vector<std::vector<std::string>> prime_texts(const std::vector<PrimeCertificate>& ps) {
  std::vector<std::vector<std::string>> out;
  for (const auto& p : ps) {
    std::vector<std::string> g;
    for (const auto& e : p.prime.generators()) g.push_back(to_string(e));
    out.push_back(g);
  }
  return out;
}

std::vector<std::string> texts(const IdealPresentation& i) {
  std::vector<std::string> out;
  for (const auto& g : i.generators()) out.push_back(to_string(g));
  return out;
}

using Texts = std::vector<std::vector<std::string>>;

}  // namespace

TEST_CASE("presentation parsing") {
  auto r = parse_presentation("ring Z[x] / (x^2 - x)");
  CHECK(r.ctx->size() == 1);
  CHECK(r.to_string() == "ring Z[x] / (x^2 - x)");
  CHECK(parse_presentation("ring Z").to_string() == "ring Z");
  CHECK(parse_presentation("ring Z[x,y]/(0)").relations.generators().empty());
  CHECK(parse_presentation("  ring  Z [ e ]  /\n ( e^2 ) ").to_string() == "ring Z[e] / (e^2)");
  try {
    parse_presentation("ring Z[x /");
    FAIL("expected parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 9);
    CHECK(e.column() == 10);
  }
  CHECK_THROWS_AS(parse_presentation("ring Z[x] / (y)"), ParseError);
  CHECK_THROWS_AS(parse_presentation("ring Z[x,] / (x)"), ParseError);
  CHECK_THROWS_AS(parse_presentation("ring Z[x,x]"), ParseError);
}

TEST_CASE("presentation print/parse round trip") {
  for (const char* s : {"ring Z[x,y] / (x*y, 2*x)", "ring Z[a] / (a^3 - 2*a + 1)", "ring Z / (6)", "ring Z[t]"}) {
    auto r = parse_presentation(s);
    auto again = parse_presentation(r.to_string());
    CHECK(again.to_string() == r.to_string());
    REQUIRE(again.relations.generators().size() == r.relations.generators().size());
    for (std::size_t k = 0; k < r.relations.generators().size(); ++k)
      CHECK(again.relations.generators()[k] == r.relations.generators()[k]);
  }
}

TEST_CASE("minimal primes of small rings") {
  CHECK(prime_texts(minimal_primes(parse_presentation("ring Z[x] / (x^2 - x)"))) == Texts{{"x - 1"}, {"x"}});
  auto twox = minimal_primes(parse_presentation("ring Z[x] / (2*x)"));
  CHECK(prime_texts(twox) == Texts{{"x"}, {"2"}});
  CHECK(twox[1].characteristic == 2);
  CHECK_FALSE(twox[1].finite_index);
  CHECK(prime_texts(minimal_primes(parse_presentation("ring Z[x] / (x^2, 2*x)"))) == Texts{{"x"}});
  auto f9 = minimal_primes(parse_presentation("ring Z[x] / (3, x^2 + 1)"));
  REQUIRE(f9.size() == 1);
  CHECK(f9[0].finite_index);
  CHECK(minimal_primes(parse_presentation("ring Z[x] / (2*x - 1, x)")).empty());
}

TEST_CASE("nilradical, exponent and reduced ring") {
  auto dual = parse_presentation("ring Z[e] / (e^2)");
  auto n = nilradical(dual);
  CHECK(texts(n) == std::vector<std::string>{"e"});
  CHECK(nil_annihilator_exponent(dual, n) == 0);
  for (int d = 1; d <= 100; ++d)
    CHECK_FALSE(ideal_member(parse_polynomial("e", dual.ctx).scaled(d), dual.relations));
  CHECK(texts(nilradical(parse_presentation("ring Z[x] / (4)"))) == std::vector<std::string>{"2"});
  auto idem = parse_presentation("ring Z[x] / (x^2 - x)");
  CHECK(texts(nilradical(idem)) == std::vector<std::string>{"x^2 - x"});
  CHECK(nil_annihilator_exponent(idem, nilradical(idem)) == 1);
  auto r = parse_presentation("ring Z[x] / (x^2, 2*x)");
  CHECK(nil_annihilator_exponent(r, nilradical(r)) == 2);
  CHECK(reduced_ring(dual).to_string() == "ring Z[e] / (e^2, e)");
  auto red = reduced_ring(parse_presentation("ring Z[x] / (4)"));
  CHECK(ideal_equal(red.relations, parse_presentation("ring Z[x] / (2)").relations));
  auto twice = reduced_ring(red);
  CHECK(ideal_equal(twice.relations, red.relations));
}

TEST_CASE("finiteness") {
  CHECK(is_finite(parse_presentation("ring Z[x] / (3, x^2 + 1)")));
  CHECK_FALSE(is_finite(parse_presentation("ring Z")));
  CHECK_FALSE(is_finite(parse_presentation("ring Z[x] / (x)")));
  CHECK_FALSE(is_finite(parse_presentation("ring Z[x] / (5)")));
  CHECK(is_finite(parse_presentation("ring Z[x,y] / (6, x^2, y^3 - x)")));
}

TEST_CASE("prime graph") {
  auto g = prime_graph(parse_presentation("ring Z[x,y] / (x*y)"));
  CHECK(g.vertices.size() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(g.components.size() == 1);
  auto h = prime_graph(parse_presentation("ring Z[x] / (x^2 - 1)"));
  CHECK(h.vertices.size() == 2);
  CHECK(h.edges.empty());
  CHECK(h.components.size() == 2);
  // Vertex (2) is connected to neither (x) nor (x - 1)... (2, x) is finite.
  auto k = prime_graph(parse_presentation("ring Z[x] / (2*x*(x - 1))"));
  CHECK(k.vertices.size() == 3);
  CHECK(k.edges.empty());
}

TEST_CASE("classification") {
  auto bi = classify(parse_presentation("ring Z[x]"));
  CHECK(bi.verdict == Verdict::Biinterpretable);
  auto zz = classify(parse_presentation("ring Z[x] / (x^2 - x)"));
  CHECK(zz.verdict == Verdict::NotBiinterpretable);
  REQUIRE(zz.split.has_value());
  CHECK(zz.split->witness == 1);
  auto pm = classify(parse_presentation("ring Z[x] / (x^2 - 1)"));
  REQUIRE(pm.split.has_value());
  CHECK(pm.split->witness == 2);
  auto dual = classify(parse_presentation("ring Z[e] / (e^2)"));
  CHECK(dual.verdict == Verdict::NotBiinterpretable);
  CHECK(dual.connected);
  CHECK(dual.annihilator_exponent == 0);
  auto four = classify(parse_presentation("ring Z[x] / (4)"));
  CHECK(four.verdict == Verdict::Biinterpretable);
  CHECK(four.annihilator_exponent == 2);
  auto f9 = classify(parse_presentation("ring Z[x] / (3, x^2 + 1)"));
  CHECK(f9.verdict == Verdict::NotBiinterpretable);
  CHECK(f9.is_finite);
  CHECK_FALSE(f9.connected);
  auto zero = classify(parse_presentation("ring Z[x] / (1)"));
  CHECK(zero.is_zero_ring);
  CHECK(zero.is_finite);
  CHECK(zero.verdict == Verdict::NotBiinterpretable);
  CHECK(classify(parse_presentation("ring Z")).verdict == Verdict::Biinterpretable);
}

TEST_CASE("verdict equals the conjunction of the three conditions") {
  for (const char* s : {"ring Z[x]", "ring Z[x] / (x^2 - x)", "ring Z[e] / (e^2)", "ring Z[x,y] / (x*y)",
                        "ring Z[x] / (4)", "ring Z[x] / (3, x^2 + 1)", "ring Z[x] / (x^2, 2*x)",
                        "ring Z[x,y] / (x*y, 2*x)", "ring Z[x] / (6*x)"}) {
    auto r = classify(parse_presentation(s));
    REQUIRE(r.decomposed);
    bool expected = !r.is_finite && r.connected && r.annihilator_exponent >= 1;
    CHECK((r.verdict == Verdict::Biinterpretable) == expected);
    // Edge symmetry and component partition.
    std::vector<int> seen(r.graph.vertices.size(), 0);
    for (const auto& c : r.graph.components)
      for (auto v : c) ++seen[v];
    for (int s2 : seen) CHECK(s2 == 1);
    for (auto [i, j] : r.graph.edges) {
      CHECK(i < j);
      bool same = false;
      for (const auto& c : r.graph.components)
        if (std::find(c.begin(), c.end(), i) != c.end() && std::find(c.begin(), c.end(), j) != c.end()) same = true;
      CHECK(same);
    }
  }
}

TEST_CASE("product of coprime univariate irreducibles") {
  const char* pairs[][2] = {{"x^2 + 1", "x - 3"}, {"x^3 - 2", "x^2 + x + 1"}, {"2*x + 1", "x^2 - 5"}};
  for (auto& pr : pairs) {
    auto ctx = Context::make({"x"});
    Polynomial f = parse_polynomial(pr[0], ctx), g = parse_polynomial(pr[1], ctx);
    auto primes = minimal_primes(RingPresentation(ctx, {f * g}));
    REQUIRE(primes.size() == 2);
    auto fs = upoly::factor_over_rationals(upoly::to_coeffs(f * g, 0));
    CHECK(fs.size() == 2);
    bool has_f = false, has_g = false;
    for (const auto& p : primes) {
      has_f = has_f || ideal_equal(p.prime, IdealPresentation(ctx, {f}));
      has_g = has_g || ideal_equal(p.prime, IdealPresentation(ctx, {g}));
    }
    CHECK(has_f);
    CHECK(has_g);
  }
}

TEST_CASE("fiber data") {
  auto r = parse_presentation("ring Z[x]");
  auto x = parse_polynomial("x", r.ctx);
  auto f = fiber_data(r, {x}, {x - Polynomial::constant(r.ctx, 2)});
  CHECK(f.base_finite);
  auto r2 = parse_presentation("ring Z[x,y]");
  auto f2 = fiber_data(r2, {parse_polynomial("x", r2.ctx)}, {parse_polynomial("y", r2.ctx)});
  CHECK_FALSE(f2.base_finite);
  CHECK(texts(f2.mod_intersection.relations) == std::vector<std::string>{"x*y"});
  auto f3 = fiber_data(r2, {parse_polynomial("x", r2.ctx)}, {parse_polynomial("x", r2.ctx)});
  CHECK(ideal_equal(f3.mod_intersection.relations, f3.mod_sum.relations));
}

TEST_CASE("multiplicative order") {
  auto zx = parse_presentation("ring Z[x]");
  CHECK(has_infinite_mult_order(zx, parse_polynomial("x", zx.ctx)).status == MultOrderResult::Status::Infinite);
  auto z = parse_presentation("ring Z");
  auto neg = has_infinite_mult_order(z, parse_polynomial("-1", z.ctx));
  CHECK(neg.status == MultOrderResult::Status::Finite);
  auto idem = parse_presentation("ring Z[x] / (x^2 - x)");
  auto r = has_infinite_mult_order(idem, parse_polynomial("x", idem.ctx));
  CHECK(r.status == MultOrderResult::Status::Finite);
  CHECK(r.m == 1);
  CHECK(r.n == 2);
}

TEST_CASE("candidate decompositions") {
  auto r = parse_presentation("ring Z[x,y] / (x*y)");
  auto x = IdealPresentation(r.ctx, {parse_polynomial("x", r.ctx)});
  auto y = IdealPresentation(r.ctx, {parse_polynomial("y", r.ctx)});
  auto ok = verify_candidates(r, {x, y});
  CHECK(ok.incomparable);
  CHECK(ok.radical_equal);
  CHECK(ok.prime[0] == true);
  auto bad = verify_candidates(r, {x});
  CHECK_FALSE(bad.radical_equal);
  auto xy = IdealPresentation(r.ctx, {parse_polynomial("x*y", r.ctx)});
  CHECK(verify_candidates(r, {xy}).prime[0] == false);
  auto two = IdealPresentation(r.ctx, {parse_polynomial("6", r.ctx)});
  CHECK(is_prime_ideal(two) == false);
  auto zsat = IdealPresentation(r.ctx, {parse_polynomial("2*x", r.ctx)});
  CHECK(is_prime_ideal(zsat) == false);
}

TEST_CASE("dense cubic is refused") {
  auto r = parse_presentation(
      "ring Z[x,y,z] / (x^3 + 2*y^3 + 3*z^3 + x*y*z + x^2*y + y^2*z + z^2*x + x + y + z + 1)");
  CHECK_THROWS_AS(minimal_primes(r), DecompositionIncomplete);
  auto rep = classify(r);
  CHECK(rep.verdict == Verdict::UndecidedDecompositionIncomplete);
}
