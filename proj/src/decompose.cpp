#include "fgring/decompose.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "fgring/errors.hpp"

namespace fgring {

std::vector<upoly::Factor> factor_univariate(const upoly::Coeffs& f, const Domain& domain) {
  switch (domain.kind) {
    case Domain::Kind::PrimeField:
      return upoly::factor_mod_p(f, domain.p);
    case Domain::Kind::Rationals:
      return upoly::factor_over_rationals(f);
    case Domain::Kind::Integers:
      break;
  }
  throw std::invalid_argument("factor_univariate: a field domain is required");
}

upoly::Coeffs minimal_polynomial(const IdealPresentation& ideal, const Polynomial& h, const GroebnerConfig& config) {
  ContextPtr ext = prepend_variables(ideal.context(), 1, "_T");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, ext));
  gens.push_back(Polynomial::variable(ext, 0) - embed(h, ext));
  IdealPresentation elim = eliminate(IdealPresentation(ext, std::move(gens), ideal.domain()), {0}, config);
  if (elim.generators().size() != 1)
    throw InvariantViolation("minimal_polynomial: ideal is not zero-dimensional");
  upoly::Coeffs m = upoly::to_coeffs(elim.generators()[0], 0);
  if (ideal.domain().kind == Domain::Kind::PrimeField) m = upoly::fp_monic(m, ideal.domain().p);
  return m;
}

namespace {

struct Child {
  std::vector<Polynomial> additions;
  std::string note;
};

struct Outcome {
  enum class Kind { Empty, Prime, Split } kind = Kind::Empty;
  std::vector<Child> children;
};

Outcome split(std::vector<Child> children) { return {Outcome::Kind::Split, std::move(children)}; }

class Analyzer {
 public:
  explicit Analyzer(const DecomposeConfig& config) : config_(config), rng_(config.seed) {}

  Outcome analyze(const IdealPresentation& input) {
    const Domain& dom = input.domain();
    IdealPresentation cur = input;
    for (;;) {
      GroebnerBasis gb = strong_groebner(cur, MonomialOrder::grevlex(), config_.groebner);
      if (gb.is_unit()) return {};
      if (auto s = monomial_split(gb)) return *s;
      if (auto s = univariate_split(gb)) return *s;
      auto lin = linear_variable(gb);
      if (!lin) {
        cur = gb.ideal();
        break;
      }
      std::vector<std::size_t> keep;
      for (std::size_t v = 0; v < cur.context()->size(); ++v)
        if (v != *lin) keep.push_back(v);
      cur = eliminate(gb.ideal(), keep, config_.groebner);
    }
    if (cur.generators().empty()) return {Outcome::Kind::Prime, {}};

    // Compact onto the variables still in use.
    const ContextPtr& ctx = cur.context();
    std::vector<bool> used(ctx->size(), false);
    for (const auto& g : cur.generators()) {
      auto u = g.variables_used();
      for (std::size_t v = 0; v < u.size(); ++v) used[v] = used[v] || u[v];
    }
    std::vector<std::string> names;
    std::vector<std::size_t> to_small(ctx->size(), 0), to_big;
    for (std::size_t v = 0; v < ctx->size(); ++v)
      if (used[v]) {
        to_small[v] = names.size();
        names.push_back(ctx->name(v));
        to_big.push_back(v);
      }
    ContextPtr small = Context::make(names);
    std::vector<Polynomial> gens;
    for (const auto& g : cur.generators()) gens.push_back(rename(g, small, to_small));
    IdealPresentation compact(small, std::move(gens), dom);
    lift_ctx_ = ctx;
    lift_map_ = to_big;

    int dim = dimension_over_field(compact, config_.groebner);
    if (dim == 0) return zero_dimensional(compact);
    GroebnerBasis gb = strong_groebner(compact, MonomialOrder::grevlex(), config_.groebner);
    if (gb.elements.size() == 1) return principal(gb.elements[0], dom);
    throw DecompositionIncomplete("positive-dimensional ideal with " + std::to_string(gb.elements.size()) +
                                  " basis elements in " + std::to_string(small->size()) + " variables");
  }

 private:
  Polynomial lift(const Polynomial& f) const { return rename(f, lift_ctx_, lift_map_); }

  static std::optional<Outcome> monomial_split(const GroebnerBasis& gb) {
    for (const auto& g : gb.elements) {
      std::size_t n = g.nvars();
      Monomial common = g.terms()[0].monomial;
      for (const auto& t : g.terms())
        for (std::size_t v = 0; v < n; ++v) common[v] = std::min(common[v], t.monomial[v]);
      if (common.is_one()) continue;
      if (g.size() == 1 && common.degree() == 1) continue;  // a bare variable
      std::vector<Child> children;
      for (std::size_t v = 0; v < n; ++v)
        if (common[v] != 0)
          children.push_back({{Polynomial::variable(g.context(), v)}, "monomial factor " + g.context()->name(v)});
      std::vector<Term> rest;
      for (const auto& t : g.terms()) rest.push_back({t.monomial / common, t.coeff});
      Polynomial h = Polynomial::from_terms(g.context(), std::move(rest));
      if (!h.is_constant()) children.push_back({{h}, "cofactor " + to_string(h)});
      return split(std::move(children));
    }
    return std::nullopt;
  }

  static std::optional<std::size_t> single_variable(const Polynomial& g) {
    auto u = g.variables_used();
    std::optional<std::size_t> var;
    for (std::size_t v = 0; v < u.size(); ++v) {
      if (!u[v]) continue;
      if (var) return std::nullopt;
      var = v;
    }
    return var;
  }

  static std::optional<Outcome> univariate_split(const GroebnerBasis& gb) {
    for (const auto& g : gb.elements) {
      auto v = single_variable(g);
      if (!v || g.degree_in(*v) < 2) continue;
      auto factors = factor_univariate(upoly::to_coeffs(g, *v), gb.domain);
      if (factors.size() == 1 && factors[0].multiplicity == 1) continue;
      std::vector<Child> children;
      for (const auto& f : factors) {
        Polynomial p = upoly::from_coeffs(f.poly, g.context(), *v);
        children.push_back({{p}, "factor " + to_string(p) + " of " + to_string(g)});
      }
      return split(std::move(children));
    }
    return std::nullopt;
  }

  // A variable v with some basis element c*v + r, c a nonzero constant and r free of v.
  static std::optional<std::size_t> linear_variable(const GroebnerBasis& gb) {
    for (const auto& g : gb.elements) {
      for (std::size_t v = 0; v < g.nvars(); ++v) {
        if (g.degree_in(v) != 1) continue;
        std::size_t with_v = 0;
        bool bare = false;
        for (const auto& t : g.terms()) {
          if (t.monomial[v] == 0) continue;
          ++with_v;
          bare = t.monomial.degree() == 1;
        }
        if (with_v == 1 && bare) return v;
      }
    }
    return std::nullopt;
  }

  Outcome from_minpoly(const upoly::Coeffs& m, const Polynomial& h, const Domain& dom, bool* irreducible) {
    auto factors = factor_univariate(m, dom);
    *irreducible = factors.size() == 1 && factors[0].multiplicity == 1;
    if (*irreducible) return {};
    std::vector<Child> children;
    if (factors.size() == 1) {
      Polynomial r = upoly::compose(factors[0].poly, h);
      children.push_back({{lift(r)}, "radical of minimal polynomial of " + to_string(h)});
    } else {
      for (const auto& f : factors) {
        Polynomial r = upoly::compose(f.poly, h);
        children.push_back({{lift(r)}, "minimal polynomial of " + to_string(h) + ": factor " + to_string(r)});
      }
    }
    return split(std::move(children));
  }

  Outcome zero_dimensional(const IdealPresentation& ideal) {
    const Domain& dom = ideal.domain();
    const ContextPtr& ctx = ideal.context();
    std::size_t n = ctx->size();
    GroebnerBasis gb = strong_groebner(ideal, MonomialOrder::grevlex(), config_.groebner);
    auto dim = quotient_dimension(gb);
    if (!dim) throw InvariantViolation("zero-dimensional ideal with infinite quotient");
    const std::size_t degree = *dim;

    std::vector<Polynomial> candidates;
    for (std::size_t v = 0; v < n; ++v) candidates.push_back(Polynomial::variable(ctx, v));

    // Minimal polynomials of the variables first: squarefree ones make the
    // ideal radical, reducible ones split it.
    bool any_primitive = false;
    for (const auto& h : candidates) {
      upoly::Coeffs m = minimal_polynomial(ideal, h, config_.groebner);
      bool irreducible = false;
      Outcome o = from_minpoly(m, h, dom, &irreducible);
      if (o.kind == Outcome::Kind::Split) return o;
      if (static_cast<std::size_t>(upoly::degree(m)) == degree) any_primitive = true;
    }
    if (any_primitive) return {Outcome::Kind::Prime, {}};

    std::vector<Monomial> standard;
    {
      std::vector<Exponent> bound(n, 0);
      for (const auto& e : gb.elements) {
        const Monomial& m = e.leading_monomial();
        for (std::size_t v = 0; v < n; ++v) bound[v] = std::max(bound[v], m[v]);
      }
      Monomial m(n);
      for (;;) {
        bool reducible = false;
        for (const auto& e : gb.elements)
          if (e.leading_monomial().divides(m)) reducible = true;
        if (!reducible) standard.push_back(m);
        std::size_t v = 0;
        while (v < n && ++m[v] > bound[v]) m[v++] = 0;
        if (v == n) break;
      }
    }

    Integer modulus = dom.kind == Domain::Kind::PrimeField ? dom.p : Integer(0);
    std::uniform_int_distribution<int> small_coeff(-3, 3);
    auto draw = [&]() {
      Integer c = small_coeff(rng_);
      if (modulus != 0) c = floor_mod(c * Integer(static_cast<unsigned long>(rng_() % 1000003)), modulus);
      return c;
    };
    for (unsigned attempt = 0; attempt < config_.primitive_attempts; ++attempt) {
      Polynomial h(ctx);
      if (attempt < config_.primitive_attempts / 2) {
        for (std::size_t v = 0; v < n; ++v) h = h + Polynomial::variable(ctx, v).scaled(draw());
      } else {
        for (const auto& m : standard) h = h + Polynomial::term(ctx, m, draw());
      }
      h = normal_form(h, gb);
      if (dom.kind == Domain::Kind::PrimeField) h = reduce_mod(h, dom.p);
      if (h.is_constant()) continue;
      upoly::Coeffs m = minimal_polynomial(ideal, h, config_.groebner);
      bool irreducible = false;
      Outcome o = from_minpoly(m, h, dom, &irreducible);
      if (o.kind == Outcome::Kind::Split) return o;
      if (static_cast<std::size_t>(upoly::degree(m)) == degree) return {Outcome::Kind::Prime, {}};
    }
    throw DecompositionIncomplete("no primitive element found for a zero-dimensional ideal of degree " +
                                  std::to_string(degree));
  }

  Outcome principal(const Polynomial& f, const Domain& dom) {
    const ContextPtr& ctx = f.context();
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      if (f.degree_in(v) != 1) continue;
      std::vector<Term> a_terms, b_terms;
      for (const auto& t : f.terms()) {
        if (t.monomial[v] == 0) {
          b_terms.push_back(t);
        } else {
          Monomial m = t.monomial;
          m[v] = 0;
          a_terms.push_back({m, t.coeff});
        }
      }
      Polynomial a = Polynomial::from_terms(ctx, a_terms);
      Polynomial b = Polynomial::from_terms(ctx, b_terms);
      // gcd(a, b) = a*b / lcm(a, b), with the lcm generating (a) ∩ (b).
      IdealPresentation meet = ideal_ops(IdealPresentation(ctx, {a}, dom), IdealPresentation(ctx, {b}, dom),
                                         IdealOp::Intersect, config_.groebner);
      if (meet.generators().size() != 1) throw InvariantViolation("intersection of principal ideals not principal");
      Polynomial g = exact_div_in(a * b, meet.generators()[0], dom);
      if (g.is_constant()) return {Outcome::Kind::Prime, {}};
      Polynomial cof = exact_div_in(f, g, dom);
      return split({{{lift(g)}, "content " + to_string(g) + " in " + ctx->name(v)},
                    {{lift(cof)}, "primitive part " + to_string(cof) + " in " + ctx->name(v)}});
    }
    throw DecompositionIncomplete("hypersurface " + to_string(f) + " has no variable of degree one");
  }

  const DecomposeConfig& config_;
  std::mt19937_64 rng_;
  ContextPtr lift_ctx_;
  std::vector<std::size_t> lift_map_;
};

std::string generators_text(const IdealPresentation& i) {
  std::string s;
  for (const auto& g : i.generators()) s += to_string(g) + ";";
  return s;
}

}  // namespace

std::vector<FieldPrime> field_minimal_primes(const IdealPresentation& ideal, const DecomposeConfig& config) {
  if (!ideal.domain().is_field()) throw std::invalid_argument("field_minimal_primes: a field domain is required");
  struct Node {
    IdealPresentation ideal;
    std::string trace;
  };
  std::deque<Node> work{{ideal, ""}};
  std::vector<FieldPrime> found;
  Analyzer analyzer(config);
  std::size_t nodes = 0;
  while (!work.empty()) {
    Node node = std::move(work.front());
    work.pop_front();
    if (++nodes > config.max_nodes)
      throw ResourceCapExceeded("decomposition: more than " + std::to_string(config.max_nodes) + " branches");
    bool pruned = false;
    for (const auto& p : found)
      if (ideal_contains(node.ideal, p.ideal, config.groebner)) {
        pruned = true;
        break;
      }
    if (pruned) continue;
    Outcome o = analyzer.analyze(node.ideal);
    switch (o.kind) {
      case Outcome::Kind::Empty:
        break;
      case Outcome::Kind::Prime: {
        GroebnerBasis gb = strong_groebner(node.ideal, MonomialOrder::grevlex(), config.groebner);
        found.push_back({gb.ideal(), node.trace.empty() ? "prime as given" : node.trace});
        break;
      }
      case Outcome::Kind::Split:
        for (auto& c : o.children) {
          std::vector<Polynomial> gens = node.ideal.generators();
          gens.insert(gens.end(), c.additions.begin(), c.additions.end());
          std::string trace = node.trace.empty() ? c.note : node.trace + "; " + c.note;
          work.push_back({IdealPresentation(node.ideal.context(), std::move(gens), node.ideal.domain()), trace});
        }
        break;
    }
  }
  std::vector<FieldPrime> minimal;
  for (std::size_t i = 0; i < found.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < found.size() && keep; ++j) {
      if (i == j || !ideal_contains(found[i].ideal, found[j].ideal, config.groebner)) continue;
      bool equal = ideal_contains(found[j].ideal, found[i].ideal, config.groebner);
      if (!equal || j < i) keep = false;
    }
    if (keep) minimal.push_back(found[i]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const FieldPrime& a, const FieldPrime& b) {
    return generators_text(a.ideal) < generators_text(b.ideal);
  });
  return minimal;
}

std::optional<bool> field_is_prime(const IdealPresentation& ideal, const DecomposeConfig& config) {
  try {
    auto primes = field_minimal_primes(ideal, config);
    if (primes.size() != 1) return false;
    return ideal_contains(ideal, primes[0].ideal, config.groebner);
  } catch (const DecompositionIncomplete&) {
    return std::nullopt;
  }
}

}  // namespace fgring
