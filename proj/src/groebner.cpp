#include "fgring/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "fgring/errors.hpp"

namespace fgring {

std::string Domain::name() const {
  switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::PrimeField: return "F_" + p.get_str();
  }
  return "?";
}

Polynomial normalize_into(const Polynomial& f, const Domain& domain) {
  switch (domain.kind) {
    case Domain::Kind::Integers: return f;
    case Domain::Kind::Rationals: return primitive_part(f);
    case Domain::Kind::PrimeField: return reduce_mod(f, domain.p);
  }
  return f;
}

IdealPresentation::IdealPresentation(ContextPtr ctx, std::vector<Polynomial> generators, Domain domain)
    : ctx_(std::move(ctx)), domain_(std::move(domain)) {
  for (auto& g : generators) {
    if (!g.context() || !g.context()->same_as(*ctx_))
      throw ContextMismatch("IdealPresentation: generator over a different context");
    Polynomial h = normalize_into(g, domain_);
    if (!h.is_zero()) gens_.push_back(std::move(h));
  }
}

IdealPresentation IdealPresentation::with(const Polynomial& g) const {
  auto gens = gens_;
  gens.push_back(g);
  return IdealPresentation(ctx_, std::move(gens), domain_);
}

IdealPresentation IdealPresentation::over(const Domain& d) const { return IdealPresentation(ctx_, gens_, d); }

bool GroebnerBasis::is_unit() const {
  if (elements.size() != 1 || !elements[0].is_constant()) return false;
  return domain.is_field() || abs(elements[0].constant_value()) == 1;
}

namespace {

class Engine {
 public:
  Engine(const Domain& domain, const MonomialOrder& order, const GroebnerConfig& config)
      : domain_(domain), order_(order), config_(config) {}

  Polynomial normalize(const Polynomial& f) const {
    switch (domain_.kind) {
      case Domain::Kind::Integers:
        return (!f.is_zero() && f.leading_coeff() < 0) ? -f : f;
      case Domain::Kind::Rationals:
        return primitive_part(f);
      case Domain::Kind::PrimeField: {
        Polynomial g = reduce_mod(f, domain_.p);
        if (g.is_zero() || g.leading_coeff() == 1) return g;
        return reduce_mod(g.scaled(inverse_mod(g.leading_coeff(), domain_.p)), domain_.p);
      }
    }
    return f;
  }

  // Reduces the leading term until it is irreducible. `scale` accumulates the
  // factor the polynomial was multiplied by (only changes over Q).
  Polynomial top_reduce(Polynomial f, const std::vector<Polynomial>& basis, Integer& scale) {
    while (!f.is_zero()) {
      const Term& lt = f.leading_term();
      bool reduced = false;
      if (domain_.kind == Domain::Kind::Integers) {
        const Polynomial* pick = nullptr;
        Integer pick_q;
        for (const auto& g : basis) {
          if (!g.leading_monomial().divides(lt.monomial)) continue;
          const Integer& b = g.leading_coeff();
          Integer r = floor_mod(lt.coeff, b);
          if (r == lt.coeff) continue;
          Integer q = (lt.coeff - r) / b;
          if (!pick || r == 0) {
            pick = &g;
            pick_q = q;
            if (r == 0) break;
          }
        }
        if (pick) {
          f = f.add_scaled(-pick_q, lt.monomial / pick->leading_monomial(), *pick);
          reduced = true;
        }
      } else {
        for (const auto& g : basis) {
          if (!g.leading_monomial().divides(lt.monomial)) continue;
          Monomial m = lt.monomial / g.leading_monomial();
          if (domain_.kind == Domain::Kind::PrimeField) {
            f = reduce_mod(f.add_scaled(-lt.coeff, m, g), domain_.p);
          } else {
            Integer h = gcd(lt.coeff, g.leading_coeff());
            Integer a = g.leading_coeff() / h;
            Integer c = lt.coeff / h;
            f = f.scaled(a).add_scaled(-c, m, g);
            scale *= a;
          }
          reduced = true;
          break;
        }
      }
      if (!reduced) return f;
      tick();
    }
    return f;
  }

  Polynomial full_reduce(const Polynomial& f, const std::vector<Polynomial>& basis) {
    std::vector<Term> done;
    Polynomial rest = f;
    while (!rest.is_zero()) {
      Integer scale = 1;
      rest = top_reduce(std::move(rest), basis, scale);
      if (scale != 1)
        for (auto& t : done) t.coeff *= scale;
      if (rest.is_zero()) break;
      done.push_back(rest.leading_term());
      std::vector<Term> tail(rest.terms().begin() + 1, rest.terms().end());
      rest = Polynomial::from_sorted(rest.context(), rest.order(), std::move(tail));
    }
    Polynomial out = Polynomial::from_sorted(f.context(), f.order(), std::move(done));
    if (domain_.kind == Domain::Kind::Rationals) out = primitive_part(out);
    return out;
  }

  GroebnerBasis run(const IdealPresentation& ideal) {
    ctx_ = ideal.context();
    for (const auto& g : ideal.generators()) {
      Polynomial r = normalize(full_reduce(normalize(g.with_order(order_)), basis_));
      if (!r.is_zero() && add(std::move(r))) return unit_basis();
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k)
        if (pair_less(pairs_[k], pairs_[best])) best = k;
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      pending_.erase({pr.i, pr.j});
      if (domain_.is_field() && skip_by_criteria(pr)) {
        continue;
      }
      processed_.insert({pr.i, pr.j});
      for (auto& s : pair_polys(pr)) {
        Polynomial r = normalize(full_reduce(s, basis_));
        if (!r.is_zero() && add(std::move(r))) return unit_basis();
      }
    }
    return finalize();
  }

 private:
  struct Pair {
    std::size_t i, j;
    std::uint64_t degree;
  };

  static bool pair_less(const Pair& a, const Pair& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  void tick() {
    if (++steps_ > config_.max_reduction_steps)
      throw ResourceCapExceeded("Groebner basis: reduction step limit exceeded (" +
                                std::to_string(config_.max_reduction_steps) + ")");
  }

  bool is_unit_element(const Polynomial& r) const {
    if (!r.is_constant()) return false;
    return domain_.is_field() || abs(r.constant_value()) == 1;
  }

  // Returns true if the basis became the unit ideal.
  bool add(Polynomial r) {
    if (is_unit_element(r)) return true;
    std::size_t k = basis_.size();
    for (std::size_t i = 0; i < k; ++i) {
      Monomial l = lcm(basis_[i].leading_monomial(), r.leading_monomial());
      pairs_.push_back({i, k, l.degree()});
      pending_.insert({i, k});
    }
    basis_.push_back(std::move(r));
    if (basis_.size() > config_.max_basis_size)
      throw ResourceCapExceeded("Groebner basis: basis size limit exceeded (" +
                                std::to_string(config_.max_basis_size) + ")");
    if (pairs_.size() > config_.max_pairs)
      throw ResourceCapExceeded("Groebner basis: pair limit exceeded");
    return false;
  }

  bool skip_by_criteria(const Pair& pr) {
    const Monomial& a = basis_[pr.i].leading_monomial();
    const Monomial& b = basis_[pr.j].leading_monomial();
    if (a.coprime(b)) {
      processed_.insert({pr.i, pr.j});
      return true;
    }
    Monomial l = lcm(a, b);
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis_[k].leading_monomial().divides(l)) continue;
      auto ik = std::minmax(pr.i, k);
      auto jk = std::minmax(pr.j, k);
      if (processed_.count({ik.first, ik.second}) && processed_.count({jk.first, jk.second})) return true;
    }
    return false;
  }

  std::vector<Polynomial> pair_polys(const Pair& pr) const {
    const Polynomial& f = basis_[pr.i];
    const Polynomial& g = basis_[pr.j];
    const Monomial& fa = f.leading_monomial();
    const Monomial& ga = g.leading_monomial();
    Monomial l = lcm(fa, ga);
    Monomial mf = l / fa, mg = l / ga;
    const Integer& a = f.leading_coeff();
    const Integer& b = g.leading_coeff();
    std::vector<Polynomial> out;
    switch (domain_.kind) {
      case Domain::Kind::PrimeField:
        out.push_back(reduce_mod(f.mul_term(1, mf).add_scaled(-1, mg, g), domain_.p));
        break;
      case Domain::Kind::Rationals: {
        Integer h = gcd(a, b);
        out.push_back(f.mul_term(b / h, mf).add_scaled(-(a / h), mg, g));
        break;
      }
      case Domain::Kind::Integers: {
        Integer L = lcm(a, b);
        out.push_back(f.mul_term(L / a, mf).add_scaled(-(L / b), mg, g));
        bool a_div_b = mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
        bool b_div_a = mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
        if (!a_div_b && !b_div_a) {
          Integer u, v;
          ext_gcd(a, b, u, v);
          out.push_back(f.mul_term(u, mf).add_scaled(v, mg, g));
        }
        break;
      }
    }
    return out;
  }

  GroebnerBasis unit_basis() const {
    GroebnerBasis gb{ctx_, {Polynomial::constant(ctx_, 1, order_)}, order_, domain_, true};
    return gb;
  }

  GroebnerBasis finalize() {
    std::vector<Polynomial> minimal;
    const bool over_z = domain_.kind == Domain::Kind::Integers;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const Term& ti = basis_[i].leading_term();
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (j == i) continue;
        const Term& tj = basis_[j].leading_term();
        if (!tj.monomial.divides(ti.monomial)) continue;
        if (over_z && !mpz_divisible_p(ti.coeff.get_mpz_t(), tj.coeff.get_mpz_t())) continue;
        bool same = tj.monomial == ti.monomial && (!over_z || abs(tj.coeff) == abs(ti.coeff));
        if (!same || j < i) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      const Polynomial& g = minimal[i];
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial t = Polynomial::from_sorted(g.context(), g.order(), std::move(tail));
      if (domain_.kind == Domain::Kind::Rationals) {
        // Reduce g as a whole so the leading coefficient scales with the tail.
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
          if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normalize(full_reduce(g, others)));
        continue;
      }
      Polynomial r = full_reduce(t, minimal);
      std::vector<Term> terms{g.leading_term()};
      terms.insert(terms.end(), r.terms().begin(), r.terms().end());
      reduced.push_back(normalize(Polynomial::from_sorted(g.context(), g.order(), std::move(terms))));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
      int c = order_.compare(x.leading_monomial(), y.leading_monomial());
      if (c != 0) return c < 0;
      return x.leading_coeff() < y.leading_coeff();
    });
    return GroebnerBasis{ctx_, std::move(reduced), order_, domain_, true};
  }

  Domain domain_;
  MonomialOrder order_;
  const GroebnerConfig& config_;
  ContextPtr ctx_;
  std::size_t steps_ = 0;
  std::vector<Polynomial> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
  std::set<std::pair<std::size_t, std::size_t>> processed_;
};

void require_context(const IdealPresentation& a, const IdealPresentation& b) {
  if (!a.context()->same_as(*b.context())) throw ContextMismatch("ideals live over different contexts");
  if (a.domain() != b.domain()) throw ContextMismatch("ideals live over different coefficient domains");
}

}  // namespace

Polynomial exact_div_in(const Polynomial& f, const Polynomial& g, const Domain& d) {
  switch (d.kind) {
    case Domain::Kind::Integers:
      return exact_div(f, g);
    case Domain::Kind::PrimeField: {
      Polynomial gg = reduce_mod(g.with_order(f.order()), d.p);
      Integer inv = inverse_mod(gg.leading_coeff(), d.p);
      Polynomial r = reduce_mod(f, d.p);
      std::vector<Term> q;
      while (!r.is_zero()) {
        const Term& t = r.leading_term();
        if (!gg.leading_monomial().divides(t.monomial)) throw NotDivisible("exact division over F_p failed");
        Integer c = floor_mod(t.coeff * inv, d.p);
        Monomial m = t.monomial / gg.leading_monomial();
        r = reduce_mod(r.add_scaled(-c, m, gg), d.p);
        q.push_back({std::move(m), std::move(c)});
      }
      return Polynomial::from_terms(f.context(), std::move(q), f.order());
    }
    case Domain::Kind::Rationals: {
      Polynomial gg = g.with_order(f.order());
      Polynomial r = f;
      Polynomial q(f.context(), f.order());
      while (!r.is_zero()) {
        const Term& t = r.leading_term();
        if (!gg.leading_monomial().divides(t.monomial)) throw NotDivisible("exact division over Q failed");
        Integer h = gcd(t.coeff, gg.leading_coeff());
        Integer a = gg.leading_coeff() / h, c = t.coeff / h;
        Monomial m = t.monomial / gg.leading_monomial();
        r = r.scaled(a).add_scaled(-c, m, gg);
        q = q.scaled(a) + Polynomial::term(f.context(), m, c, f.order());
      }
      return primitive_part(q);
    }
  }
  return f;
}

namespace {

IdealPresentation from_basis(const GroebnerBasis& gb, const ContextPtr& ctx, const Domain& d) {
  std::vector<Polynomial> gens;
  for (const auto& e : gb.elements) gens.push_back(e.with_order(MonomialOrder::grevlex()));
  return IdealPresentation(ctx, std::move(gens), d);
}

}  // namespace

ContextPtr prepend_variables(const ContextPtr& ctx, std::size_t count, const std::string& stem) {
  std::vector<std::string> names;
  std::size_t suffix = 0;
  while (names.size() < count) {
    std::string candidate = stem + std::to_string(suffix++);
    if (!ctx->index_of(candidate)) names.push_back(candidate);
  }
  names.insert(names.end(), ctx->names().begin(), ctx->names().end());
  return Context::make(std::move(names));
}

GroebnerBasis strong_groebner(const IdealPresentation& ideal, MonomialOrder order, const GroebnerConfig& config) {
  Engine engine(ideal.domain(), order, config);
  return engine.run(ideal);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!f.context()->same_as(*basis.ctx)) throw ContextMismatch("normal_form: contexts differ");
  GroebnerConfig unlimited;
  unlimited.max_reduction_steps = static_cast<std::size_t>(-1);
  Engine engine(basis.domain, basis.order, unlimited);
  Polynomial g = normalize_into(f.with_order(basis.order), basis.domain);
  Polynomial r = engine.full_reduce(g, basis.elements);
  return basis.domain.kind == Domain::Kind::PrimeField ? reduce_mod(r, basis.domain.p) : r;
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) { return normal_form(f, basis).is_zero(); }

bool ideal_member(const Polynomial& f, const IdealPresentation& ideal, const GroebnerConfig& config) {
  return ideal_member(f, strong_groebner(ideal, MonomialOrder::grevlex(), config));
}

bool radical_member(const Polynomial& f, const IdealPresentation& ideal, const GroebnerConfig& config) {
  if (!f.context()->same_as(*ideal.context())) throw ContextMismatch("radical_member: contexts differ");
  ContextPtr ext = prepend_variables(ideal.context(), 1, "_y");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, ext));
  Polynomial y = Polynomial::variable(ext, 0);
  gens.push_back(Polynomial::constant(ext, 1) - y * embed(f, ext));
  return strong_groebner(IdealPresentation(ext, std::move(gens), ideal.domain()), MonomialOrder::grevlex(), config)
      .is_unit();
}

bool ideal_contains(const IdealPresentation& big, const IdealPresentation& small, const GroebnerConfig& config) {
  require_context(big, small);
  if (small.generators().empty()) return true;
  GroebnerBasis gb = strong_groebner(big, MonomialOrder::grevlex(), config);
  for (const auto& g : small.generators())
    if (!ideal_member(g, gb)) return false;
  return true;
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GroebnerConfig& config) {
  return ideal_contains(a, b, config) && ideal_contains(b, a, config);
}

bool radical_contains(const IdealPresentation& big, const IdealPresentation& small, const GroebnerConfig& config) {
  for (const auto& g : small.generators())
    if (!radical_member(g, big, config)) return false;
  return true;
}

namespace {

IdealPresentation intersect(const IdealPresentation& i, const IdealPresentation& j, const GroebnerConfig& config) {
  ContextPtr ext = prepend_variables(i.context(), 1, "_t");
  MonomialOrder order = MonomialOrder::block(1);
  Polynomial t = Polynomial::variable(ext, 0, order);
  Polynomial one_minus_t = Polynomial::constant(ext, 1, order) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(t * embed(g, ext, order));
  for (const auto& g : j.generators()) gens.push_back(one_minus_t * embed(g, ext, order));
  GroebnerBasis gb = strong_groebner(IdealPresentation(ext, std::move(gens), i.domain()), order, config);
  std::vector<Polynomial> out;
  std::vector<std::size_t> back(ext->size());
  for (std::size_t k = 1; k < ext->size(); ++k) back[k] = k - 1;
  for (const auto& e : gb.elements)
    if (e.degree_in(0) == 0) out.push_back(rename(e, i.context(), back));
  return IdealPresentation(i.context(), std::move(out), i.domain());
}

IdealPresentation quotient_by(const IdealPresentation& i, const Polynomial& g, const GroebnerConfig& config) {
  IdealPresentation principal(i.context(), {g}, i.domain());
  if (principal.is_zero_ideal()) return IdealPresentation(i.context(), {Polynomial::constant(i.context(), 1)}, i.domain());
  IdealPresentation meet = intersect(i, principal, config);
  const Polynomial& gn = principal.generators()[0];
  std::vector<Polynomial> out;
  for (const auto& h : meet.generators()) out.push_back(exact_div_in(h, gn, i.domain()));
  return IdealPresentation(i.context(), std::move(out), i.domain());
}

IdealPresentation quotient(const IdealPresentation& i, const IdealPresentation& j, const GroebnerConfig& config) {
  if (j.generators().empty()) return IdealPresentation(i.context(), {Polynomial::constant(i.context(), 1)}, i.domain());
  std::optional<IdealPresentation> acc;
  for (const auto& g : j.generators()) {
    IdealPresentation q = quotient_by(i, g, config);
    acc = acc ? intersect(*acc, q, config) : q;
  }
  return from_basis(strong_groebner(*acc, MonomialOrder::grevlex(), config), i.context(), i.domain());
}

}  // namespace

IdealPresentation ideal_ops(const IdealPresentation& i, const IdealPresentation& j, IdealOp op,
                            const GroebnerConfig& config) {
  require_context(i, j);
  switch (op) {
    case IdealOp::Sum: {
      auto gens = i.generators();
      gens.insert(gens.end(), j.generators().begin(), j.generators().end());
      return IdealPresentation(i.context(), std::move(gens), i.domain());
    }
    case IdealOp::Product: {
      std::vector<Polynomial> gens;
      for (const auto& a : i.generators())
        for (const auto& b : j.generators()) gens.push_back(a * b);
      return IdealPresentation(i.context(), std::move(gens), i.domain());
    }
    case IdealOp::Intersect:
      return from_basis(strong_groebner(intersect(i, j, config), MonomialOrder::grevlex(), config), i.context(),
                        i.domain());
    case IdealOp::Quotient:
      return quotient(i, j, config);
    case IdealOp::Saturate: {
      IdealPresentation current = i;
      for (;;) {
        IdealPresentation next = quotient(current, j, config);
        if (ideal_contains(current, next, config)) return next;
        current = std::move(next);
      }
    }
  }
  return i;
}

IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& keep,
                            const GroebnerConfig& config) {
  const ContextPtr& ctx = ideal.context();
  std::vector<bool> kept(ctx->size(), false);
  for (auto k : keep) kept.at(k) = true;
  std::vector<std::size_t> to_new(ctx->size()), to_old;
  std::vector<std::string> names;
  for (std::size_t v = 0; v < ctx->size(); ++v)
    if (!kept[v]) {
      to_new[v] = names.size();
      names.push_back(ctx->name(v));
      to_old.push_back(v);
    }
  std::size_t split = names.size();
  for (std::size_t v = 0; v < ctx->size(); ++v)
    if (kept[v]) {
      to_new[v] = names.size();
      names.push_back(ctx->name(v));
      to_old.push_back(v);
    }
  ContextPtr ext = Context::make(std::move(names));
  MonomialOrder order = MonomialOrder::block(split);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(rename(g, ext, to_new, order));
  GroebnerBasis gb = strong_groebner(IdealPresentation(ext, std::move(gens), ideal.domain()), order, config);
  std::vector<Polynomial> out;
  for (const auto& e : gb.elements) {
    bool free_of_eliminated = true;
    for (const auto& t : e.terms())
      for (std::size_t v = 0; v < split && free_of_eliminated; ++v)
        if (t.monomial[v] != 0) free_of_eliminated = false;
    if (free_of_eliminated) out.push_back(rename(e, ctx, to_old));
  }
  return IdealPresentation(ctx, std::move(out), ideal.domain());
}

Integer contract_integers(const IdealPresentation& ideal, const GroebnerConfig& config) {
  if (ideal.domain().kind != Domain::Kind::Integers)
    throw std::invalid_argument("contract_integers: ideal must be over Z");
  // The constant monomial is the minimum of every monomial order, so the
  // constants of a strong basis generate the contraction.
  GroebnerBasis gb = strong_groebner(ideal, MonomialOrder::grevlex(), config);
  Integer c = 0;
  for (const auto& e : gb.elements)
    if (e.is_constant()) c = gcd(c, e.constant_value());
  return c;
}

std::vector<std::size_t> maximal_independent_set(const GroebnerBasis& basis) {
  std::size_t n = basis.ctx->size();
  std::vector<std::vector<bool>> supports;
  for (const auto& e : basis.elements) {
    std::vector<bool> s(n, false);
    for (std::size_t v = 0; v < n; ++v) s[v] = e.leading_monomial()[v] != 0;
    supports.push_back(std::move(s));
  }
  std::vector<std::size_t> best, current;
  std::vector<bool> in(n, false);
  // Depth-first search over variable subsets, pruned when a leading monomial
  // is supported inside the chosen set.
  auto independent = [&]() {
    for (const auto& s : supports) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (s[v] && !in[v]) inside = false;
      if (inside) return false;
    }
    return true;
  };
  auto dfs = [&](auto&& self, std::size_t v) -> void {
    if (current.size() + (n - v) <= best.size()) return;
    if (v == n) {
      best = current;
      return;
    }
    in[v] = true;
    current.push_back(v);
    if (independent()) self(self, v + 1);
    current.pop_back();
    in[v] = false;
    self(self, v + 1);
  };
  if (!basis.is_unit()) dfs(dfs, 0);
  return best;
}

int dimension_over_field(const IdealPresentation& ideal, const GroebnerConfig& config) {
  if (!ideal.domain().is_field()) throw std::invalid_argument("dimension_over_field: ideal must be over a field");
  GroebnerBasis gb = strong_groebner(ideal, MonomialOrder::grevlex(), config);
  if (gb.is_unit()) return -1;
  return static_cast<int>(maximal_independent_set(gb).size());
}

std::optional<std::size_t> quotient_dimension(const GroebnerBasis& basis) {
  std::size_t n = basis.ctx->size();
  if (basis.is_unit()) return 0;
  std::vector<Exponent> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& e : basis.elements) {
      const Monomial& m = e.leading_monomial();
      bool pure = m[v] > 0;
      for (std::size_t w = 0; w < n && pure; ++w)
        if (w != v && m[w] != 0) pure = false;
      if (pure && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
    }
    if (bound[v] == 0) return std::nullopt;
  }
  std::size_t count = 0;
  Monomial m(n);
  for (;;) {
    bool standard = true;
    for (const auto& e : basis.elements)
      if (e.leading_monomial().divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    std::size_t v = 0;
    while (v < n) {
      if (++m[v] < bound[v]) break;
      m[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

}  // namespace fgring
