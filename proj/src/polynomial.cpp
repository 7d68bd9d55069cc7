#include "fgring/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

#include "expr_parser.hpp"
#include "fgring/errors.hpp"

namespace fgring {

Context::Context(std::vector<std::string> names) : names_(std::move(names)) {}

std::optional<std::size_t> Context::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

namespace {

void require_same_context(const Polynomial& f, const Polynomial& g) {
  if (!f.context() || !g.context() || !f.context()->same_as(*g.context()))
    throw ContextMismatch("polynomials live over different variable contexts");
}

// Merge of two descending term lists, the second scaled by `c` and shifted by `m`.
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, const Integer& c,
                        const Monomial* m, const MonomialOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](std::size_t k) { return m ? b[k].monomial * *m : b[k].monomial; };
  Monomial bm;
  bool have_bm = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = shifted(j);
      have_bm = true;
    }
    if (j >= b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i >= a.size()) {
      out.push_back({bm, c * b[j].coeff});
      ++j;
      have_bm = false;
      continue;
    }
    int cmp = order.compare(a[i].monomial, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, c * b[j].coeff});
      ++j;
      have_bm = false;
    } else {
      Integer s = a[i].coeff + c * b[j].coeff;
      if (s != 0) out.push_back({bm, std::move(s)});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::from_sorted(ContextPtr ctx, MonomialOrder order, std::vector<Term> terms) {
  Polynomial p(std::move(ctx), order);
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::constant(ContextPtr ctx, const Integer& c, MonomialOrder order) {
  Polynomial p(ctx, order);
  if (c != 0) p.terms_.push_back({Monomial(ctx->size()), c});
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index, MonomialOrder order) {
  Polynomial p(ctx, order);
  p.terms_.push_back({Monomial::variable(ctx->size(), index), Integer(1)});
  return p;
}

Polynomial Polynomial::term(ContextPtr ctx, const Monomial& m, const Integer& c, MonomialOrder order) {
  Polynomial p(std::move(ctx), order);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> terms, MonomialOrder order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order.compare(a.monomial, b.monomial) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return from_sorted(std::move(ctx), order, std::move(out));
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

Exponent Polynomial::degree_in(std::size_t var) const {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

std::vector<bool> Polynomial::variables_used() const {
  std::vector<bool> used(nvars(), false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < used.size(); ++i)
      if (t.monomial[i] != 0) used[i] = true;
  return used;
}

Integer Polynomial::coeff_of(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.monomial == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(ctx_, terms_, order);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::scaled(const Integer& c) const {
  if (c == 0) return Polynomial(ctx_, order_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Integer& c, const Monomial& m) const {
  if (c == 0) return Polynomial(ctx_, order_);
  Polynomial r = *this;
  for (auto& t : r.terms_) {
    t.coeff *= c;
    t.monomial = t.monomial * m;
  }
  return r;
}

Polynomial Polynomial::add_scaled(const Integer& c, const Monomial& m, const Polynomial& g) const {
  if (c == 0 || g.is_zero()) return *this;
  return from_sorted(ctx_, order_, merge(terms_, g.terms_, c, &m, order_));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (g.order() != f.order()) return f + g.with_order(f.order());
  return Polynomial::from_sorted(f.context(), f.order(), merge(f.terms(), g.terms(), Integer(1), nullptr, f.order()));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (g.order() != f.order()) return f - g.with_order(f.order());
  return Polynomial::from_sorted(f.context(), f.order(), merge(f.terms(), g.terms(), Integer(-1), nullptr, f.order()));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.context(), f.order());
  if (g.size() == 1) return f.mul_term(g.terms()[0].coeff, g.terms()[0].monomial);
  if (f.size() == 1) return g.with_order(f.order()).mul_term(f.terms()[0].coeff, f.terms()[0].monomial);
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) acc[a.monomial * b.monomial] += a.coeff * b.coeff;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return f.order().compare(a.monomial, b.monomial) > 0; });
  return Polynomial::from_sorted(f.context(), f.order(), std::move(terms));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) return true;
  if (!f.context() || !g.context() || !f.context()->same_as(*g.context())) return false;
  if (f.order() == g.order()) return f.terms() == g.terms();
  return f.terms() == g.with_order(f.order()).terms();
}

Polynomial Polynomial::pow(unsigned long e) const {
  Polynomial result = constant(ctx_, 1, order_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return f + g;
    case ArithOp::Sub: return f - g;
    case ArithOp::Mul: return f * g;
  }
  return f;
}

Polynomial exact_div_int(const Polynomial& f, const Integer& n) {
  if (n == 0) throw std::invalid_argument("exact_div_int: division by zero");
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), n.get_mpz_t()))
      throw NotDivisible("exact_div_int: coefficient " + t.coeff.get_str() + " is not divisible by " +
                         n.get_str());
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), n.get_mpz_t());
  }
  return Polynomial::from_sorted(f.context(), f.order(), std::move(terms));
}

Polynomial exact_div(const Polynomial& f, const Polynomial& g) {
  require_same_context(f, g);
  if (g.is_zero()) throw std::invalid_argument("exact_div: division by zero polynomial");
  Polynomial gg = g.with_order(f.order());
  Polynomial r = f;
  std::vector<Term> q;
  const Term& lt = gg.leading_term();
  while (!r.is_zero()) {
    const Term& t = r.leading_term();
    if (!lt.monomial.divides(t.monomial) || !mpz_divisible_p(t.coeff.get_mpz_t(), lt.coeff.get_mpz_t()))
      throw NotDivisible("exact_div: divisor does not divide dividend");
    Integer c = t.coeff / lt.coeff;
    Monomial m = t.monomial / lt.monomial;
    r = r.add_scaled(-c, m, gg);
    q.push_back({std::move(m), std::move(c)});
  }
  return Polynomial::from_sorted(f.context(), f.order(), std::move(q));
}

Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images,
                      const ContextPtr& target, MonomialOrder order) {
  std::vector<std::vector<Polynomial>> powers(f.nvars());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) {
      if (var >= images.size() || !images[var])
        throw MissingAssignment("substitute: no image for variable " + f.context()->name(var));
      cache.push_back(Polynomial::constant(target, 1, order));
      cache.push_back(images[var]->with_order(order));
    }
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coeff, order);
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0) prod = prod * power(i, t.monomial[i]);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::from_terms(target, std::move(acc), order);
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment) {
  ContextPtr target;
  for (const auto& [name, p] : assignment) {
    if (!target) {
      target = p.context();
    } else if (!target->same_as(*p.context())) {
      throw ContextMismatch("substitute: images live over different contexts");
    }
  }
  if (!target) target = f.context();
  std::vector<std::optional<Polynomial>> images(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto it = assignment.find(f.context()->name(i));
    if (it != assignment.end()) images[i] = it->second;
  }
  return substitute(f, images, target, f.order());
}

Polynomial reduce_mod(const Polynomial& f, const Integer& p) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Integer c = floor_mod(t.coeff, p);
    if (c != 0) terms.push_back({t.monomial, std::move(c)});
  }
  return Polynomial::from_sorted(f.context(), f.order(), std::move(terms));
}

Integer integer_content(const Polynomial& f) {
  Integer g = 0;
  for (const auto& t : f.terms()) {
    g = gcd(g, t.coeff);
    if (g == 1) break;
  }
  return g;
}

Polynomial primitive_part(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer c = integer_content(f);
  if (f.leading_coeff() < 0) c = -c;
  return c == 1 ? f : exact_div_int(f, c);
}

Polynomial rename(const Polynomial& f, const ContextPtr& target, std::span<const std::size_t> var_map,
                  MonomialOrder order) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target->size());
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0) m[var_map[i]] += t.monomial[i];
    terms.push_back({std::move(m), t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms), order);
}

Polynomial embed(const Polynomial& f, const ContextPtr& target, MonomialOrder order) {
  std::vector<std::size_t> map(f.nvars());
  auto used = f.variables_used();
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    auto idx = target->index_of(f.context()->name(i));
    if (!idx) {
      if (used[i]) throw ContextMismatch("embed: variable " + f.context()->name(i) + " missing in target");
      map[i] = 0;
    } else {
      map[i] = *idx;
    }
  }
  return rename(f, target, map, order);
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = t.coeff < 0;
    Integer mag = abs(t.coeff);
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f.context()->name(i);
      if (t.monomial[i] > 1) mono += "^" + std::to_string(t.monomial[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

namespace detail {

namespace {

Polynomial parse_factor(Cursor& cur, const ContextPtr& ctx, MonomialOrder order);

Polynomial parse_primary(Cursor& cur, const ContextPtr& ctx, MonomialOrder order) {
  char c = cur.peek();
  if (c == '(') {
    cur.expect('(');
    Polynomial p = parse_expr(cur, ctx, order);
    cur.expect(')');
    return p;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial::constant(ctx, cur.integer(), order);
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    cur.skip_ws();
    std::size_t at = cur.pos();
    std::string name = cur.identifier();
    auto idx = ctx->index_of(name);
    if (!idx) cur.fail_at("unknown variable '" + name + "'", at);
    return Polynomial::variable(ctx, *idx, order);
  }
  if (c == '\0') cur.fail("unexpected end of input");
  cur.fail(std::string("unexpected character '") + c + "'");
}

Polynomial parse_factor(Cursor& cur, const ContextPtr& ctx, MonomialOrder order) {
  if (cur.accept('-')) return -parse_factor(cur, ctx, order);
  if (cur.accept('+')) return parse_factor(cur, ctx, order);
  Polynomial base = parse_primary(cur, ctx, order);
  while (cur.accept('^')) {
    Integer e = cur.integer();
    if (!e.fits_ulong_p() || e > 100000) cur.fail("exponent too large");
    base = base.pow(e.get_ui());
  }
  return base;
}

Polynomial parse_term(Cursor& cur, const ContextPtr& ctx, MonomialOrder order) {
  Polynomial p = parse_factor(cur, ctx, order);
  while (cur.accept('*')) p = p * parse_factor(cur, ctx, order);
  return p;
}

}  // namespace

Polynomial parse_expr(Cursor& cur, const ContextPtr& ctx, MonomialOrder order) {
  Polynomial p = parse_term(cur, ctx, order);
  for (;;) {
    if (cur.accept('+')) {
      p = p + parse_term(cur, ctx, order);
    } else if (cur.accept('-')) {
      p = p - parse_term(cur, ctx, order);
    } else {
      return p;
    }
  }
}

}  // namespace detail

Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx, MonomialOrder order) {
  detail::Cursor cur(text);
  Polynomial p = detail::parse_expr(cur, ctx, order);
  if (!cur.at_end()) cur.fail("unexpected trailing input");
  return p;
}

}  // namespace fgring
