#include "fgring/fol.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <unordered_map>

#include "fgring/errors.hpp"

namespace fgring::fol {

TermPtr var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr constant(const Integer& c) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Const;
  t->value = c;
  return t;
}

namespace {

TermPtr make_term(Term::Kind k, std::vector<TermPtr> args, unsigned long e = 0) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->args = std::move(args);
  t->exponent = e;
  return t;
}

FormulaPtr make_formula(Formula::Kind k, std::vector<FormulaPtr> args = {}) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->args = std::move(args);
  return f;
}

FormulaPtr make_quantifier(Formula::Kind k, std::string v, FormulaPtr body) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->var = std::move(v);
  f->body = std::move(body);
  return f;
}

}  // namespace

TermPtr add(std::vector<TermPtr> args) {
  if (args.size() < 2) throw std::invalid_argument("(+) needs at least two arguments");
  return make_term(Term::Kind::Add, std::move(args));
}
TermPtr sub(TermPtr a, TermPtr b) { return make_term(Term::Kind::Sub, {std::move(a), std::move(b)}); }
TermPtr neg(TermPtr a) { return make_term(Term::Kind::Neg, {std::move(a)}); }
TermPtr mul(std::vector<TermPtr> args) {
  if (args.size() < 2) throw std::invalid_argument("(*) needs at least two arguments");
  return make_term(Term::Kind::Mul, std::move(args));
}
TermPtr power(TermPtr a, unsigned long e) { return make_term(Term::Kind::Pow, {std::move(a)}, e); }

FormulaPtr truth() { return make_formula(Formula::Kind::True); }
FormulaPtr falsity() { return make_formula(Formula::Kind::False); }
FormulaPtr eq(TermPtr a, TermPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Eq;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}
FormulaPtr negation(FormulaPtr f) { return make_formula(Formula::Kind::Not, {std::move(f)}); }
FormulaPtr conj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return truth();
  if (fs.size() == 1) return fs[0];
  return make_formula(Formula::Kind::And, std::move(fs));
}
FormulaPtr disj(std::vector<FormulaPtr> fs) {
  if (fs.empty()) return falsity();
  if (fs.size() == 1) return fs[0];
  return make_formula(Formula::Kind::Or, std::move(fs));
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) { return make_formula(Formula::Kind::Implies, {std::move(a), std::move(b)}); }
FormulaPtr iff(FormulaPtr a, FormulaPtr b) { return make_formula(Formula::Kind::Iff, {std::move(a), std::move(b)}); }
FormulaPtr forall(std::string v, FormulaPtr body) { return make_quantifier(Formula::Kind::Forall, std::move(v), std::move(body)); }
FormulaPtr exists(std::string v, FormulaPtr body) { return make_quantifier(Formula::Kind::Exists, std::move(v), std::move(body)); }

// ---------------------------------------------------------------------------
// Printing

std::string to_sexpr(const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Var: return t->name;
    case Term::Kind::Const: return t->value.get_str();
    case Term::Kind::Pow: return "(^ " + to_sexpr(t->args[0]) + " " + std::to_string(t->exponent) + ")";
    default: break;
  }
  std::string op = t->kind == Term::Kind::Add ? "+" : t->kind == Term::Kind::Mul ? "*" : "-";
  std::string s = "(" + op;
  for (const auto& a : t->args) s += " " + to_sexpr(a);
  return s + ")";
}

std::string to_sexpr(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True: return "true";
    case Formula::Kind::False: return "false";
    case Formula::Kind::Eq: return "(= " + to_sexpr(f->lhs) + " " + to_sexpr(f->rhs) + ")";
    case Formula::Kind::Forall: return "(forall " + f->var + " " + to_sexpr(f->body) + ")";
    case Formula::Kind::Exists: return "(exists " + f->var + " " + to_sexpr(f->body) + ")";
    default: break;
  }
  static const std::map<Formula::Kind, std::string> names{{Formula::Kind::Not, "not"},
                                                          {Formula::Kind::And, "and"},
                                                          {Formula::Kind::Or, "or"},
                                                          {Formula::Kind::Implies, "implies"},
                                                          {Formula::Kind::Iff, "iff"}};
  std::string s = "(" + names.at(f->kind);
  for (const auto& a : f->args) s += " " + to_sexpr(a);
  return s + ")";
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  std::string text;
  std::size_t offset;
};

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) { tokenize(); }

  FormulaPtr formula_eof() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

  TermPtr term_eof() {
    TermPtr t = term();
    expect_end();
    return t;
  }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')') {
        tokens_.push_back({std::string(1, c), i++});
      } else {
        std::size_t start = i;
        while (i < text_.size() && !std::isspace(static_cast<unsigned char>(text_[i])) && text_[i] != '(' &&
               text_[i] != ')')
          ++i;
        tokens_.push_back({std::string(text_.substr(start, i - start)), start});
      }
    }
  }

  [[noreturn]] void fail(const std::string& message, std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(message, offset, line, col);
  }

  const Token& peek() const {
    static const Token end{"", 0};
    return pos_ < tokens_.size() ? tokens_[pos_] : end;
  }
  std::size_t here() const { return pos_ < tokens_.size() ? tokens_[pos_].offset : text_.size(); }
  bool at_end() const { return pos_ >= tokens_.size(); }

  Token next(const char* what) {
    if (at_end()) fail(std::string("unexpected end of input, expected ") + what, text_.size());
    return tokens_[pos_++];
  }

  void expect(const std::string& s) {
    std::size_t at = here();
    Token t = next(s.c_str());
    if (t.text != s) fail("expected '" + s + "'", at);
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input", here());
  }

  static bool is_integer(const std::string& s) {
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  }

  static bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
  }

  static bool is_keyword(const std::string& s) {
    static const std::set<std::string> kw{"true", "false", "and", "or", "not", "implies", "iff", "forall", "exists"};
    return kw.count(s) != 0;
  }

  std::string variable_name() {
    std::size_t at = here();
    Token t = next("variable");
    if (!is_identifier(t.text) || is_keyword(t.text)) fail("expected variable, found '" + t.text + "'", at);
    return t.text;
  }

  TermPtr term() {
    std::size_t at = here();
    Token t = next("term");
    if (t.text == ")") fail("unexpected ')'", at);
    if (t.text != "(") {
      if (is_integer(t.text)) return constant(Integer(t.text));
      if (is_identifier(t.text) && !is_keyword(t.text)) return var(t.text);
      fail("unexpected token '" + t.text + "' in term", at);
    }
    std::size_t op_at = here();
    Token op = next("operator");
    std::vector<TermPtr> args;
    if (op.text == "^") {
      TermPtr base = term();
      std::size_t e_at = here();
      Token e = next("exponent");
      if (!is_integer(e.text) || e.text[0] == '-') fail("expected non-negative exponent", e_at);
      expect(")");
      return power(base, std::stoul(e.text));
    }
    if (op.text != "+" && op.text != "-" && op.text != "*") fail("unknown term operator '" + op.text + "'", op_at);
    while (peek().text != ")" && !at_end()) args.push_back(term());
    expect(")");
    if (op.text == "-") {
      if (args.size() == 1) return neg(args[0]);
      if (args.size() == 2) return sub(args[0], args[1]);
      fail("'-' takes one or two arguments", op_at);
    }
    if (args.size() < 2) fail("'" + op.text + "' takes at least two arguments", op_at);
    return op.text == "+" ? add(std::move(args)) : mul(std::move(args));
  }

  FormulaPtr formula() {
    std::size_t at = here();
    Token t = next("formula");
    if (t.text == "true") return truth();
    if (t.text == "false") return falsity();
    if (t.text != "(") fail("expected formula, found '" + t.text + "'", at);
    std::size_t op_at = here();
    Token op = next("connective");
    if (op.text == "=") {
      TermPtr a = term();
      TermPtr b = term();
      expect(")");
      return eq(a, b);
    }
    if (op.text == "forall" || op.text == "exists") {
      std::string v = variable_name();
      FormulaPtr body = formula();
      expect(")");
      return op.text == "forall" ? forall(v, body) : exists(v, body);
    }
    std::vector<FormulaPtr> args;
    while (peek().text != ")" && !at_end()) args.push_back(formula());
    expect(")");
    if (op.text == "not") {
      if (args.size() != 1) fail("'not' takes one argument", op_at);
      return negation(args[0]);
    }
    if (op.text == "implies" || op.text == "iff") {
      if (args.size() != 2) fail("'" + op.text + "' takes two arguments", op_at);
      return op.text == "implies" ? implies(args[0], args[1]) : iff(args[0], args[1]);
    }
    if (op.text == "and" || op.text == "or") {
      if (args.size() < 2) fail("'" + op.text + "' takes at least two arguments", op_at);
      return make_formula(op.text == "and" ? Formula::Kind::And : Formula::Kind::Or, std::move(args));
    }
    fail("unknown connective '" + op.text + "'", op_at);
  }

  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return SexprParser(text).formula_eof(); }
TermPtr parse_term(std::string_view text) { return SexprParser(text).term_eof(); }

// ---------------------------------------------------------------------------
// Variables and substitution

std::set<std::string> free_variables(const TermPtr& t) {
  std::set<std::string> out;
  std::function<void(const TermPtr&)> walk = [&](const TermPtr& u) {
    if (u->kind == Term::Kind::Var) out.insert(u->name);
    for (const auto& a : u->args) walk(a);
  };
  walk(t);
  return out;
}

std::set<std::string> free_variables(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return {};
    case Formula::Kind::Eq: {
      auto a = free_variables(f->lhs);
      auto b = free_variables(f->rhs);
      a.insert(b.begin(), b.end());
      return a;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      auto s = free_variables(f->body);
      s.erase(f->var);
      return s;
    }
    default: {
      std::set<std::string> s;
      for (const auto& a : f->args) {
        auto b = free_variables(a);
        s.insert(b.begin(), b.end());
      }
      return s;
    }
  }
}

bool well_scoped(const FormulaPtr& f, const std::vector<std::string>& declared) {
  for (const auto& v : free_variables(f))
    if (std::find(declared.begin(), declared.end(), v) == declared.end()) return false;
  return true;
}

namespace {

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (unsigned k = 1;; ++k) {
    std::string candidate = base + std::to_string(k);
    if (!avoid.count(candidate)) return candidate;
  }
}

TermPtr substitute_term(const TermPtr& t, const std::string& v, const TermPtr& r) {
  if (t->kind == Term::Kind::Var) return t->name == v ? r : t;
  if (t->args.empty()) return t;
  std::vector<TermPtr> args;
  bool changed = false;
  for (const auto& a : t->args) {
    args.push_back(substitute_term(a, v, r));
    changed = changed || args.back() != a;
  }
  if (!changed) return t;
  auto copy = std::make_shared<Term>(*t);
  copy->args = std::move(args);
  return copy;
}

}  // namespace

FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
      return f;
    case Formula::Kind::Eq:
      return eq(substitute_term(f->lhs, v, t), substitute_term(f->rhs, v, t));
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      if (f->var == v) return f;
      auto body_free = free_variables(f->body);
      if (!body_free.count(v)) return f;
      auto term_free = free_variables(t);
      std::string bound = f->var;
      FormulaPtr body = f->body;
      if (term_free.count(bound)) {
        std::set<std::string> avoid = term_free;
        avoid.insert(body_free.begin(), body_free.end());
        avoid.insert(v);
        std::string renamed = fresh_name(bound, avoid);
        body = substitute(body, bound, var(renamed));
        bound = renamed;
      }
      return make_quantifier(f->kind, bound, substitute(body, v, t));
    }
    default: {
      std::vector<FormulaPtr> args;
      for (const auto& a : f->args) args.push_back(substitute(a, v, t));
      return make_formula(f->kind, std::move(args));
    }
  }
}

TermPtr from_polynomial(const Polynomial& p) {
  if (p.is_zero()) return constant(0);
  TermPtr acc;
  for (const auto& term : p.terms()) {
    std::vector<TermPtr> factors;
    Integer mag = abs(term.coeff);
    if (mag != 1 || term.monomial.is_one()) factors.push_back(constant(mag));
    for (std::size_t v = 0; v < term.monomial.size(); ++v) {
      if (term.monomial[v] == 0) continue;
      TermPtr x = var(p.context()->name(v));
      factors.push_back(term.monomial[v] == 1 ? x : power(x, term.monomial[v]));
    }
    TermPtr m = factors.size() == 1 ? factors[0] : mul(std::move(factors));
    if (!acc) {
      acc = term.coeff < 0 ? neg(m) : m;
    } else {
      acc = term.coeff < 0 ? sub(acc, m) : add({acc, m});
    }
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Emitters

FormulaPtr emit_jac(const FormulaPtr& phi, const std::string& designated, const std::string& out) {
  if (designated.empty() || out.empty()) throw std::invalid_argument("emit_jac: empty variable name");
  std::set<std::string> avoid = free_variables(phi);
  avoid.erase(designated);
  avoid.insert(out);
  std::string u = fresh_name("u", avoid);
  avoid.insert(u);
  std::string v = fresh_name("v", avoid);
  avoid.insert(v);
  std::string w = fresh_name("w", avoid);
  FormulaPtr phi_w = designated == w ? phi : substitute(phi, designated, var(w));
  FormulaPtr core = eq(mul({sub(constant(1), mul({var(out), var(u)})), var(v)}), add({constant(1), var(w)}));
  return forall(u, exists(v, exists(w, conj({core, phi_w}))));
}

namespace {

std::vector<std::string> y_slots(unsigned count) {
  std::vector<std::string> ys;
  for (unsigned i = 1; i <= count; ++i) ys.push_back("y" + std::to_string(i));
  return ys;
}

Emitted gamma(unsigned n) {
  Emitted e;
  e.slots.push_back("x");
  auto ys = y_slots(n);
  e.slots.insert(e.slots.end(), ys.begin(), ys.end());
  if (n == 0) {
    e.formula = eq(var("x"), constant(0));
    return e;
  }
  std::vector<TermPtr> summands;
  for (unsigned i = 1; i <= n; ++i) summands.push_back(mul({var(ys[i - 1]), var("z" + std::to_string(i))}));
  FormulaPtr f = eq(var("x"), summands.size() == 1 ? summands[0] : add(std::move(summands)));
  for (unsigned i = n; i >= 1; --i) f = exists("z" + std::to_string(i), f);
  e.formula = f;
  return e;
}

Emitted jac_n(unsigned n) {
  Emitted g = gamma(n);
  return {emit_jac(g.formula, "x", "x"), g.slots};
}

}  // namespace

Emitted emit_kronecker(unsigned n, Kronecker which) {
  switch (which) {
    case Kronecker::Gamma: return gamma(n);
    case Kronecker::Jac: return jac_n(n);
    case Kronecker::PrimeIdeal: return jac_n(n + 1);
    default: break;
  }
  Emitted j = jac_n(n + 1);
  auto at = [&](const TermPtr& t) { return substitute(j.formula, "x", t); };
  std::vector<std::string> slots(j.slots.begin() + 1, j.slots.end());
  FormulaPtr pi = forall("v", forall("w", implies(at(mul({var("v"), var("w")})), disj({at(var("v")), at(var("w"))}))));
  FormulaPtr mu = forall("v", exists("w", disj({at(var("v")), at(sub(constant(1), mul({var("v"), var("w")})))})));
  if (which == Kronecker::Pi) return {pi, slots};
  if (which == Kronecker::Mu) return {mu, slots};
  return {conj({pi, negation(mu)}), slots};
}

Kronecker kronecker_from_name(const std::string& name) {
  static const std::map<std::string, Kronecker> names{
      {"gamma", Kronecker::Gamma}, {"jac", Kronecker::Jac}, {"pi", Kronecker::Pi},
      {"mu", Kronecker::Mu},       {"Pi", Kronecker::PrimeIdeal}, {"prime-ideal", Kronecker::PrimeIdeal},
      {"pi-circ", Kronecker::PiCirc}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown formula '" + name + "' (gamma, jac, pi, mu, Pi, pi-circ)");
  return it->second;
}

Emitted emit_morphism_formula(const RingPresentation& ring) {
  std::vector<FormulaPtr> atoms;
  for (const auto& g : ring.relations.generators()) atoms.push_back(eq(from_polynomial(g), constant(0)));
  return {conj(std::move(atoms)), ring.ctx->names()};
}

// ---------------------------------------------------------------------------
// Finite rings

FiniteRingTable FiniteRingTable::enumerate(const RingPresentation& ring, std::size_t cap, const GroebnerConfig& config) {
  if (cap == 0 || cap > 65535) throw std::invalid_argument("finite ring cap must be in [1, 65535]");
  FiniteRingTable t;
  t.ring_ = ring;
  t.basis_ = strong_groebner(ring.relations, MonomialOrder::grevlex(), config);
  auto intern = [&](const Polynomial& p) -> Index {
    Polynomial r = normal_form(p, t.basis_);
    std::string key = to_string(r);
    auto it = t.by_text_.find(key);
    if (it != t.by_text_.end()) return it->second;
    if (t.elements_.size() >= cap)
      throw ResourceCapExceeded("finite ring enumeration exceeded " + std::to_string(cap) + " elements");
    Index idx = static_cast<Index>(t.elements_.size());
    t.elements_.push_back(r);
    t.by_text_.emplace(std::move(key), idx);
    return idx;
  };
  t.zero_ = intern(Polynomial::constant(ring.ctx, 0));
  t.one_ = intern(Polynomial::constant(ring.ctx, 1));
  for (std::size_t v = 0; v < ring.ctx->size(); ++v) t.vars_.push_back(intern(Polynomial::variable(ring.ctx, v)));
  struct Entry {
    Index a, b, sum, prod;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < t.elements_.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      Index s = intern(t.elements_[i] + t.elements_[j]);
      Index p = intern(t.elements_[i] * t.elements_[j]);
      entries.push_back({static_cast<Index>(i), static_cast<Index>(j), s, p});
    }
  std::size_t n = t.elements_.size();
  t.add_.assign(n * n, 0);
  t.mul_.assign(n * n, 0);
  for (const auto& e : entries) {
    t.add_[e.a * n + e.b] = t.add_[e.b * n + e.a] = e.sum;
    t.mul_[e.a * n + e.b] = t.mul_[e.b * n + e.a] = e.prod;
  }
  t.neg_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b)
      if (t.add_[a * n + b] == t.zero_) {
        t.neg_[a] = static_cast<Index>(b);
        found = true;
      }
    if (!found) throw InvariantViolation("finite ring: element without additive inverse");
  }
  t.check_axioms();
  return t;
}

void FiniteRingTable::check_axioms() const {
  std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    Index ia = static_cast<Index>(a);
    if (add(ia, zero_) != ia || mul(ia, one_) != ia) throw InvariantViolation("finite ring: identity law fails");
    for (std::size_t b = 0; b < n; ++b) {
      Index ib = static_cast<Index>(b);
      if (add(ia, ib) != add(ib, ia) || mul(ia, ib) != mul(ib, ia))
        throw InvariantViolation("finite ring: commutativity fails");
      for (std::size_t c = 0; c < n; ++c) {
        Index ic = static_cast<Index>(c);
        if (add(add(ia, ib), ic) != add(ia, add(ib, ic))) throw InvariantViolation("finite ring: + not associative");
        if (mul(mul(ia, ib), ic) != mul(ia, mul(ib, ic))) throw InvariantViolation("finite ring: * not associative");
        if (mul(ia, add(ib, ic)) != add(mul(ia, ib), mul(ia, ic)))
          throw InvariantViolation("finite ring: distributivity fails");
      }
    }
  }
}

FiniteRingTable::Index FiniteRingTable::index_of(const Polynomial& p) const {
  auto it = by_text_.find(to_string(normal_form(p, basis_)));
  if (it == by_text_.end()) throw InvariantViolation("finite ring: element outside the table");
  return it->second;
}

FiniteRingTable::Index FiniteRingTable::from_integer(const Integer& c) const {
  return index_of(Polynomial::constant(ring_.ctx, c));
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using Index = FiniteRingTable::Index;

struct CTerm {
  Term::Kind kind = Term::Kind::Const;
  std::size_t slot = 0;
  Index value = 0;
  unsigned long exponent = 0;
  std::vector<CTerm> args;
};

struct CNode {
  Formula::Kind kind = Formula::Kind::True;
  CTerm lhs, rhs;
  std::vector<CNode> args;
  std::size_t slot = 0;  // bound slot for quantifiers
  std::vector<std::size_t> free_slots;
  bool memoize = false;
  std::unordered_map<std::uint64_t, bool> memo;
};

class Evaluator {
 public:
  Evaluator(const FormulaPtr& f, const FiniteRingTable& table, const std::vector<std::string>& params)
      : table_(table) {
    for (unsigned b = 1; (std::size_t{1} << b) <= table.size(); ++b) bits_ = b + 1;
    std::map<std::string, std::vector<std::size_t>> scope;
    for (const auto& p : params) {
      scope[p].push_back(slots_++);
    }
    root_ = compile(f, scope);
    env_.assign(slots_, 0);
  }

  bool run(const std::vector<Index>& values) {
    std::copy(values.begin(), values.end(), env_.begin());
    return eval(root_);
  }

 private:
  CTerm compile_term(const TermPtr& t, std::map<std::string, std::vector<std::size_t>>& scope) {
    CTerm c;
    c.kind = t->kind;
    switch (t->kind) {
      case Term::Kind::Var: {
        auto it = scope.find(t->name);
        if (it == scope.end() || it->second.empty())
          throw std::invalid_argument("unbound variable '" + t->name + "'");
        c.slot = it->second.back();
        break;
      }
      case Term::Kind::Const:
        c.value = table_.from_integer(t->value);
        break;
      default:
        c.exponent = t->exponent;
        for (const auto& a : t->args) c.args.push_back(compile_term(a, scope));
    }
    return c;
  }

  CNode compile(const FormulaPtr& f, std::map<std::string, std::vector<std::size_t>>& scope) {
    CNode n;
    n.kind = f->kind;
    switch (f->kind) {
      case Formula::Kind::True:
      case Formula::Kind::False:
        break;
      case Formula::Kind::Eq:
        n.lhs = compile_term(f->lhs, scope);
        n.rhs = compile_term(f->rhs, scope);
        break;
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        for (const auto& v : free_variables(f)) n.free_slots.push_back(scope.at(v).back());
        n.memoize = !n.free_slots.empty() && n.free_slots.size() * bits_ <= 63;
        n.slot = slots_++;
        scope[f->var].push_back(n.slot);
        n.args.push_back(compile(f->body, scope));
        scope[f->var].pop_back();
        break;
      }
      default:
        for (const auto& a : f->args) n.args.push_back(compile(a, scope));
    }
    return n;
  }

  Index value(const CTerm& t) const {
    switch (t.kind) {
      case Term::Kind::Var: return env_[t.slot];
      case Term::Kind::Const: return t.value;
      case Term::Kind::Neg: return table_.neg(value(t.args[0]));
      case Term::Kind::Sub: return table_.add(value(t.args[0]), table_.neg(value(t.args[1])));
      case Term::Kind::Add: {
        Index acc = value(t.args[0]);
        for (std::size_t k = 1; k < t.args.size(); ++k) acc = table_.add(acc, value(t.args[k]));
        return acc;
      }
      case Term::Kind::Mul: {
        Index acc = value(t.args[0]);
        for (std::size_t k = 1; k < t.args.size(); ++k) acc = table_.mul(acc, value(t.args[k]));
        return acc;
      }
      case Term::Kind::Pow: {
        Index base = value(t.args[0]), acc = table_.one();
        for (unsigned long e = t.exponent; e > 0; e >>= 1) {
          if (e & 1) acc = table_.mul(acc, base);
          base = table_.mul(base, base);
        }
        return acc;
      }
    }
    return 0;
  }

  bool eval(CNode& n) {
    switch (n.kind) {
      case Formula::Kind::True: return true;
      case Formula::Kind::False: return false;
      case Formula::Kind::Eq: return value(n.lhs) == value(n.rhs);
      case Formula::Kind::Not: return !eval(n.args[0]);
      case Formula::Kind::And:
        for (auto& a : n.args)
          if (!eval(a)) return false;
        return true;
      case Formula::Kind::Or:
        for (auto& a : n.args)
          if (eval(a)) return true;
        return false;
      case Formula::Kind::Implies: return !eval(n.args[0]) || eval(n.args[1]);
      case Formula::Kind::Iff: return eval(n.args[0]) == eval(n.args[1]);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        std::uint64_t key = 0;
        if (n.memoize) {
          for (auto s : n.free_slots) key = (key << bits_) | env_[s];
          auto it = n.memo.find(key);
          if (it != n.memo.end()) return it->second;
        }
        bool want = n.kind == Formula::Kind::Exists;
        bool result = !want;
        Index saved = env_[n.slot];
        for (std::size_t a = 0; a < table_.size(); ++a) {
          env_[n.slot] = static_cast<Index>(a);
          if (eval(n.args[0]) == want) {
            result = want;
            break;
          }
        }
        env_[n.slot] = saved;
        if (n.memoize) n.memo.emplace(key, result);
        return result;
      }
    }
    return false;
  }

  const FiniteRingTable& table_;
  std::size_t slots_ = 0;
  unsigned bits_ = 1;
  CNode root_;
  std::vector<Index> env_;
};

}  // namespace

bool eval(const FormulaPtr& f, const FiniteRingTable& table, const Assignment& params) {
  std::vector<std::string> names;
  std::vector<Index> values;
  for (const auto& v : free_variables(f)) {
    auto it = params.find(v);
    if (it == params.end()) throw std::invalid_argument("unbound variable '" + v + "'");
    names.push_back(v);
    values.push_back(it->second);
  }
  for (auto v : values)
    if (v >= table.size()) throw std::out_of_range("assignment outside the ring table");
  Evaluator ev(f, table, names);
  return ev.run(values);
}

std::vector<std::vector<Index>> defined_set(const FormulaPtr& f, const FiniteRingTable& table,
                                            const std::vector<std::string>& free_order, const Assignment& bound) {
  std::vector<std::string> names;
  std::vector<Index> values;
  for (const auto& [v, idx] : bound) {
    names.push_back(v);
    values.push_back(idx);
  }
  for (const auto& v : free_order) {
    if (bound.count(v)) throw std::invalid_argument("variable '" + v + "' is both bound and enumerated");
    names.push_back(v);
    values.push_back(0);
  }
  for (const auto& v : free_variables(f))
    if (std::find(names.begin(), names.end(), v) == names.end())
      throw std::invalid_argument("unbound variable '" + v + "'");
  Evaluator ev(f, table, names);
  std::vector<std::vector<Index>> out;
  std::size_t k = free_order.size(), base = bound.size();
  std::vector<Index> tuple(k, 0);
  for (;;) {
    std::copy(tuple.begin(), tuple.end(), values.begin() + static_cast<long>(base));
    if (ev.run(values)) out.push_back(tuple);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++tuple[i] < table.size()) break;
      tuple[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace fgring::fol
