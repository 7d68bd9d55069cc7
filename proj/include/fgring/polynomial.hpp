#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fgring/integer.hpp"
#include "fgring/monomial.hpp"

namespace fgring {

/// Named variables of a polynomial ring Z[x1..xn]. Two contexts are
/// compatible iff their name lists agree.
class Context {
 public:
  explicit Context(std::vector<std::string> names);

  static std::shared_ptr<const Context> make(std::vector<std::string> names) {
    return std::make_shared<const Context>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  bool same_as(const Context& other) const { return this == &other || names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const Context>;

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.monomial == b.monomial;
  }
};

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept sorted descending in the polynomial's monomial order, with no zero
/// coefficients and no repeated monomials. Values are immutable in practice:
/// every operation returns a new polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(ContextPtr ctx, MonomialOrder order = MonomialOrder::grevlex())
      : ctx_(std::move(ctx)), order_(order) {}

  static Polynomial constant(ContextPtr ctx, const Integer& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(ContextPtr ctx, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial term(ContextPtr ctx, const Monomial& m, const Integer& c,
                         MonomialOrder order = MonomialOrder::grevlex());
  /// Combines duplicate monomials, drops zeros and sorts.
  static Polynomial from_terms(ContextPtr ctx, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());
  /// Trusts `terms` to be already normalized (sorted descending, nonzero, distinct).
  static Polynomial from_sorted(ContextPtr ctx, MonomialOrder order, std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  std::size_t nvars() const { return ctx_ ? ctx_->size() : 0; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  /// Constant value; zero for the zero polynomial. Requires is_constant().
  Integer constant_value() const { return terms_.empty() ? Integer(0) : terms_[0].coeff; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().monomial; }
  const Integer& leading_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const;
  Exponent degree_in(std::size_t var) const;
  /// Per variable: does it occur in some term.
  std::vector<bool> variables_used() const;
  /// Coefficient of an exact monomial (zero when absent).
  Integer coeff_of(const Monomial& m) const;

  Polynomial with_order(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial scaled(const Integer& c) const;
  Polynomial mul_term(const Integer& c, const Monomial& m) const;
  /// this + c * m * g, computed by a single merge.
  Polynomial add_scaled(const Integer& c, const Monomial& m, const Polynomial& g) const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);
  friend bool operator!=(const Polynomial& f, const Polynomial& g) { return !(f == g); }

  Polynomial pow(unsigned long e) const;

 private:
  ContextPtr ctx_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

enum class ArithOp { Add, Sub, Mul };

/// Exact add/sub/mul; throws ContextMismatch when contexts differ.
Polynomial arith(const Polynomial& f, const Polynomial& g, ArithOp op);

/// g with n*g = f; throws NotDivisible when some coefficient is not a multiple of n.
Polynomial exact_div_int(const Polynomial& f, const Integer& n);

/// Exact division by a polynomial; throws NotDivisible when g does not divide f.
Polynomial exact_div(const Polynomial& f, const Polynomial& g);

/// Replaces variable i of f by images[i]; all images share one target context.
/// A missing (nullopt) image for an occurring variable throws MissingAssignment.
Polynomial substitute(const Polynomial& f, std::span<const std::optional<Polynomial>> images,
                      const ContextPtr& target, MonomialOrder order = MonomialOrder::grevlex());

/// Name-keyed substitution; unassigned variables that occur throw MissingAssignment.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment);

/// Coefficients reduced to [0, p).
Polynomial reduce_mod(const Polynomial& f, const Integer& p);

/// gcd of all coefficients, zero for the zero polynomial.
Integer integer_content(const Polynomial& f);

/// f divided by its content, with positive leading coefficient (zero stays zero).
Polynomial primitive_part(const Polynomial& f);

/// Moves f into `target`, sending variable i to target variable var_map[i].
Polynomial rename(const Polynomial& f, const ContextPtr& target, std::span<const std::size_t> var_map,
                  MonomialOrder order = MonomialOrder::grevlex());

/// Re-expresses f in a context that contains all of f's variable names.
Polynomial embed(const Polynomial& f, const ContextPtr& target,
                 MonomialOrder order = MonomialOrder::grevlex());

/// Canonical text: terms descending, `^` powers, `*` products, e.g. `x1^2*x2 - 3*x2 + 7`.
std::string to_string(const Polynomial& f);

/// Parses integer literals, variables of `ctx`, `+ - * ^` and parentheses.
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx,
                            MonomialOrder order = MonomialOrder::grevlex());

}  // namespace fgring
