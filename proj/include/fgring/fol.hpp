#pragma once

// First-order formulas in the language of rings, their s-expression form,
// emitters for the radical and prime-ideal formulas, and evaluation over
// finite rings given by full operation tables.

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fgring/integer.hpp"
#include "fgring/spectrum.hpp"

namespace fgring::fol {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Var, Const, Add, Sub, Neg, Mul, Pow };
  Kind kind = Kind::Const;
  std::string name;            // Var
  Integer value;               // Const
  std::vector<TermPtr> args;   // Add/Mul: >= 2, Sub: 2, Neg/Pow: 1
  unsigned long exponent = 0;  // Pow
};

TermPtr var(std::string name);
TermPtr constant(const Integer& c);
TermPtr add(std::vector<TermPtr> args);
TermPtr sub(TermPtr a, TermPtr b);
TermPtr neg(TermPtr a);
TermPtr mul(std::vector<TermPtr> args);
TermPtr power(TermPtr a, unsigned long e);

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { True, False, Eq, Not, And, Or, Implies, Iff, Forall, Exists };
  Kind kind = Kind::True;
  TermPtr lhs, rhs;               // Eq
  std::vector<FormulaPtr> args;   // Not: 1, And/Or: >= 1, Implies/Iff: 2
  std::string var;                // Forall/Exists
  FormulaPtr body;                // Forall/Exists
};

FormulaPtr truth();
FormulaPtr falsity();
FormulaPtr eq(TermPtr a, TermPtr b);
FormulaPtr negation(FormulaPtr f);
FormulaPtr conj(std::vector<FormulaPtr> fs);
FormulaPtr disj(std::vector<FormulaPtr> fs);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(std::string v, FormulaPtr body);
FormulaPtr exists(std::string v, FormulaPtr body);

std::string to_sexpr(const TermPtr& t);
std::string to_sexpr(const FormulaPtr& f);
/// Inverse of to_sexpr; throws ParseError with line and column.
FormulaPtr parse_formula(std::string_view text);
TermPtr parse_term(std::string_view text);

std::set<std::string> free_variables(const TermPtr& t);
std::set<std::string> free_variables(const FormulaPtr& f);
/// Every free variable is among `declared`.
bool well_scoped(const FormulaPtr& f, const std::vector<std::string>& declared);

/// Capture-avoiding substitution of a term for a free variable.
FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& t);

/// Polynomial as a term: left-folded sum of monomials in canonical order.
TermPtr from_polynomial(const Polynomial& p);

/// A formula with its ordered free-variable slots.
struct Emitted {
  FormulaPtr formula;
  std::vector<std::string> slots;
};

/// Jac(φ)(out) := ∀u∃v∃w((1 - out*u)*v = 1 + w ∧ φ(w)), where φ(w) replaces
/// `designated` by the bound w. Bound names are chosen fresh.
FormulaPtr emit_jac(const FormulaPtr& phi, const std::string& designated, const std::string& out = "x");

enum class Kronecker { Gamma, Jac, Pi, Mu, PrimeIdeal, PiCirc };

/// γ_n(x, y1..yn), Jac_n(x, y1..yn), π_n(y1..y_{n+1}), μ_n(y1..y_{n+1}),
/// Π_n(x, y1..y_{n+1}) and π°_n = π_n ∧ ¬μ_n.
Emitted emit_kronecker(unsigned n, Kronecker which);
Kronecker kronecker_from_name(const std::string& name);

/// Conjunction of `relation = 0` over the relations; `true` when there are none.
Emitted emit_morphism_formula(const RingPresentation& ring);

/// Finite commutative ring as full operation tables over canonical elements.
class FiniteRingTable {
 public:
  using Index = std::uint16_t;

  /// Closure of {0, 1, variable images} under + and *; throws
  /// ResourceCapExceeded past `cap` elements and InvariantViolation when a
  /// ring axiom fails on the tables.
  static FiniteRingTable enumerate(const RingPresentation& ring, std::size_t cap = 64,
                                   const GroebnerConfig& config = {});

  std::size_t size() const { return elements_.size(); }
  const std::vector<Polynomial>& elements() const { return elements_; }
  Index zero() const { return zero_; }
  Index one() const { return one_; }
  Index add(Index a, Index b) const { return add_[a * size() + b]; }
  Index mul(Index a, Index b) const { return mul_[a * size() + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index from_integer(const Integer& c) const;
  Index variable(std::size_t i) const { return vars_.at(i); }
  /// Index of an element given by a polynomial of the ring's context.
  Index index_of(const Polynomial& p) const;
  std::string element_text(Index a) const { return to_string(elements_[a]); }

 private:
  void check_axioms() const;

  RingPresentation ring_;
  GroebnerBasis basis_;
  std::vector<Polynomial> elements_;
  std::map<std::string, Index> by_text_;
  std::vector<Index> add_, mul_, neg_, vars_;
  Index zero_ = 0, one_ = 0;
};

using Assignment = std::map<std::string, FiniteRingTable::Index>;

/// Tarskian truth over the table; quantifiers range over all elements.
/// Throws std::invalid_argument for an unbound free variable.
bool eval(const FormulaPtr& f, const FiniteRingTable& table, const Assignment& params = {});

/// All tuples (in `free_order`) of the unbound free variables satisfying f.
std::vector<std::vector<FiniteRingTable::Index>> defined_set(const FormulaPtr& f, const FiniteRingTable& table,
                                                             const std::vector<std::string>& free_order,
                                                             const Assignment& bound = {});

}  // namespace fgring::fol
