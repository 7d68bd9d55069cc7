#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fgring/integer.hpp"
#include "fgring/polynomial.hpp"

namespace fgring {

/// Coefficient domain of an ideal: Z, Q or F_p. Rational polynomials are
/// represented by primitive integer polynomials (scalars are irrelevant to
/// the ideals they generate).
struct Domain {
  enum class Kind { Integers, Rationals, PrimeField };

  Kind kind = Kind::Integers;
  Integer p = 0;

  static Domain integers() { return {Kind::Integers, 0}; }
  static Domain rationals() { return {Kind::Rationals, 0}; }
  static Domain prime_field(const Integer& p) { return {Kind::PrimeField, p}; }

  bool is_field() const { return kind != Kind::Integers; }
  std::string name() const;

  friend bool operator==(const Domain& a, const Domain& b) { return a.kind == b.kind && a.p == b.p; }
  friend bool operator!=(const Domain& a, const Domain& b) { return !(a == b); }
};

/// Explicit limits for basis computations. Hitting one throws
/// ResourceCapExceeded instead of running on.
struct GroebnerConfig {
  std::size_t max_basis_size = 2000;
  std::size_t max_reduction_steps = 5'000'000;
  std::size_t max_pairs = 500'000;
};

/// Generators of an ideal over a coefficient domain; zero generators are
/// dropped and, over a field, generators are normalized into the domain.
class IdealPresentation {
 public:
  IdealPresentation() = default;
  IdealPresentation(ContextPtr ctx, std::vector<Polynomial> generators, Domain domain = Domain::integers());

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const Domain& domain() const { return domain_; }
  bool is_zero_ideal() const { return gens_.empty(); }

  /// Same generators with one more.
  IdealPresentation with(const Polynomial& g) const;
  IdealPresentation over(const Domain& d) const;

 private:
  ContextPtr ctx_;
  std::vector<Polynomial> gens_;
  Domain domain_;
};

/// Gröbner basis. Over Z it is a strong basis: the leading term (coefficient
/// and monomial) of every nonzero ideal element is divisible by the leading
/// term of some element. Over a field it is the reduced basis, normalized to
/// monic (F_p) or primitive with positive leading coefficient (Q).
struct GroebnerBasis {
  ContextPtr ctx;
  std::vector<Polynomial> elements;
  MonomialOrder order;
  Domain domain;
  bool reduced = true;

  bool is_unit() const;
  bool is_zero() const { return elements.empty(); }
  IdealPresentation ideal() const { return IdealPresentation(ctx, elements, domain); }
};

GroebnerBasis strong_groebner(const IdealPresentation& ideal, MonomialOrder order = MonomialOrder::grevlex(),
                              const GroebnerConfig& config = {});

/// Remainder with no term reducible by the basis. Over Z each coefficient is
/// reduced by Euclidean division into [0, |lc|), which makes the remainder
/// canonical for strong bases. Over Q the remainder is returned as a
/// primitive integer polynomial (a nonzero rational multiple of the true one).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis);

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);
bool ideal_member(const Polynomial& f, const IdealPresentation& ideal, const GroebnerConfig& config = {});

/// f^n in I for some n, decided by 1 in I + (1 - y*f) with an auxiliary y.
bool radical_member(const Polynomial& f, const IdealPresentation& ideal, const GroebnerConfig& config = {});

/// Every generator of `small` lies in `big`.
bool ideal_contains(const IdealPresentation& big, const IdealPresentation& small, const GroebnerConfig& config = {});
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GroebnerConfig& config = {});
/// Every generator of `small` lies in the radical of `big`.
bool radical_contains(const IdealPresentation& big, const IdealPresentation& small, const GroebnerConfig& config = {});

enum class IdealOp { Sum, Product, Intersect, Quotient, Saturate };

/// Sum, product, intersection (t*I + (1-t)*J eliminating t), quotient
/// (I:J as the intersection of I:g over generators g) and saturation
/// (iterated quotient until it stabilizes).
IdealPresentation ideal_ops(const IdealPresentation& i, const IdealPresentation& j, IdealOp op,
                            const GroebnerConfig& config = {});

/// I intersected with the subring in the kept variables, via a block order.
/// The result lives in the original context.
IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<std::size_t>& keep,
                            const GroebnerConfig& config = {});

/// c >= 0 with I ∩ Z = (c). Requires an ideal over Z.
Integer contract_integers(const IdealPresentation& ideal, const GroebnerConfig& config = {});

/// Krull dimension of k[x]/I over a field domain, from the leading-term
/// ideal (largest independent variable set); -1 for the unit ideal.
int dimension_over_field(const IdealPresentation& ideal, const GroebnerConfig& config = {});

/// Largest independent variable set of the leading-term ideal of a field basis.
std::vector<std::size_t> maximal_independent_set(const GroebnerBasis& basis);

/// Number of standard monomials of a zero-dimensional basis; nullopt when
/// the quotient is infinite-dimensional.
std::optional<std::size_t> quotient_dimension(const GroebnerBasis& basis);

/// Exact quotient f / g over a domain (up to a unit over a field); throws
/// NotDivisible when g does not divide f.
Polynomial exact_div_in(const Polynomial& f, const Polynomial& g, const Domain& domain);

/// Normalizes a polynomial into a field domain (mod p, or primitive over Q).
Polynomial normalize_into(const Polynomial& f, const Domain& domain);

/// Fresh variable names not in `ctx`, prepended in front of its variables.
ContextPtr prepend_variables(const ContextPtr& ctx, std::size_t count, const std::string& stem);

}  // namespace fgring
