#pragma once

// Dense univariate polynomials over Z and F_p, and their factorization.
// Coefficient vectors are stored low degree first with no trailing zeros;
// the empty vector is the zero polynomial.

#include <cstddef>
#include <vector>

#include "fgring/integer.hpp"
#include "fgring/polynomial.hpp"

namespace fgring::upoly {

using Coeffs = std::vector<Integer>;

struct Factor {
  Coeffs poly;
  unsigned multiplicity = 1;
};

inline long degree(const Coeffs& f) { return static_cast<long>(f.size()) - 1; }
void trim(Coeffs& f);

// Arithmetic over F_p; inputs need not be reduced, outputs are in [0, p).
Coeffs fp_reduce(Coeffs f, const Integer& p);
Coeffs fp_add(const Coeffs& a, const Coeffs& b, const Integer& p);
Coeffs fp_sub(const Coeffs& a, const Coeffs& b, const Integer& p);
Coeffs fp_mul(const Coeffs& a, const Coeffs& b, const Integer& p);
void fp_divmod(const Coeffs& a, const Coeffs& b, const Integer& p, Coeffs& q, Coeffs& r);
Coeffs fp_rem(const Coeffs& a, const Coeffs& b, const Integer& p);
Coeffs fp_monic(const Coeffs& a, const Integer& p);
Coeffs fp_gcd(const Coeffs& a, const Coeffs& b, const Integer& p);
Coeffs fp_derivative(const Coeffs& a, const Integer& p);
Coeffs fp_powmod(const Coeffs& base, const Integer& e, const Coeffs& mod, const Integer& p);

/// Monic irreducible factors with multiplicities of a nonzero polynomial over F_p.
/// Deterministic for fixed input (fixed-seed randomness).
std::vector<Factor> factor_mod_p(const Coeffs& f, const Integer& p);

// Arithmetic over Z.
Coeffs z_mul(const Coeffs& a, const Coeffs& b);
Coeffs z_derivative(const Coeffs& a);
Integer z_content(const Coeffs& a);
/// Divides out the content and makes the leading coefficient positive.
Coeffs z_primitive(const Coeffs& a);
/// Exact quotient a / b over Z, or false when b does not divide a.
bool z_divides(const Coeffs& a, const Coeffs& b, Coeffs& quotient);
/// Primitive gcd over Z[x] (positive leading coefficient).
Coeffs z_gcd(const Coeffs& a, const Coeffs& b);

/// Irreducible factorization over Q of a nonzero polynomial, returned as
/// primitive integer polynomials with positive leading coefficient. Integer
/// content and sign are dropped.
std::vector<Factor> factor_over_rationals(const Coeffs& f);

/// Coefficients of f viewed as a polynomial in variable `var`; f must not
/// involve any other variable.
Coeffs to_coeffs(const Polynomial& f, std::size_t var);

/// Rebuilds the polynomial sum c_i * var^i in `ctx`.
Polynomial from_coeffs(const Coeffs& c, const ContextPtr& ctx, std::size_t var,
                       MonomialOrder order = MonomialOrder::grevlex());

/// Evaluates sum c_i * h^i for a polynomial h.
Polynomial compose(const Coeffs& c, const Polynomial& h);

}  // namespace fgring::upoly
