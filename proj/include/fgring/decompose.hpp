#pragma once

// Minimal primes of ideals over a field (Q or F_p) for a restricted class of
// inputs. Anything outside the class raises DecompositionIncomplete rather
// than returning an unverified answer.
//
// Supported splits: monomial factors of a generator, factorization of a
// generator that is univariate in some variable, elimination of variables
// occurring linearly with a constant coefficient, zero-dimensional ideals via
// minimal polynomials of variables and random primitive-element candidates,
// and principal ideals of degree one in some variable.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgring/groebner.hpp"
#include "fgring/upoly.hpp"

namespace fgring {

struct DecomposeConfig {
  GroebnerConfig groebner;
  std::size_t max_nodes = 512;
  unsigned primitive_attempts = 40;
  std::uint64_t seed = 0x5eed;
};

struct FieldPrime {
  IdealPresentation ideal;  // reduced basis of the prime
  std::string provenance;   // sequence of splits leading to it
};

/// Minimal primes of an ideal over a field domain, sorted by generator text.
std::vector<FieldPrime> field_minimal_primes(const IdealPresentation& ideal, const DecomposeConfig& config = {});

/// Primality of an ideal over a field; nullopt when the decomposition falls
/// outside the supported class.
std::optional<bool> field_is_prime(const IdealPresentation& ideal, const DecomposeConfig& config = {});

/// Irreducible factors of a univariate polynomial over Q or F_p.
std::vector<upoly::Factor> factor_univariate(const upoly::Coeffs& f, const Domain& domain);

/// Minimal polynomial of h modulo a zero-dimensional ideal over a field,
/// obtained by eliminating everything except T from I + (T - h).
upoly::Coeffs minimal_polynomial(const IdealPresentation& ideal, const Polynomial& h,
                                 const GroebnerConfig& config = {});

}  // namespace fgring
