#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace fgring {

using Integer = mpz_class;

/// Representative of `a` modulo `m` in [0, |m|).
Integer floor_mod(const Integer& a, const Integer& m);

/// Symmetric representative of `a` modulo `m` in (-|m|/2, |m|/2].
Integer symmetric_mod(const Integer& a, const Integer& m);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Extended gcd: returns g >= 0 with g = s*a + t*b.
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

/// Inverse of `a` modulo `m`; throws std::domain_error if not invertible.
Integer inverse_mod(const Integer& a, const Integer& m);

Integer pow(const Integer& base, unsigned long exp);
Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m);

bool is_probable_prime(const Integer& n);

/// Distinct prime divisors of |n| in ascending order (empty for 0, 1, -1).
std::vector<Integer> prime_factors(const Integer& n);

inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace fgring
