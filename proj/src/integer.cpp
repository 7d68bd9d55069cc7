#include "fgring/integer.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgring {

Integer floor_mod(const Integer& a, const Integer& m) {
  Integer r;
  Integer am = abs(m);
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t());
  return r;
}

Integer symmetric_mod(const Integer& a, const Integer& m) {
  Integer am = abs(m);
  Integer r = floor_mod(a, am);
  if (2 * r > am) r -= am;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  Integer am = abs(m);
  if (am == 1) return 0;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), am.get_mpz_t()) == 0)
    throw std::domain_error("inverse_mod: " + a.get_str() + " is not invertible modulo " +
                            am.get_str());
  return floor_mod(r, am);
}

Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer pow_mod(const Integer& base, const Integer& exp, const Integer& m) {
  Integer r;
  Integer b = floor_mod(base, m);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
  return r;
}

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](const Integer& v) { return floor_mod(v * v + c, n); };
    while (d == 1) {
      x = step(x);
      y = step(step(y));
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_into(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::vector<Integer> prime_factors(const Integer& n) {
  std::vector<Integer> out;
  Integer m = abs(n);
  if (m <= 1) return out;
  for (unsigned long p = 2; p < 1000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.emplace_back(p);
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) m /= p;
    }
  }
  if (m > 1) factor_into(m, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace fgring
