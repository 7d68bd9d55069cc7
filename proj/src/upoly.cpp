#include "fgring/upoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace fgring::upoly {

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// ---------------------------------------------------------------- F_p

Coeffs fp_reduce(Coeffs f, const Integer& p) {
  for (auto& c : f) c = floor_mod(c, p);
  trim(f);
  return f;
}

Coeffs fp_add(const Coeffs& a, const Coeffs& b, const Integer& p) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return fp_reduce(std::move(r), p);
}

Coeffs fp_sub(const Coeffs& a, const Coeffs& b, const Integer& p) {
  Coeffs r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return fp_reduce(std::move(r), p);
}

Coeffs fp_mul(const Coeffs& a, const Coeffs& b, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  return fp_reduce(z_mul(a, b), p);
}

void fp_divmod(const Coeffs& a, const Coeffs& b, const Integer& p, Coeffs& q, Coeffs& r) {
  Coeffs bb = fp_reduce(b, p);
  if (bb.empty()) throw std::domain_error("fp_divmod: division by zero");
  r = fp_reduce(a, p);
  q.clear();
  long db = degree(bb);
  if (degree(r) < db) return;
  Integer inv = inverse_mod(bb.back(), p);
  q.assign(r.size() - bb.size() + 1, Integer(0));
  for (long i = degree(r); i >= db; --i) {
    Integer c = floor_mod(r[i] * inv, p);
    if (c == 0) continue;
    q[i - db] = c;
    for (long j = 0; j <= db; ++j) r[i - db + j] = floor_mod(r[i - db + j] - c * bb[j], p);
  }
  trim(q);
  trim(r);
}

Coeffs fp_rem(const Coeffs& a, const Coeffs& b, const Integer& p) {
  Coeffs q, r;
  fp_divmod(a, b, p, q, r);
  return r;
}

Coeffs fp_monic(const Coeffs& a, const Integer& p) {
  Coeffs r = fp_reduce(a, p);
  if (r.empty()) return r;
  Integer inv = inverse_mod(r.back(), p);
  for (auto& c : r) c = floor_mod(c * inv, p);
  return r;
}

Coeffs fp_gcd(const Coeffs& a, const Coeffs& b, const Integer& p) {
  Coeffs x = fp_reduce(a, p), y = fp_reduce(b, p);
  while (!y.empty()) {
    Coeffs r = fp_rem(x, y, p);
    x = std::move(y);
    y = std::move(r);
  }
  return fp_monic(x, p);
}

namespace {

// g = s*a + t*b with g monic.
Coeffs fp_xgcd(const Coeffs& a, const Coeffs& b, const Integer& p, Coeffs& s, Coeffs& t) {
  Coeffs r0 = fp_reduce(a, p), r1 = fp_reduce(b, p);
  Coeffs s0{Integer(1)}, s1, t0, t1{Integer(1)};
  while (!r1.empty()) {
    Coeffs q, r;
    fp_divmod(r0, r1, p, q, r);
    Coeffs s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    Coeffs t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  Integer inv = inverse_mod(r0.back(), p);
  Coeffs scale{inv};
  s = fp_mul(s0, scale, p);
  t = fp_mul(t0, scale, p);
  return fp_mul(r0, scale, p);
}

}  // namespace

Coeffs fp_derivative(const Coeffs& a, const Integer& p) {
  Coeffs r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  return fp_reduce(std::move(r), p);
}

Coeffs fp_powmod(const Coeffs& base, const Integer& e, const Coeffs& mod, const Integer& p) {
  Coeffs result{Integer(1)};
  result = fp_rem(result, mod, p);
  Coeffs b = fp_rem(base, mod, p);
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fp_rem(fp_mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_rem(fp_mul(result, b, p), mod, p);
  }
  return result;
}

namespace {

bool is_one(const Coeffs& f) { return f.size() == 1 && f[0] == 1; }

Coeffs fp_exact_div(const Coeffs& a, const Coeffs& b, const Integer& p) {
  Coeffs q, r;
  fp_divmod(a, b, p, q, r);
  return q;
}

// Square-free factorization of a monic polynomial over F_p.
std::vector<Factor> square_free(const Coeffs& f, const Integer& p) {
  std::vector<Factor> out;
  Coeffs df = fp_derivative(f, p);
  auto pth_root = [&](const Coeffs& c) {
    unsigned long pp = p.get_ui();
    Coeffs r;
    for (std::size_t i = 0; i < c.size(); i += pp) r.push_back(c[i]);
    return r;
  };
  if (df.empty()) {
    // f is a p-th power; only reachable when p fits a machine word.
    for (auto& fac : square_free(pth_root(f), p)) {
      fac.multiplicity *= static_cast<unsigned>(p.get_ui());
      out.push_back(std::move(fac));
    }
    return out;
  }
  Coeffs c = fp_gcd(f, df, p);
  Coeffs w = fp_exact_div(f, c, p);
  unsigned i = 1;
  while (!is_one(w)) {
    Coeffs y = fp_gcd(w, c, p);
    Coeffs fac = fp_exact_div(w, y, p);
    if (!is_one(fac)) out.push_back({fp_monic(fac, p), i});
    w = std::move(y);
    c = fp_exact_div(c, w, p);
    ++i;
  }
  if (!is_one(c)) {
    for (auto& fac : square_free(pth_root(c), p)) {
      fac.multiplicity *= static_cast<unsigned>(p.get_ui());
      out.push_back(std::move(fac));
    }
  }
  return out;
}

// Distinct-degree factorization of a square-free monic polynomial.
std::vector<std::pair<Coeffs, long>> distinct_degree(const Coeffs& f, const Integer& p) {
  std::vector<std::pair<Coeffs, long>> out;
  Coeffs rest = f;
  Coeffs x{Integer(0), Integer(1)};
  Coeffs h = x;
  for (long i = 1; degree(rest) >= 2 * i; ++i) {
    h = fp_powmod(h, p, rest, p);
    Coeffs g = fp_gcd(rest, fp_sub(h, x, p), p);
    if (!is_one(g)) {
      out.emplace_back(g, i);
      rest = fp_exact_div(rest, g, p);
      h = fp_rem(h, rest, p);
    }
  }
  if (degree(rest) > 0) out.emplace_back(rest, degree(rest));
  return out;
}

void equal_degree(const Coeffs& f, long d, const Integer& p, gmp_randclass& rng, std::vector<Coeffs>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  long n = degree(f);
  for (;;) {
    Coeffs a(static_cast<std::size_t>(n));
    for (auto& c : a) c = rng.get_z_range(p);
    trim(a);
    if (degree(a) < 1) continue;
    Coeffs b;
    if (p == 2) {
      Coeffs term = a;
      b = a;
      for (long i = 1; i < d; ++i) {
        term = fp_rem(fp_mul(term, term, p), f, p);
        b = fp_add(b, term, p);
      }
    } else {
      Integer e = (pow(p, static_cast<unsigned long>(d)) - 1) / 2;
      b = fp_sub(fp_powmod(a, e, f, p), Coeffs{Integer(1)}, p);
    }
    Coeffs g = fp_gcd(f, b, p);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(g, d, p, rng, out);
      equal_degree(fp_exact_div(f, g, p), d, p, rng, out);
      return;
    }
  }
}

bool coeffs_less(const Coeffs& a, const Coeffs& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<Factor> factor_mod_p(const Coeffs& f, const Integer& p) {
  Coeffs g = fp_monic(f, p);
  if (g.empty()) throw std::domain_error("factor_mod_p: zero polynomial");
  std::vector<Factor> out;
  if (degree(g) == 0) return out;
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(0x5eed);
  for (const auto& sq : square_free(g, p)) {
    for (const auto& [part, d] : distinct_degree(sq.poly, p)) {
      std::vector<Coeffs> irr;
      equal_degree(part, d, p, rng, irr);
      for (auto& q : irr) out.push_back({std::move(q), sq.multiplicity});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return coeffs_less(a.poly, b.poly); });
  return out;
}

// ---------------------------------------------------------------- Z

Coeffs z_mul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

Coeffs z_derivative(const Coeffs& a) {
  Coeffs r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned long>(i));
  trim(r);
  return r;
}

Integer z_content(const Coeffs& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

Coeffs z_primitive(const Coeffs& a) {
  Coeffs r = a;
  trim(r);
  if (r.empty()) return r;
  Integer c = z_content(r);
  if (r.back() < 0) c = -c;
  for (auto& x : r) x /= c;
  return r;
}

bool z_divides(const Coeffs& a, const Coeffs& b, Coeffs& quotient) {
  if (b.empty()) throw std::domain_error("z_divides: division by zero");
  Coeffs r = a;
  trim(r);
  quotient.clear();
  if (r.empty()) return true;
  long db = degree(b);
  if (degree(r) < db) return false;
  quotient.assign(r.size() - b.size() + 1, Integer(0));
  for (long i = degree(r); i >= db; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), b.back().get_mpz_t())) return false;
    Integer c = r[i] / b.back();
    quotient[i - db] = c;
    for (long j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
  }
  trim(r);
  trim(quotient);
  return r.empty();
}

namespace {

Coeffs pseudo_rem(const Coeffs& a, const Coeffs& b) {
  Coeffs r = a;
  long db = degree(b);
  while (!r.empty() && degree(r) >= db) {
    Integer lr = r.back();
    long shift = degree(r) - db;
    for (auto& c : r) c *= b.back();
    for (long j = 0; j <= db; ++j) r[shift + j] -= lr * b[j];
    trim(r);
    r = z_primitive(r);
  }
  return r;
}

}  // namespace

Coeffs z_gcd(const Coeffs& a, const Coeffs& b) {
  Coeffs x = z_primitive(a), y = z_primitive(b);
  if (x.empty()) return y;
  if (y.empty()) return x;
  if (degree(x) < degree(y)) std::swap(x, y);
  while (!y.empty()) {
    Coeffs r = pseudo_rem(x, y);
    x = std::move(y);
    y = z_primitive(r);
  }
  return z_primitive(x);
}

namespace {

Coeffs mod_coeffs(Coeffs f, const Integer& m) {
  for (auto& c : f) c = floor_mod(c, m);
  trim(f);
  return f;
}

// Lifts f = g0 * h0 (mod p), g0 monic, to f = g * h (mod m) with m a power of p.
void hensel_lift(const Coeffs& f, const Coeffs& g0, const Coeffs& h0, const Integer& p, const Integer& m,
                 Coeffs& g, Coeffs& h) {
  Coeffs s, t;
  Coeffs one = fp_xgcd(g0, h0, p, s, t);
  if (!is_one(one)) throw std::logic_error("hensel_lift: factors not coprime");
  g = g0;
  h = h0;
  Integer q = p;
  while (q < m) {
    Coeffs diff = f;
    Coeffs gh = z_mul(g, h);
    diff.resize(std::max(diff.size(), gh.size()));
    for (std::size_t i = 0; i < gh.size(); ++i) diff[i] -= gh[i];
    trim(diff);
    Coeffs e;
    for (auto& c : diff) {
      if (!mpz_divisible_p(c.get_mpz_t(), q.get_mpz_t())) throw std::logic_error("hensel_lift: broken invariant");
      e.push_back(floor_mod(c / q, p));
    }
    trim(e);
    Coeffs a = fp_rem(fp_mul(t, e, p), g, p);
    Coeffs b = fp_exact_div(fp_sub(e, fp_mul(h, a, p), p), g, p);
    Integer nq = q * p;
    g.resize(std::max(g.size(), a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) g[i] += q * a[i];
    h.resize(std::max(h.size(), b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) h[i] += q * b[i];
    g = mod_coeffs(std::move(g), nq);
    h = mod_coeffs(std::move(h), nq);
    q = nq;
  }
}

std::vector<Coeffs> lift_all(const Coeffs& f, const std::vector<Coeffs>& factors, const Integer& p, const Integer& m) {
  if (factors.size() == 1) {
    Integer inv = inverse_mod(f.back(), m);
    Coeffs r = f;
    for (auto& c : r) c = floor_mod(c * inv, m);
    return {r};
  }
  Coeffs h0{floor_mod(f.back(), p)};
  for (std::size_t i = 1; i < factors.size(); ++i) h0 = fp_mul(h0, factors[i], p);
  Coeffs g, h;
  hensel_lift(f, factors[0], h0, p, m, g, h);
  std::vector<Coeffs> rest(factors.begin() + 1, factors.end());
  std::vector<Coeffs> out{g};
  for (auto& c : lift_all(h, rest, p, m)) out.push_back(std::move(c));
  return out;
}

Coeffs symmetric_product(const Integer& lead, const std::vector<Coeffs>& fs, const std::vector<std::size_t>& idx,
                         const Integer& m) {
  Coeffs r{lead};
  for (auto i : idx) r = mod_coeffs(z_mul(r, fs[i]), m);
  for (auto& c : r) c = symmetric_mod(c, m);
  trim(r);
  return r;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors of a primitive square-free polynomial of degree >= 1.
std::vector<Coeffs> zassenhaus(const Coeffs& s) {
  if (degree(s) <= 1) return {s};
  static const unsigned long kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                          59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113,
                                          127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191};
  Integer best_p = 0;
  std::vector<Factor> best;
  int tried = 0;
  for (unsigned long pp : kPrimes) {
    Integer p(pp);
    if (mpz_divisible_p(s.back().get_mpz_t(), p.get_mpz_t())) continue;
    Coeffs sp = fp_reduce(s, p);
    if (degree(fp_gcd(sp, fp_derivative(sp, p), p)) != 0) continue;
    auto facs = factor_mod_p(sp, p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (++tried == 4 || best.size() == 1) break;
  }
  if (best_p == 0) throw std::logic_error("zassenhaus: no suitable prime found");
  if (best.size() == 1) return {s};

  long n = degree(s);
  Integer norm2 = 0;
  for (const auto& c : s) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = 2 * abs(s.back()) * pow(Integer(2), static_cast<unsigned long>(n)) * (root + 1) + 1;
  Integer m = best_p;
  while (m <= bound) m *= best_p;

  std::vector<Coeffs> modular;
  for (auto& f : best) modular.push_back(f.poly);
  std::vector<Coeffs> lifted = lift_all(mod_coeffs(s, m), modular, best_p, m);

  std::vector<Coeffs> found;
  Coeffs f = s;
  std::size_t k = 1;
  while (2 * k <= lifted.size()) {
    bool hit = false;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
      Coeffs cand = z_primitive(symmetric_product(f.back(), lifted, idx, m));
      Coeffs quo;
      if (degree(cand) > 0 && z_divides(f, cand, quo)) {
        found.push_back(cand);
        f = z_primitive(quo);
        std::vector<Coeffs> remaining;
        for (std::size_t i = 0; i < lifted.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) remaining.push_back(lifted[i]);
        lifted = std::move(remaining);
        hit = true;
        break;
      }
    } while (next_combination(idx, lifted.size()));
    if (!hit) ++k;
  }
  if (degree(f) > 0) found.push_back(f);
  return found;
}

}  // namespace

std::vector<Factor> factor_over_rationals(const Coeffs& input) {
  Coeffs f = z_primitive(input);
  if (f.empty()) throw std::domain_error("factor_over_rationals: zero polynomial");
  std::vector<Factor> out;
  std::size_t k = 0;
  while (k < f.size() && f[k] == 0) ++k;
  if (k > 0) {
    out.push_back({Coeffs{Integer(0), Integer(1)}, static_cast<unsigned>(k)});
    f.erase(f.begin(), f.begin() + static_cast<long>(k));
  }
  if (degree(f) <= 0) return out;
  Coeffs g = z_gcd(f, z_derivative(f));
  Coeffs sqfree;
  if (!z_divides(f, g, sqfree)) throw std::logic_error("factor_over_rationals: gcd does not divide");
  sqfree = z_primitive(sqfree);
  for (auto& q : zassenhaus(sqfree)) {
    unsigned mult = 0;
    Coeffs quo;
    while (degree(f) >= degree(q) && z_divides(f, q, quo)) {
      f = quo;
      ++mult;
    }
    out.push_back({z_primitive(q), mult});
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return coeffs_less(a.poly, b.poly); });
  return out;
}

Coeffs to_coeffs(const Polynomial& f, std::size_t var) {
  Coeffs c;
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (i != var && t.monomial[i] != 0) throw std::invalid_argument("to_coeffs: polynomial is not univariate");
    std::size_t e = t.monomial[var];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += t.coeff;
  }
  trim(c);
  return c;
}

Polynomial from_coeffs(const Coeffs& c, const ContextPtr& ctx, std::size_t var, MonomialOrder order) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) terms.push_back({Monomial::variable(ctx->size(), var, static_cast<Exponent>(i)), c[i]});
  return Polynomial::from_terms(ctx, std::move(terms), order);
}

Polynomial compose(const Coeffs& c, const Polynomial& h) {
  Polynomial r(h.context(), h.order());
  for (std::size_t i = c.size(); i-- > 0;) r = r * h + Polynomial::constant(h.context(), c[i], h.order());
  return r;
}

}  // namespace fgring::upoly
