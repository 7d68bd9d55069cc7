#include "fgring/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fgring/errors.hpp"

namespace fgring {

RingPresentation::RingPresentation(ContextPtr c, std::vector<Polynomial> rels)
    : ctx(c), relations(c, std::move(rels), Domain::integers()) {}

RingPresentation RingPresentation::with_relations(const std::vector<Polynomial>& extra) const {
  auto rels = relations.generators();
  rels.insert(rels.end(), extra.begin(), extra.end());
  return RingPresentation(ctx, std::move(rels));
}

std::string RingPresentation::to_string() const {
  std::string s = "ring Z";
  if (ctx->size() > 0) {
    s += "[";
    for (std::size_t i = 0; i < ctx->size(); ++i) s += (i ? "," : "") + ctx->name(i);
    s += "]";
  }
  if (!relations.generators().empty()) {
    s += " / (";
    for (std::size_t i = 0; i < relations.generators().size(); ++i)
      s += (i ? ", " : "") + fgring::to_string(relations.generators()[i]);
    s += ")";
  }
  return s;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Biinterpretable: return "BIINTERPRETABLE_WITH_Z";
    case Verdict::NotBiinterpretable: return "NOT_BIINTERPRETABLE";
    case Verdict::UndecidedDecompositionIncomplete: return "UNDECIDED_DECOMPOSITION_INCOMPLETE";
  }
  return "?";
}

namespace {

IdealPresentation canonical(const IdealPresentation& i, const GroebnerConfig& config) {
  return strong_groebner(i, MonomialOrder::grevlex(), config).ideal();
}

std::string text_of(const IdealPresentation& i) {
  std::string s;
  for (const auto& g : i.generators()) s += to_string(g) + ";";
  return s;
}

// Product of the distinct primes dividing some leading coefficient.
Integer leading_coefficient_radical(const GroebnerBasis& gb) {
  std::set<Integer> primes;
  for (const auto& e : gb.elements)
    for (const auto& p : prime_factors(e.leading_coeff())) primes.insert(p);
  Integer n = 1;
  for (const auto& p : primes) n *= p;
  return n;
}

// I : n^∞ as (I + (1 - n*t)) ∩ Z[vars].
IdealPresentation saturate_by_integer(const IdealPresentation& ideal, const Integer& n, const GroebnerConfig& config) {
  ContextPtr ext = prepend_variables(ideal.context(), 1, "_t");
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(embed(g, ext));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, 0).scaled(n));
  std::vector<std::size_t> keep(ideal.context()->size());
  std::iota(keep.begin(), keep.end(), 1);
  IdealPresentation elim = eliminate(IdealPresentation(ext, std::move(gens), ideal.domain()), keep, config);
  std::vector<std::size_t> back(ext->size(), 0);
  for (std::size_t k = 1; k < ext->size(); ++k) back[k] = k - 1;
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(rename(g, ideal.context(), back));
  return IdealPresentation(ideal.context(), std::move(out), ideal.domain());
}

// Prime of Q[vars] contracted to Z[vars].
IdealPresentation contract_rational(const IdealPresentation& p, const GroebnerConfig& config) {
  IdealPresentation pz(p.context(), p.generators(), Domain::integers());
  GroebnerBasis gb = strong_groebner(pz, MonomialOrder::grevlex(), config);
  Integer n = leading_coefficient_radical(gb);
  if (n == 1) return gb.ideal();
  return canonical(saturate_by_integer(pz, n, config), config);
}

void verify_decomposition(const IdealPresentation& relations, const std::vector<PrimeCertificate>& primes,
                          const GroebnerConfig& config) {
  for (const auto& p : primes)
    if (!ideal_contains(p.prime, relations, config))
      throw InvariantViolation("decomposition: prime " + text_of(p.prime) + " misses a relation");
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < primes.size(); ++j)
      if (i != j && ideal_contains(primes[j].prime, primes[i].prime, config))
        throw InvariantViolation("decomposition: primes are comparable");
  if (primes.empty()) return;
  std::vector<IdealPresentation> ideals;
  for (const auto& p : primes) ideals.push_back(p.prime);
  if (!radical_contains(relations, intersect_all(ideals, config), config))
    throw InvariantViolation("decomposition: intersection of primes exceeds the radical");
}

}  // namespace

IdealPresentation intersect_all(const std::vector<IdealPresentation>& ideals, const GroebnerConfig& config) {
  if (ideals.empty()) throw std::invalid_argument("intersect_all: empty list");
  IdealPresentation acc = ideals[0];
  for (std::size_t k = 1; k < ideals.size(); ++k) acc = ideal_ops(acc, ideals[k], IdealOp::Intersect, config);
  return canonical(acc, config);
}

std::vector<PrimeCertificate> minimal_primes(const RingPresentation& ring, const SpectrumConfig& config) {
  const GroebnerConfig& gc = config.groebner;
  GroebnerBasis gb = strong_groebner(ring.relations, MonomialOrder::grevlex(), gc);
  if (gb.is_unit()) return {};
  Integer c = 0;
  for (const auto& e : gb.elements)
    if (e.is_constant()) c = gcd(c, e.constant_value());

  // Primes p outside this list are non-zerodivisors modulo the relations,
  // so no minimal prime contains them.
  std::vector<Integer> bad;
  if (c != 0) {
    bad = prime_factors(c);
  } else {
    std::set<Integer> s;
    for (const auto& e : gb.elements)
      for (const auto& p : prime_factors(e.leading_coeff())) s.insert(p);
    bad.assign(s.begin(), s.end());
  }

  std::vector<PrimeCertificate> candidates;
  for (const auto& p : bad) {
    Domain fp = Domain::prime_field(p);
    for (const auto& fprime : field_minimal_primes(ring.relations.over(fp), config.decompose)) {
      std::vector<Polynomial> gens = fprime.ideal.generators();
      gens.push_back(Polynomial::constant(ring.ctx, p));
      IdealPresentation z = canonical(IdealPresentation(ring.ctx, gens, Domain::integers()), gc);
      bool finite = dimension_over_field(fprime.ideal, gc) == 0;
      candidates.push_back({z, p, finite, "mod " + p.get_str() + ": " + fprime.provenance});
    }
  }
  if (c == 0) {
    for (const auto& qprime : field_minimal_primes(ring.relations.over(Domain::rationals()), config.decompose)) {
      IdealPresentation z = contract_rational(qprime.ideal, gc);
      candidates.push_back({z, Integer(0), false, "over Q: " + qprime.provenance});
    }
  }

  std::vector<PrimeCertificate> minimal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool keep = true;
    for (std::size_t j = 0; j < candidates.size() && keep; ++j) {
      if (i == j || !ideal_contains(candidates[i].prime, candidates[j].prime, gc)) continue;
      bool equal = ideal_contains(candidates[j].prime, candidates[i].prime, gc);
      if (!equal || j < i) keep = false;
    }
    if (keep) minimal.push_back(candidates[i]);
  }
  std::stable_sort(minimal.begin(), minimal.end(), [](const PrimeCertificate& a, const PrimeCertificate& b) {
    if (a.characteristic != b.characteristic) return a.characteristic < b.characteristic;
    return text_of(a.prime) < text_of(b.prime);
  });
  verify_decomposition(ring.relations, minimal, gc);
  return minimal;
}

IdealPresentation nilradical_from(const RingPresentation& ring, const std::vector<PrimeCertificate>& primes,
                                  const GroebnerConfig& config) {
  if (primes.empty()) return IdealPresentation(ring.ctx, {Polynomial::constant(ring.ctx, 1)});
  std::vector<IdealPresentation> ideals;
  for (const auto& p : primes) ideals.push_back(p.prime);
  return intersect_all(ideals, config);
}

IdealPresentation nilradical(const RingPresentation& ring, const SpectrumConfig& config) {
  return nilradical_from(ring, minimal_primes(ring, config), config.groebner);
}

bool quotient_is_finite(const IdealPresentation& ideal, const GroebnerConfig& config) {
  Integer c = contract_integers(ideal, config);
  if (c == 1) return true;
  if (c == 0) return false;
  for (const auto& p : prime_factors(c))
    if (dimension_over_field(ideal.over(Domain::prime_field(p)), config) > 0) return false;
  return true;
}

bool is_finite(const RingPresentation& ring, const SpectrumConfig& config) {
  return quotient_is_finite(ring.relations, config.groebner);
}

PrimeGraph prime_graph(const RingPresentation& ring, const std::vector<PrimeCertificate>& primes,
                       const GroebnerConfig& config) {
  (void)ring;
  PrimeGraph g;
  for (const auto& p : primes)
    if (!p.finite_index) g.vertices.push_back(p);
  std::size_t n = g.vertices.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      IdealPresentation sum = ideal_ops(g.vertices[i].prime, g.vertices[j].prime, IdealOp::Sum, config);
      if (!quotient_is_finite(sum, config)) {
        g.edges.emplace_back(i, j);
        std::size_t a = find(i), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  std::vector<std::vector<std::size_t>> by_root(n);
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  for (auto& comp : by_root)
    if (!comp.empty()) g.components.push_back(std::move(comp));
  return g;
}

PrimeGraph prime_graph(const RingPresentation& ring, const SpectrumConfig& config) {
  return prime_graph(ring, minimal_primes(ring, config), config.groebner);
}

Integer nil_annihilator_exponent(const RingPresentation& ring, const IdealPresentation& nil,
                                 const GroebnerConfig& config) {
  IdealPresentation q = ideal_ops(ring.relations, nil, IdealOp::Quotient, config);
  return contract_integers(q, config);
}

ClassificationReport classify(const RingPresentation& ring, const SpectrumConfig& config) {
  const GroebnerConfig& gc = config.groebner;
  ClassificationReport r;
  r.ring = ring;
  r.assumptions.push_back("A is noetherian, so Min(A) is finite; not re-verified");
  GroebnerBasis gb = strong_groebner(ring.relations, MonomialOrder::grevlex(), gc);
  if (gb.is_unit()) {
    r.is_zero_ring = true;
    r.is_finite = true;
    r.decomposed = true;
    r.nilradical = IdealPresentation(ring.ctx, {Polynomial::constant(ring.ctx, 1)});
    r.annihilator_exponent = 1;
    r.verdict = Verdict::NotBiinterpretable;
    r.reasons.push_back("zero ring");
    return r;
  }
  r.is_finite = is_finite(ring, config);
  try {
    r.minimal_primes = minimal_primes(ring, config);
  } catch (const DecompositionIncomplete& e) {
    r.incomplete_reason = e.what();
    if (r.is_finite) {
      r.verdict = Verdict::NotBiinterpretable;
      r.reasons.push_back("finite");
    } else {
      r.verdict = Verdict::UndecidedDecompositionIncomplete;
    }
    return r;
  }
  r.decomposed = true;
  r.nilradical = nilradical_from(ring, r.minimal_primes, gc);
  r.annihilator_exponent = nil_annihilator_exponent(ring, r.nilradical, gc);
  r.graph = prime_graph(ring, r.minimal_primes, gc);
  if (r.is_finite != r.graph.vertices.empty())
    throw InvariantViolation("finiteness disagrees with the infinite-index minimal primes");
  r.connected = !r.is_finite && r.graph.components.size() == 1;

  if (r.is_finite) r.reasons.push_back("finite");
  if (!r.is_finite && !r.connected) {
    SplitCertificate s;
    s.component = r.graph.components[0];
    std::vector<IdealPresentation> left, right;
    for (std::size_t v = 0; v < r.graph.vertices.size(); ++v) {
      bool in = std::find(s.component.begin(), s.component.end(), v) != s.component.end();
      (in ? left : right).push_back(r.graph.vertices[v].prime);
      if (!in) s.rest.push_back(v);
    }
    s.left = intersect_all(left, gc);
    s.right = intersect_all(right, gc);
    IdealPresentation sum = ideal_ops(s.left, s.right, IdealOp::Sum, gc);
    s.witness = contract_integers(sum, gc);
    if (s.witness == 0 || !quotient_is_finite(sum, gc))
      throw InvariantViolation("split certificate: I + J does not have finite index");
    r.split = std::move(s);
    r.reasons.push_back("disconnected");
  }
  if (r.annihilator_exponent == 0) r.reasons.push_back("d=0");
  bool bi = !r.is_finite && r.connected && r.annihilator_exponent >= 1;
  r.verdict = bi ? Verdict::Biinterpretable : Verdict::NotBiinterpretable;
  return r;
}

RingPresentation reduced_ring(const RingPresentation& ring, const SpectrumConfig& config) {
  return ring.with_relations(nilradical(ring, config).generators());
}

FiberData fiber_data(const RingPresentation& ring, const std::vector<Polynomial>& i, const std::vector<Polynomial>& j,
                     const SpectrumConfig& config) {
  FiberData f;
  f.mod_i = ring.with_relations(i);
  f.mod_j = ring.with_relations(j);
  auto both = i;
  both.insert(both.end(), j.begin(), j.end());
  f.mod_sum = ring.with_relations(both);
  IdealPresentation meet = ideal_ops(f.mod_i.relations, f.mod_j.relations, IdealOp::Intersect, config.groebner);
  f.mod_intersection = RingPresentation(ring.ctx, meet.generators());
  f.base_finite = is_finite(f.mod_sum, config);
  return f;
}

MultOrderResult has_infinite_mult_order(const RingPresentation& ring, const Polynomial& a,
                                        const SpectrumConfig& config) {
  MultOrderResult out;
  GroebnerBasis gb = strong_groebner(ring.relations, MonomialOrder::grevlex(), config.groebner);
  std::vector<Polynomial> powers{normal_form(Polynomial::constant(ring.ctx, 1), gb)};
  Polynomial na = normal_form(a, gb);
  for (unsigned n = 1; n <= config.mult_order_bound; ++n) {
    Polynomial next = normal_form(powers.back() * na, gb);
    for (unsigned m = 0; m < n; ++m)
      if (powers[m] == next) {
        out.status = MultOrderResult::Status::Finite;
        out.m = m;
        out.n = n;
        return out;
      }
    powers.push_back(std::move(next));
  }
  std::vector<PrimeCertificate> primes;
  try {
    primes = minimal_primes(ring, config);
  } catch (const DecompositionIncomplete& e) {
    out.note = std::string("no repeated power up to the bound; ") + e.what();
    return out;
  }
  for (const auto& p : primes) {
    if (p.finite_index || ideal_member(a, p.prime, config.groebner)) continue;
    if (strong_groebner(p.prime.with(a), MonomialOrder::grevlex(), config.groebner).is_unit()) continue;
    out.status = MultOrderResult::Status::Infinite;
    out.prime = p;
    return out;
  }
  out.note = "no repeated power up to the bound and no witnessing prime";
  return out;
}

std::optional<bool> is_prime_ideal(const IdealPresentation& ideal, const SpectrumConfig& config) {
  const GroebnerConfig& gc = config.groebner;
  GroebnerBasis gb = strong_groebner(ideal, MonomialOrder::grevlex(), gc);
  if (gb.is_unit()) return false;
  Integer c = 0;
  for (const auto& e : gb.elements)
    if (e.is_constant()) c = gcd(c, e.constant_value());
  if (c != 0) {
    if (!is_probable_prime(c)) return false;
    return field_is_prime(ideal.over(Domain::prime_field(c)), config.decompose);
  }
  auto over_q = field_is_prime(ideal.over(Domain::rationals()), config.decompose);
  if (!over_q || !*over_q) return over_q;
  Integer n = leading_coefficient_radical(gb);
  if (n == 1) return true;
  return ideal_contains(ideal, saturate_by_integer(ideal, n, gc), gc);
}

CandidateCheck verify_candidates(const RingPresentation& ring, const std::vector<IdealPresentation>& candidates,
                                 const SpectrumConfig& config) {
  const GroebnerConfig& gc = config.groebner;
  CandidateCheck out;
  for (const auto& c : candidates) out.contains_relations.push_back(ideal_contains(c, ring.relations, gc));
  out.incomparable = true;
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (i != j && ideal_contains(candidates[j], candidates[i], gc)) out.incomparable = false;
  bool all_contain = std::all_of(out.contains_relations.begin(), out.contains_relations.end(), [](bool b) { return b; });
  out.radical_equal = !candidates.empty() && all_contain && radical_contains(ring.relations, intersect_all(candidates, gc), gc);
  for (const auto& c : candidates) out.prime.push_back(is_prime_ideal(c, config));
  return out;
}

}  // namespace fgring
