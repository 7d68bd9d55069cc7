#pragma once

// Spectrum of a finitely generated ring A = Z[x1..xn]/I: minimal primes,
// nilradical, finiteness, the graph of infinite-index minimal primes and the
// classification verdict built from them.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgring/decompose.hpp"
#include "fgring/groebner.hpp"

namespace fgring {

/// A = Z[vars] / relations. The zero ring (1 in the relations) is allowed.
struct RingPresentation {
  ContextPtr ctx;
  IdealPresentation relations;

  RingPresentation() = default;
  RingPresentation(ContextPtr c, std::vector<Polynomial> rels);

  /// Same ring with extra relations appended.
  RingPresentation with_relations(const std::vector<Polynomial>& extra) const;
  /// Presentation text, e.g. `ring Z[x,y] / (x*y)`.
  std::string to_string() const;
};

struct SpectrumConfig {
  GroebnerConfig groebner;
  DecomposeConfig decompose;
  unsigned mult_order_bound = 64;
};

struct PrimeCertificate {
  IdealPresentation prime;  // ideal of Z[vars] containing the relations
  Integer characteristic;   // 0 or a prime p
  bool finite_index = false;
  std::string provenance;
};

struct PrimeGraph {
  std::vector<PrimeCertificate> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j
  std::vector<std::vector<std::size_t>> components;        // sorted, ordered by first vertex
};

/// Split of the vertex set into a component and its complement, with
/// I = ∩component and J = ∩rest; I + J has finite index, witnessed by the
/// positive generator of (I + J) ∩ Z.
struct SplitCertificate {
  std::vector<std::size_t> component;
  std::vector<std::size_t> rest;
  IdealPresentation left;
  IdealPresentation right;
  Integer witness;
};

enum class Verdict { Biinterpretable, NotBiinterpretable, UndecidedDecompositionIncomplete };

std::string verdict_name(Verdict v);

struct ClassificationReport {
  RingPresentation ring;
  bool is_zero_ring = false;
  bool is_finite = false;
  bool decomposed = false;  // minimal primes, nilradical and d are available
  std::vector<PrimeCertificate> minimal_primes;
  IdealPresentation nilradical;
  Integer annihilator_exponent = 0;  // 0 encodes ann_Z(N) = 0
  PrimeGraph graph;
  bool connected = false;
  Verdict verdict = Verdict::UndecidedDecompositionIncomplete;
  std::optional<SplitCertificate> split;
  std::vector<std::string> reasons;
  std::vector<std::string> assumptions;
  std::string incomplete_reason;
};

/// Minimal primes, verified: each contains the relations, they are pairwise
/// incomparable, and their intersection lies in the radical of the relations
/// (InvariantViolation otherwise). Throws DecompositionIncomplete outside the
/// supported class. Empty for the zero ring.
std::vector<PrimeCertificate> minimal_primes(const RingPresentation& ring, const SpectrumConfig& config = {});

/// Intersection of a nonempty list of ideals over Z.
IdealPresentation intersect_all(const std::vector<IdealPresentation>& ideals, const GroebnerConfig& config = {});

/// Intersection of the minimal primes (the unit ideal for the zero ring).
IdealPresentation nilradical(const RingPresentation& ring, const SpectrumConfig& config = {});
IdealPresentation nilradical_from(const RingPresentation& ring, const std::vector<PrimeCertificate>& primes,
                                  const GroebnerConfig& config = {});

/// Finiteness of Z[vars]/J, decided from J ∩ Z = (c) and dimensions mod p | c.
bool quotient_is_finite(const IdealPresentation& ideal, const GroebnerConfig& config = {});
bool is_finite(const RingPresentation& ring, const SpectrumConfig& config = {});

PrimeGraph prime_graph(const RingPresentation& ring, const std::vector<PrimeCertificate>& primes,
                       const GroebnerConfig& config = {});
PrimeGraph prime_graph(const RingPresentation& ring, const SpectrumConfig& config = {});

/// Smallest d >= 1 with d*N = 0 in A, or 0 when no such d exists.
Integer nil_annihilator_exponent(const RingPresentation& ring, const IdealPresentation& nil,
                                 const GroebnerConfig& config = {});

/// Full classification. Resource caps propagate as exceptions; an
/// unsupported decomposition yields verdict UndecidedDecompositionIncomplete
/// (finite rings are decided without one).
ClassificationReport classify(const RingPresentation& ring, const SpectrumConfig& config = {});

/// A / N(A).
RingPresentation reduced_ring(const RingPresentation& ring, const SpectrumConfig& config = {});

struct FiberData {
  RingPresentation mod_i, mod_j, mod_sum, mod_intersection;
  bool base_finite = false;  // whether A/(I+J) is finite
};

FiberData fiber_data(const RingPresentation& ring, const std::vector<Polynomial>& i, const std::vector<Polynomial>& j,
                     const SpectrumConfig& config = {});

struct MultOrderResult {
  enum class Status { Infinite, Finite, Inconclusive } status = Status::Inconclusive;
  unsigned m = 0, n = 0;                  // a^m = a^n when Finite
  std::optional<PrimeCertificate> prime;  // non-maximal prime avoided by a when Infinite
  std::string note;
};

/// Bounded search for a^m = a^n (m < n <= bound); otherwise looks for an
/// infinite-index minimal prime p with a not in p and 1 not in p + (a).
MultOrderResult has_infinite_mult_order(const RingPresentation& ring, const Polynomial& a,
                                        const SpectrumConfig& config = {});

struct CandidateCheck {
  std::vector<bool> contains_relations;
  bool incomparable = false;
  bool radical_equal = false;
  std::vector<std::optional<bool>> prime;  // nullopt: primality not verified
};

/// Checks a user-supplied list of primes for A.
CandidateCheck verify_candidates(const RingPresentation& ring, const std::vector<IdealPresentation>& candidates,
                                 const SpectrumConfig& config = {});

/// Primality of an ideal of Z[vars]; nullopt outside the supported class.
std::optional<bool> is_prime_ideal(const IdealPresentation& ideal, const SpectrumConfig& config = {});

}  // namespace fgring
