#pragma once

// Truncated big Witt vectors W_d indexed by the divisors of d.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fgring/groebner.hpp"
#include "fgring/spectrum.hpp"

namespace fgring {

/// Positive divisors of d in ascending order.
std::vector<unsigned> divisors(unsigned d);

/// Universal polynomials for W_d over the variables X_i, Y_i (i | d).
struct WittTable {
  unsigned d = 0;
  std::vector<unsigned> divs;
  ContextPtr ctx;  // X_i for i | d, then Y_i
  std::map<unsigned, Polynomial> ghost_x, ghost_y, S, M, N;

  std::size_t x_index(unsigned i) const;
  std::size_t y_index(unsigned i) const;
};

/// Builds S_j, M_j, N_j from the ghost equations, dividing exactly by j.
/// A failed division throws InvariantViolation (integrality is a theorem).
WittTable build_table(unsigned d);

/// Checks the ghost equations and the symmetry of S and M as polynomial
/// identities; throws InvariantViolation on failure.
void verify_table(const WittTable& table);

/// Versioned JSON form of a table (polynomials in canonical text).
std::string table_to_json(const WittTable& table);
WittTable table_from_json(const std::string& text);

/// Memoized tables, optionally persisted to a JSON cache file holding every
/// table built so far. Loaded tables are re-verified.
class WittTableCache {
 public:
  explicit WittTableCache(std::optional<std::string> path = std::nullopt) : path_(std::move(path)) {}
  const WittTable& get(unsigned d);

 private:
  void load();
  void save() const;

  std::optional<std::string> path_;
  bool loaded_ = false;
  std::map<unsigned, WittTable> tables_;
  std::mutex mutex_;
};

/// A coefficient ring given by a presentation; elements are canonical normal
/// forms modulo its strong Gröbner basis.
class CoefficientRing {
 public:
  explicit CoefficientRing(RingPresentation ring, const GroebnerConfig& config = {});
  static CoefficientRing integers();
  static CoefficientRing integers_mod(const Integer& m);

  const RingPresentation& presentation() const { return ring_; }
  const ContextPtr& context() const { return ring_.ctx; }
  const GroebnerBasis& basis() const { return basis_; }

  Polynomial reduce(const Polynomial& f) const;
  Polynomial constant(const Integer& c) const;
  bool same_as(const CoefficientRing& other) const;
  /// Inverse of an integer, or nullopt when it is not a unit.
  std::optional<Polynomial> inverse_of_integer(const Integer& n) const;

 private:
  RingPresentation ring_;
  GroebnerBasis basis_;
  GroebnerConfig config_;
};

struct WittVector {
  unsigned d = 0;
  std::vector<Polynomial> components;  // one per divisor of d, ascending

  friend bool operator==(const WittVector& a, const WittVector& b) {
    return a.d == b.d && a.components == b.components;
  }
};

enum class WittOp { Add, Mul, Neg };

/// Components reduced into the ring; the count must match the divisors of d.
WittVector make_witt_vector(unsigned d, const std::vector<Polynomial>& components, const CoefficientRing& ring);
WittVector witt_zero(unsigned d, const CoefficientRing& ring);
WittVector witt_one(unsigned d, const CoefficientRing& ring);

/// a + b, a * b, or -a (b ignored) via the universal polynomials.
WittVector witt_arith(const WittVector& a, const WittVector& b, const WittTable& table, WittOp op,
                      const CoefficientRing& ring);

/// Ghost components w_j(a), one per divisor j of d.
std::vector<Polynomial> ghost(const WittVector& a, const CoefficientRing& ring);

/// Preimage of a ghost sequence when every divisor of d is a unit in the ring;
/// throws std::domain_error naming a non-invertible divisor otherwise.
WittVector from_ghost(const std::vector<Polynomial>& g, unsigned d, const CoefficientRing& ring);

/// w_d(b) = sum over i | d of i * b_i^(d/i), reduced in the ring.
Polynomial w_map(const WittVector& b, const CoefficientRing& ring);

/// The morphism t: W_d(B/I) -> B with w = t∘r, for I^2 = 0 and d*I = 0 in B.
class WittDescent {
 public:
  WittDescent(const RingPresentation& b, const std::vector<Polynomial>& i, unsigned d,
              const GroebnerConfig& config = {});

  const CoefficientRing& source() const { return a_; }  // A = B/I
  const CoefficientRing& target() const { return b_; }
  unsigned d() const { return d_; }

  /// t(a): lift each component to B and apply w_map.
  Polynomial evaluate(const WittVector& a) const;
  /// t(a) agrees with w_map of the lift shifted by `delta` (components in I).
  bool agrees_on_lift(const WittVector& a, const std::vector<Polynomial>& delta) const;
  /// r: W_d(B) -> W_d(A), componentwise reduction.
  WittVector restrict(const WittVector& b) const;
  bool in_ideal(const Polynomial& f) const;

 private:
  CoefficientRing b_;
  CoefficientRing a_;
  unsigned d_;
};

/// Checks the hypotheses and builds the descent; throws std::invalid_argument
/// naming the violated hypothesis.
WittDescent witt_descend(const RingPresentation& b, const std::vector<Polynomial>& i, unsigned d,
                         const GroebnerConfig& config = {});

}  // namespace fgring
