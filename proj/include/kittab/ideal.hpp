#ifndef KITTAB_IDEAL_HPP
#define KITTAB_IDEAL_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "kittab/polynomial.hpp"

namespace kittab {

/// Generators of an ideal plus a lazily computed, write-once reduced
/// Gröbner basis under the ring's order. Zero generators are dropped.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

struct DimensionResult {
  /// Krull dimension of R/I; -1 for the unit ideal.
  int dim = 0;
  /// n - dim for proper ideals; nullopt stands for the unit ideal's
  /// infinite height.
  std::optional<int> height;

  bool height_infinite() const { return !height.has_value(); }
  friend bool operator==(const DimensionResult&, const DimensionResult&) = default;
};

const std::vector<Polynomial>& groebner_basis(const Ideal& I);
Polynomial normal_form(const Polynomial& f, const Ideal& I);
bool ideal_member(const Polynomial& f, const Ideal& I);
/// J ⊆ I.
bool ideal_contains(const Ideal& I, const Ideal& J);
/// Reduced Gröbner bases coincide.
bool ideal_equal(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

/// I ∩ K[v_{k+1}, ..., v_n], computed under elimination(k). The result
/// lives in I's ring.
Ideal eliminate(const Ideal& I, std::size_t first_k);
Ideal intersect(const Ideal& I, const Ideal& J);
/// I : J. Throws DomainError if J is the zero ideal.
Ideal colon(const Ideal& I, const Ideal& J);
/// I : (g).
Ideal colon(const Ideal& I, const Polynomial& g);
/// f ∈ √I, via 1 ∈ I + (1 - t f).
bool radical_member(const Polynomial& f, const Ideal& I);
/// J ⊆ √I.
bool radical_contains(const Ideal& I, const Ideal& J);
DimensionResult dimension(const Ideal& I);

/// Extends I along a ring map given by variable indices (see map_variables).
Ideal map_ideal(const Ideal& I, const RingPtr& target, std::span<const int> var_map);
/// Extension R -> R[extra variables appended].
Ideal extend_ideal(const Ideal& I, const RingPtr& target);

/// Every S-polynomial of the basis reduces to zero modulo the basis.
bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis);

/// Fresh name for auxiliary variables; never a valid session identifier.
inline constexpr const char* kAuxVariable = "@t";

}  // namespace kittab

#endif  // KITTAB_IDEAL_HPP
