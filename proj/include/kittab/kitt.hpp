#ifndef KITTAB_KITT_HPP
#define KITTAB_KITT_HPP

#include <span>
#include <string>
#include <vector>

#include "kittab/free_module.hpp"
#include "kittab/koszul.hpp"
#include "kittab/report.hpp"

namespace kittab {

/// Generators f of I (r of them), a of 𝔞 (s of them) and Φ (r × s) with
/// [a] = [f]·Φ, checked exactly on construction.
class KittInput {
 public:
  /// Throws StructuralError on shape or ring mismatch and
  /// PreconditionError if [a] ≠ [f]·Φ.
  KittInput(std::vector<Polynomial> f, std::vector<Polynomial> a, PolyMatrix Phi);
  /// Φ from lift(f, a); PreconditionError if 𝔞 ⊄ I.
  static KittInput from_generators(std::vector<Polynomial> f, std::vector<Polynomial> a);

  const RingPtr& ring() const { return f_.front().ring(); }
  const std::vector<Polynomial>& f() const { return f_; }
  const std::vector<Polynomial>& a() const { return a_; }
  const PolyMatrix& Phi() const { return Phi_; }
  std::size_t r() const { return f_.size(); }
  std::size_t s() const { return a_.size(); }
  Ideal I() const { return Ideal(ring(), f_); }
  Ideal a_ideal() const { return Ideal(ring(), a_); }

  /// Same I, columns of Φ restricted to `columns` (a subsequence of a).
  KittInput select(std::span<const std::size_t> columns) const;

 private:
  std::vector<Polynomial> f_;
  std::vector<Polynomial> a_;
  PolyMatrix Phi_;
};

struct KittGenerator {
  Polynomial value;
  /// The subset L of columns of Φ (0-based, increasing).
  std::vector<std::size_t> columns;
  /// Index of the cycle generator z in Z_{r-|L|}.
  std::size_t cycle;
};

struct KittStratum {
  std::size_t k;
  std::vector<KittGenerator> generators;
};

struct KittResult {
  /// Generated by the nonzero harvested coefficients, made primitive
  /// (monic over a prime field), duplicates dropped, in harvest order.
  Ideal ideal;
  /// k = 0, ..., min(r, s); raw coefficients including zeros.
  std::vector<KittStratum> strata;
};

/// Coefficients of e_1∧…∧e_r in ζ_L ∧ z for every L ⊆ {1..s}, |L| = k ≤ min(r,s),
/// and every generator z of Z_{r-k}(f).
KittResult kitt_ideal(const KittInput& in);
/// Same, with Z_0, ..., Z_r supplied (cycles[i] must generate Z_i(f)).
KittResult kitt_ideal(const KittInput& in, std::span<const CycleBasis> cycles);
/// Kitt of the images over R/b, computed from cycles modulo b and lifted to R.
/// The returned ideal does not include b.
KittResult kitt_ideal_modulo(const KittInput& in, const Ideal& b);

/// ζ_j = Σ_i c_ij e_i.
KoszulElement zeta(const KittInput& in, std::size_t j);

/// A second instance to compare against in the identity suite.
struct KittComparison {
  enum class Relation {
    /// Kitt(other) ⊆ Kitt(main), e.g. other = (𝔞₁, I) with 𝔞₁ ⊆ 𝔞
    contained_in_main,
    /// Kitt(main) ⊆ Kitt(other), e.g. other = (𝔞, I₁) with 𝔞 ⊆ I₁ ⊆ I
    contains_main,
  };
  std::string label;
  KittInput input;
  Relation relation;
};

/// Containments and radical equalities: 𝔞 ⊆ Kitt ⊆ 𝔞:I, same radical,
/// Fitt_0(I/𝔞) ⊆ Kitt, monotonicity against `comparisons`, and the equality
/// cases μ(I/𝔞) ≤ 1 and s ≤ ht(I)+1 when they apply.
VerificationReport kitt_identity_suite(const KittInput& in,
                                       std::span<const KittComparison> comparisons = {});

/// 𝔞 + Fitt_0(I/𝔞) + Σ Kitt((a_{i_1},…,a_{i_{r-2}}), I). DomainError if r > s.
Ideal kitt_recursive_small_r(const KittInput& in);
/// Σ_i Kitt((a_1,…,â_i,…,a_s), I) + ⟨ζ_1⋯ζ_s·Z_{r-s}⟩_r. DomainError if r < s.
Ideal kitt_recursive_large_r(const KittInput& in);

/// Kitt(𝔞,I) + b against Kitt over R/b lifted + b. PreconditionError unless I ∩ b = 0.
VerificationReport quotient_image_kitt(const KittInput& in, const Ideal& b);
/// For f0 ∈ 𝔞 a nonzerodivisor: Kitt(𝔞,I) + (f0) against Kitt over R/(f0) + (f0).
VerificationReport kitt_specialization_check(const KittInput& in, const Polynomial& f0);

struct ResidualCheck {
  Ideal J;
  DimensionResult height_J;
  DimensionResult height_I_plus_J;
  /// ht(J) ≥ s and J proper
  bool algebraic;
  /// additionally ht(I + J) ≥ s + 1
  bool geometric;
  VerificationReport report;
};

/// J = 𝔞:I with height verdicts. PreconditionError if 𝔞 ⊄ I or 𝔞 has more
/// than s nonzero generators.
ResidualCheck residual_check(const Ideal& a, const Ideal& I, std::size_t s);

/// ht(Fitt_i(I)) ≥ i+1 for 1 ≤ i ≤ s-1. PreconditionError if I is not proper.
bool g_condition(const Ideal& I, std::size_t s);

/// "∞" or the number.
std::string height_string(const DimensionResult& d);

}  // namespace kittab

#endif  // KITTAB_KITT_HPP
