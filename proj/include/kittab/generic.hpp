#ifndef KITTAB_GENERIC_HPP
#define KITTAB_GENERIC_HPP

#include <span>
#include <string>
#include <vector>

#include "kittab/kitt.hpp"

namespace kittab {

/// S = R[U1_1, ..., Ur_s] over the ring of f, with α_j = Σ_i f_i·U{i}_{j}.
class GenericExtension {
 public:
  /// DomainError if f is empty or s = 0; StructuralError if a U name is taken.
  static GenericExtension make(std::vector<Polynomial> f, std::size_t s);

  const RingPtr& base() const { return base_; }
  const RingPtr& extended() const { return extended_; }
  std::size_t r() const { return f_.size(); }
  std::size_t s() const { return s_; }
  /// Generators of I in R.
  const std::vector<Polynomial>& f() const { return f_; }
  /// Generators of I·S.
  const std::vector<Polynomial>& f_extended() const { return f_ext_; }
  const std::vector<Polynomial>& alpha() const { return alpha_; }
  const PolyMatrix& Psi() const { return Psi_; }
  /// Index of U{i+1}_{j+1} among the variables of S.
  std::size_t u_index(std::size_t i, std::size_t j) const { return base_->size() + i * s_ + j; }

  Polynomial embed(const Polynomial& p) const;
  Ideal embed(const Ideal& I) const;
  /// (f, α, Ψ) over S.
  KittInput generic_input() const;

 private:
  GenericExtension(RingPtr extended, std::size_t s, std::vector<Polynomial> f, PolyMatrix Psi);

  RingPtr base_, extended_;
  std::size_t s_;
  std::vector<Polynomial> f_, f_ext_, alpha_;
  PolyMatrix Psi_;
};

/// Φ = (c_ij) over R and x = U1_1 - c_11, ..., Ur_s - c_rs over S.
struct SpecializationData {
  PolyMatrix Phi;
  std::vector<Polynomial> x_seq;

  /// StructuralError unless Φ is r × s over the base ring of `ext`.
  static SpecializationData make(const GenericExtension& ext, PolyMatrix Phi);
};

/// Kitt^g(s, f): the Kitt ideal of (f, α, Ψ) over S. Cycles are taken over R
/// and extended, since Z(f; S) = Z(f; R) ⊗ S.
Ideal generic_kitt(const GenericExtension& ext);
/// R(s, f) = (α) :_S I·S.
Ideal generic_residual(const GenericExtension& ext);
/// Image of K under S -> R, U_ij ↦ c_ij.
Ideal specialize(const Ideal& K, const GenericExtension& ext, const SpecializationData& spec);

/// x_k regular on S/(K + (x_1..x_{k-1})) for every k, then K + (x) proper.
VerificationReport regular_sequence_check(std::span<const Polynomial> x_seq, const Ideal& K);
/// specialize(Kitt^g(s, f), Φ) against kitt_ideal(in).
VerificationReport verify_specialization(const KittInput& in);
/// Residual precondition, Kitt(𝔞,I) = J, Kitt^g = R(s,f), regularity of x on
/// S/Kitt^g and R(s,f) + (x) = Kitt(𝔞,I)·S + (x). Skipped when s > ht(I)+1.
/// Precondition failures are reported as failed checks.
VerificationReport verify_deformation(const Ideal& a, const Ideal& I, std::size_t s);
/// Heights of Kitt(𝔞,I), 𝔞:I, Kitt^g(s,f), R(s,f) and the bound ht(R(s,f)) ≤ s.
VerificationReport height_report(const std::vector<Polynomial>& f,
                                 const std::vector<Polynomial>& a, std::size_t s);

/// 𝔞's generators padded with zeros to length s. PreconditionError if 𝔞 has
/// more than s generators.
std::vector<Polynomial> pad_generators(const Ideal& a, std::size_t s);

}  // namespace kittab

#endif  // KITTAB_GENERIC_HPP
