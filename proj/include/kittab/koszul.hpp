#ifndef KITTAB_KOSZUL_HPP
#define KITTAB_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "kittab/free_module.hpp"

namespace kittab {

/// Subset of {0, ..., r-1} as a bitmask; r ≤ 32.
using IndexSet = std::uint32_t;

/// Lexicographic order on increasing index sequences: {0} < {0,1} < {0,2} < {1}.
struct IndexSetLess {
  bool operator()(IndexSet a, IndexSet b) const {
    while (a != b) {
      if (a == 0) return true;
      if (b == 0) return false;
      IndexSet la = a & (~a + 1), lb = b & (~b + 1);
      if (la != lb) return la < lb;
      a ^= la;
      b ^= lb;
    }
    return false;
  }
};

/// Index subsets of size i in lexicographic order (the basis of K_i).
std::vector<IndexSet> koszul_basis(std::size_t r, std::size_t i);

/// Element of the exterior algebra ⊕ R e_S on e_1..e_r.
class KoszulElement {
 public:
  using Terms = std::map<IndexSet, Polynomial, IndexSetLess>;

  KoszulElement(RingPtr ring, std::size_t r);
  /// c · e_S
  static KoszulElement basis(const Polynomial& c, std::size_t r, IndexSet S);
  /// Σ_i coeffs[i] e_i
  static KoszulElement linear(std::span<const Polynomial> coeffs);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(IndexSet S) const;
  /// Common cardinality of all index sets; nullopt if mixed or zero.
  std::optional<std::size_t> degree() const;

  KoszulElement& add(IndexSet S, const Polynomial& c);
  friend KoszulElement operator+(const KoszulElement& a, const KoszulElement& b);
  friend KoszulElement operator-(const KoszulElement& a, const KoszulElement& b);
  friend KoszulElement operator*(const Polynomial& c, const KoszulElement& a);
  friend bool operator==(const KoszulElement& a, const KoszulElement& b) {
    return a.r_ == b.r_ && a.terms_ == b.terms_;
  }

  /// e.g. `x^5*e1 - (x^2 + y)*e2`, `e{1,2}`
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t r_;
  Terms terms_;
};

/// Sign of e_S ∧ e_T for disjoint S, T.
int wedge_sign(IndexSet S, IndexSet T);

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b);
/// ∂(e_S) = Σ_k (-1)^(k+1) f_{S_k} e_{S \ S_k}, extended linearly.
KoszulElement differential(const KoszulElement& a, std::span<const Polynomial> f);

struct CycleBasis {
  std::size_t degree;
  std::vector<KoszulElement> generators;
};

/// Module generators of Z_i(f; R) = ker(∂_i). Throws DomainError unless
/// 0 ≤ i ≤ r.
CycleBasis cycles(std::span<const Polynomial> f, std::size_t i);
/// Cycles of the Koszul complex of f over R/b, lifted to R.
CycleBasis cycles_modulo(std::span<const Polynomial> f, std::size_t i, const Ideal& b);

}  // namespace kittab

#endif  // KITTAB_KOSZUL_HPP
