#ifndef KITTAB_POLYNOMIAL_HPP
#define KITTAB_POLYNOMIAL_HPP

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "kittab/detail/terms.hpp"
#include "kittab/ring.hpp"

namespace kittab {

/// Sparse polynomial over a PolyRing, terms kept in descending order.
class Polynomial {
 public:
  using RatTerms = detail::Terms<mpq_class>;
  using ModTerms = detail::Terms<std::uint32_t>;

  explicit Polynomial(RingPtr ring);
  /// Adopts terms that already satisfy the ordering invariant.
  Polynomial(RingPtr ring, RatTerms terms);
  Polynomial(RingPtr ring, ModTerms terms);

  static Polynomial constant(const RingPtr& ring, long value);
  static Polynomial constant(const RingPtr& ring, const FieldElement& value);
  static Polynomial variable(const RingPtr& ring, std::size_t index);
  static Polynomial term(const RingPtr& ring, const Monomial& mono, const FieldElement& coeff);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return size() == 0; }
  std::size_t size() const;
  bool is_constant() const;
  /// Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  /// Throws DomainError for the zero polynomial.
  const Monomial& leading_monomial() const;
  FieldElement leading_coefficient() const;
  std::pair<Monomial, FieldElement> leading_term() const;

  Monomial monomial(std::size_t i) const;
  FieldElement coefficient(std::size_t i) const;
  /// Coefficient of a given monomial (zero if absent).
  FieldElement coefficient_of(const Monomial& m) const;

  Polynomial monic() const;
  /// Scales so the leading coefficient is positive (QQ) or leaves as is
  /// (prime fields); clears denominators and integer content over QQ.
  Polynomial primitive() const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const FieldElement& c, const Polynomial& f);
  friend Polynomial operator*(long c, const Polynomial& f);
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }
  Polynomial pow(unsigned e) const;
  /// f * m for a monomial m.
  Polynomial shift(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

  template <class C>
  const detail::Terms<C>& terms() const {
    return std::get<detail::Terms<C>>(terms_);
  }

  /// Calls fn(arith, terms) with the arithmetic policy of the ring's field.
  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return detail::with_arith(ring_->field(), [&](auto arith) -> decltype(auto) {
      using C = typename decltype(arith)::Coeff;
      return fn(arith, std::get<detail::Terms<C>>(terms_));
    });
  }

 private:
  RingPtr ring_;
  std::variant<ModTerms, RatTerms> terms_;
};

/// Re-embeds f into `target`, sending variable i to target variable
/// var_map[i]. A negative entry means the variable must not occur in f.
Polynomial map_variables(const Polynomial& f, const RingPtr& target,
                         std::span<const int> var_map);

/// Same variables, target ring may differ only in its order.
Polynomial change_order(const Polynomial& f, const RingPtr& target);

/// Ring homomorphism sending variable i of f's ring to images[i].
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images);

/// q with f = q * g; throws DomainError when g does not divide f.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& g);

/// Throws ParseError (line 1, column relative to the text) on failure.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

std::string to_string(std::span<const Polynomial> polys);

}  // namespace kittab

#endif  // KITTAB_POLYNOMIAL_HPP
