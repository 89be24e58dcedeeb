#ifndef KITTAB_MONOMIAL_HPP
#define KITTAB_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace kittab {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector of fixed length, plus a free-module component index
/// (always 0 for ring elements; module Gröbner bases use it for position).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  std::size_t size() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e);
  std::uint32_t degree() const { return degree_; }
  /// Bit i set iff variable i occurs.
  std::uint32_t support() const { return support_; }
  std::uint16_t component() const { return component_; }
  void set_component(std::uint16_t c) { component_ = c; }
  bool is_one() const { return degree_ == 0; }

  /// Same component and componentwise ≤.
  bool divides(const Monomial& other) const {
    if (component_ != other.component_ || degree_ > other.degree_ ||
        (support_ & ~other.support_) != 0)
      return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  /// Product; components add, so at most one factor should carry one.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient a / b; requires b | a up to component.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.component_ == b.component_ && a.degree_ == b.degree_ &&
           a.exp_ == b.exp_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exp_{};
  std::uint32_t degree_ = 0;
  std::uint32_t support_ = 0;
  std::uint16_t nvars_ = 0;
  std::uint16_t component_ = 0;
};

/// grevlex, lex, or block elimination of the first k variables
/// (grevlex inside each block, blocks compared lexicographically).
/// Components are compared first, lower index being larger
/// (position-over-term).
class MonomialOrder {
 public:
  enum class Kind { grevlex, lex, block_elimination };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex, 0); }
  static MonomialOrder elimination(std::size_t k) {
    return MonomialOrder(Kind::block_elimination, k);
  }

  Kind kind() const { return kind_; }
  std::size_t block() const { return block_; }

  /// Assumes equal lengths.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.component() != b.component()) return b.component() <=> a.component();
    switch (kind_) {
      case Kind::grevlex:
        return compare_grevlex(a, b, 0, a.size(), a.degree(), b.degree());
      case Kind::lex:
        for (std::size_t i = 0; i < a.size(); ++i)
          if (a[i] != b[i]) return a[i] <=> b[i];
        return std::strong_ordering::equal;
      case Kind::block_elimination:
        break;
    }
    std::uint32_t da = 0, db = 0;
    for (std::size_t i = 0; i < block_; ++i) {
      da += a[i];
      db += b[i];
    }
    if (auto c = compare_grevlex(a, b, 0, block_, da, db); c != 0) return c;
    return compare_grevlex(a, b, block_, a.size(), a.degree() - da, b.degree() - db);
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string to_string() const;
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  static std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b,
                                              std::size_t begin, std::size_t end,
                                              std::uint32_t da, std::uint32_t db) {
    if (da != db) return da <=> db;
    for (std::size_t i = end; i-- > begin;)
      if (a[i] != b[i]) return b[i] <=> a[i];
    return std::strong_ordering::equal;
  }

  Kind kind_;
  std::size_t block_;
};

/// Checked comparison; throws StructuralError on a length mismatch.
std::strong_ordering monomial_compare(const MonomialOrder& order, const Monomial& a,
                                      const Monomial& b);

}  // namespace kittab

#endif  // KITTAB_MONOMIAL_HPP
