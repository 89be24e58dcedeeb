#ifndef KITTAB_FIELD_HPP
#define KITTAB_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

namespace kittab {

/// Coefficient field descriptor: the rationals, or Z/p for a prime p < 2^31.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(); }
  /// Throws DomainError unless p is a prime below 2^31.
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  std::uint32_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t n);

/// A scalar of a Field. Rationals are kept reduced with positive
/// denominator; residues lie in [0, p).
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const Field& field, long value);
  FieldElement(const Field& field, const mpq_class& value);
  static FieldElement from_residue(const Field& field, std::uint32_t residue);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Requires a rational field.
  const mpq_class& rational() const;
  /// Requires a prime field.
  std::uint32_t residue() const;

  FieldElement operator-() const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  std::string to_string() const;

 private:
  Field field_;
  std::variant<mpq_class, std::uint32_t> value_{mpq_class(0)};
};

namespace detail {

/// Arithmetic on Z/p residues stored as uint32.
struct ModArith {
  using Coeff = std::uint32_t;
  std::uint32_t p;

  Coeff zero() const { return 0; }
  Coeff one() const { return 1; }
  bool is_zero(Coeff a) const { return a == 0; }
  bool is_one(Coeff a) const { return a == 1; }
  Coeff add(Coeff a, Coeff b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  Coeff sub(Coeff a, Coeff b) const { return a >= b ? a - b : a + p - b; }
  Coeff neg(Coeff a) const { return a == 0 ? 0 : p - a; }
  Coeff mul(Coeff a, Coeff b) const {
    return static_cast<Coeff>((static_cast<std::uint64_t>(a) * b) % p);
  }
  Coeff inv(Coeff a) const;
  Coeff div(Coeff a, Coeff b) const { return mul(a, inv(b)); }
  Coeff from_long(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<Coeff>(r < 0 ? r + static_cast<long>(p) : r);
  }
  Coeff from_rational(const mpq_class& q) const;
  // a -= b * c
  void sub_mul(Coeff& a, Coeff b, Coeff c) const { a = sub(a, mul(b, c)); }
};

/// Exact rational arithmetic through GMP.
struct RatArith {
  using Coeff = mpq_class;

  Coeff zero() const { return Coeff(0); }
  Coeff one() const { return Coeff(1); }
  bool is_zero(const Coeff& a) const { return sgn(a) == 0; }
  bool is_one(const Coeff& a) const { return a == 1; }
  Coeff add(const Coeff& a, const Coeff& b) const { return a + b; }
  Coeff sub(const Coeff& a, const Coeff& b) const { return a - b; }
  Coeff neg(const Coeff& a) const { return -a; }
  Coeff mul(const Coeff& a, const Coeff& b) const { return a * b; }
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const { return a / b; }
  Coeff from_long(long v) const { return Coeff(v); }
  Coeff from_rational(const mpq_class& q) const { return q; }
  void sub_mul(Coeff& a, const Coeff& b, const Coeff& c) const { a -= b * c; }
};

/// Calls fn with the arithmetic policy matching the field.
template <class Fn>
decltype(auto) with_arith(const Field& field, Fn&& fn) {
  if (field.is_rational()) return fn(RatArith{});
  return fn(ModArith{field.characteristic()});
}

}  // namespace detail
}  // namespace kittab

#endif  // KITTAB_FIELD_HPP
