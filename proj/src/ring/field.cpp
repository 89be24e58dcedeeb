#include "kittab/field.hpp"

#include "kittab/errors.hpp"

namespace kittab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw DomainError("characteristic must be a prime below 2^31, got " +
                      std::to_string(p));
  return Field(p);
}

std::string Field::to_string() const {
  return is_rational() ? "QQ" : "ZZ/" + std::to_string(p_);
}

namespace detail {

ModArith::Coeff ModArith::inv(Coeff a) const {
  if (a == 0) throw DomainError("division by zero in " + Field::prime(p).to_string());
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<Coeff>(t);
}

ModArith::Coeff ModArith::from_rational(const mpq_class& q) const {
  mpz_class num = q.get_num() % p;
  mpz_class den = q.get_den() % p;
  if (num < 0) num += p;
  if (den == 0)
    throw DomainError("denominator of " + q.get_str() + " vanishes mod " +
                      std::to_string(p));
  return div(static_cast<Coeff>(num.get_ui()), static_cast<Coeff>(den.get_ui()));
}

RatArith::Coeff RatArith::inv(const Coeff& a) const {
  if (sgn(a) == 0) throw DomainError("division by zero in QQ");
  return Coeff(1) / a;
}

}  // namespace detail

FieldElement::FieldElement(const Field& field, long value) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(value);
  else
    value_ = detail::ModArith{field.characteristic()}.from_long(value);
}

FieldElement::FieldElement(const Field& field, const mpq_class& value) : field_(field) {
  mpq_class v = value;
  v.canonicalize();
  if (field.is_rational())
    value_ = v;
  else
    value_ = detail::ModArith{field.characteristic()}.from_rational(v);
}

FieldElement FieldElement::from_residue(const Field& field, std::uint32_t residue) {
  if (field.is_rational()) throw StructuralError("residue given for a rational field");
  FieldElement e;
  e.field_ = field;
  e.value_ = residue % field.characteristic();
  return e;
}

bool FieldElement::is_zero() const {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (!field_.is_rational()) throw StructuralError("not a rational field element");
  return std::get<mpq_class>(value_);
}

std::uint32_t FieldElement::residue() const {
  if (field_.is_rational()) throw StructuralError("not a prime field element");
  return std::get<std::uint32_t>(value_);
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw StructuralError("field mismatch: " + a.field().to_string() + " vs " +
                          b.field().to_string());
}

template <class Op>
FieldElement combine(const FieldElement& a, const FieldElement& b, Op op) {
  check_same_field(a, b);
  return detail::with_arith(a.field(), [&](auto arith) {
    using A = decltype(arith);
    if constexpr (std::is_same_v<A, detail::RatArith>)
      return FieldElement(a.field(), op(arith, a.rational(), b.rational()));
    else
      return FieldElement::from_residue(a.field(), op(arith, a.residue(), b.residue()));
  });
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return combine(a, b, [](auto& k, const auto& x, const auto& y) { return k.add(x, y); });
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return combine(a, b, [](auto& k, const auto& x, const auto& y) { return k.sub(x, y); });
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return combine(a, b, [](auto& k, const auto& x, const auto& y) { return k.mul(x, y); });
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  return combine(a, b, [](auto& k, const auto& x, const auto& y) { return k.div(x, y); });
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, 0) - *this; }

FieldElement FieldElement::inverse() const { return FieldElement(field_, 1) / *this; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

}  // namespace kittab
