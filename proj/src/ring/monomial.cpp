#include "kittab/monomial.hpp"

#include <limits>

#include "kittab/errors.hpp"

namespace kittab {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
  if (nvars > kMaxVariables)
    throw StructuralError("at most " + std::to_string(kMaxVariables) +
                          " variables are supported, got " + std::to_string(nvars));
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > std::numeric_limits<std::uint16_t>::max())
    throw DomainError("exponent overflow");
  degree_ = degree_ - exp_[i] + e;
  exp_[i] = static_cast<std::uint16_t>(e);
  if (e > 0)
    support_ |= (1u << i);
  else
    support_ &= ~(1u << i);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    unsigned e = unsigned(a.exp_[i]) + b.exp_[i];
    if (e > std::numeric_limits<std::uint16_t>::max()) throw DomainError("exponent overflow");
    m.exp_[i] = static_cast<std::uint16_t>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  m.support_ = a.support_ | b.support_;
  m.component_ = static_cast<std::uint16_t>(a.component_ + b.component_);
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) m.set(i, a.exp_[i] - b.exp_[i]);
  m.component_ = static_cast<std::uint16_t>(a.component_ - b.component_);
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  std::uint32_t degree = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    degree += m.exp_[i];
  }
  m.degree_ = degree;
  m.support_ = a.support_ | b.support_;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = component_;
  for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exp_[i];
  return h;
}

std::string MonomialOrder::to_string() const {
  switch (kind_) {
    case Kind::grevlex:
      return "grevlex";
    case Kind::lex:
      return "lex";
    case Kind::block_elimination:
      return "elim(" + std::to_string(block_) + ")";
  }
  return "?";
}

std::strong_ordering monomial_compare(const MonomialOrder& order, const Monomial& a,
                                      const Monomial& b) {
  if (a.size() != b.size())
    throw StructuralError("monomial length mismatch: " + std::to_string(a.size()) + " vs " +
                          std::to_string(b.size()));
  return order.compare(a, b);
}

}  // namespace kittab
