#include "kittab/polynomial.hpp"

#include <sstream>

#include "kittab/errors.hpp"

namespace kittab {

namespace {

template <class C>
using Terms = detail::Terms<C>;

template <class A>
typename A::Coeff coeff_of(const A&, const FieldElement& e) {
  if constexpr (std::is_same_v<A, detail::RatArith>)
    return e.rational();
  else
    return e.residue();
}

template <class C>
FieldElement element_of(const Field& field, const C& c) {
  if constexpr (std::is_same_v<C, mpq_class>)
    return FieldElement(field, c);
  else
    return FieldElement::from_residue(field, c);
}

void require_field(const RingPtr& ring, const FieldElement& e) {
  if (!(ring->field() == e.field()))
    throw StructuralError("scalar from " + e.field().to_string() + " used in ring over " +
                          ring->field().to_string());
}

}  // namespace

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (ring_->field().is_rational())
    terms_ = RatTerms{};
  else
    terms_ = ModTerms{};
}

Polynomial::Polynomial(RingPtr ring, RatTerms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_->field().is_rational()) throw StructuralError("rational terms in a prime-field ring");
}

Polynomial::Polynomial(RingPtr ring, ModTerms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (ring_->field().is_rational()) throw StructuralError("residue terms in a rational ring");
}

Polynomial Polynomial::constant(const RingPtr& ring, long value) {
  return constant(ring, FieldElement(ring->field(), value));
}

Polynomial Polynomial::constant(const RingPtr& ring, const FieldElement& value) {
  return term(ring, Monomial(ring->size()), value);
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index) {
  if (index >= ring->size()) throw DomainError("variable index out of range");
  Monomial m(ring->size());
  m.set(index, 1);
  return term(ring, m, FieldElement(ring->field(), 1));
}

Polynomial Polynomial::term(const RingPtr& ring, const Monomial& mono, const FieldElement& coeff) {
  require_field(ring, coeff);
  if (mono.size() != ring->size()) throw StructuralError("monomial length does not match ring");
  Polynomial p(ring);
  if (coeff.is_zero()) return p;
  detail::with_arith(ring->field(), [&](auto k) {
    using C = typename decltype(k)::Coeff;
    std::get<Terms<C>>(p.terms_).push_back({mono, coeff_of(k, coeff)});
  });
  return p;
}

std::size_t Polynomial::size() const {
  return std::visit([](const auto& t) { return t.size(); }, terms_);
}

bool Polynomial::is_constant() const {
  return std::visit([](const auto& t) { return t.empty() || (t.size() == 1 && t[0].mono.is_one()); },
                    terms_);
}

int Polynomial::total_degree() const {
  return std::visit(
      [](const auto& t) {
        int d = -1;
        for (const auto& x : t) d = std::max(d, static_cast<int>(x.mono.degree()));
        return d;
      },
      terms_);
}

bool Polynomial::is_homogeneous() const {
  return std::visit(
      [](const auto& t) {
        for (const auto& x : t)
          if (x.mono.degree() != t.front().mono.degree()) return false;
        return true;
      },
      terms_);
}

const Monomial& Polynomial::leading_monomial() const {
  if (is_zero()) throw DomainError("leading term of the zero polynomial");
  return std::visit([](const auto& t) -> const Monomial& { return t.front().mono; }, terms_);
}

FieldElement Polynomial::leading_coefficient() const {
  if (is_zero()) throw DomainError("leading term of the zero polynomial");
  return coefficient(0);
}

std::pair<Monomial, FieldElement> Polynomial::leading_term() const {
  return {leading_monomial(), leading_coefficient()};
}

Monomial Polynomial::monomial(std::size_t i) const {
  return std::visit([&](const auto& t) { return t.at(i).mono; }, terms_);
}

FieldElement Polynomial::coefficient(std::size_t i) const {
  return std::visit([&](const auto& t) { return element_of(ring_->field(), t.at(i).coeff); },
                    terms_);
}

FieldElement Polynomial::coefficient_of(const Monomial& m) const {
  return std::visit(
      [&](const auto& t) {
        for (const auto& x : t)
          if (x.mono == m) return element_of(ring_->field(), x.coeff);
        return FieldElement(ring_->field(), 0);
      },
      terms_);
}

Polynomial Polynomial::monic() const {
  Polynomial p = *this;
  detail::with_arith(ring_->field(), [&](auto k) {
    using C = typename decltype(k)::Coeff;
    detail::make_monic(k, std::get<Terms<C>>(p.terms_));
  });
  return p;
}

Polynomial Polynomial::primitive() const {
  if (!ring_->field().is_rational() || is_zero()) return monic();
  Polynomial p = *this;
  auto& t = std::get<RatTerms>(p.terms_);
  mpz_class den = 1, num = 0;
  for (const auto& x : t) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.coeff.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), x.coeff.get_num_mpz_t());
  }
  mpq_class scale(den, num);
  scale.canonicalize();
  if (sgn(t.front().coeff) < 0) scale = -scale;
  for (auto& x : t) x.coeff *= scale;
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  detail::with_arith(ring_->field(), [&](auto k) {
    for (auto& x : std::get<Terms<typename decltype(k)::Coeff>>(p.terms_)) x.coeff = k.neg(x.coeff);
  });
  return p;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "add");
  return a.visit([&](auto k, const auto& ta) {
    using C = typename decltype(k)::Coeff;
    return Polynomial(a.ring_, detail::add_terms(k, a.ring_->order(), ta, b.terms<C>()));
  });
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "mul");
  return a.visit([&](auto k, const auto& ta) {
    using C = typename decltype(k)::Coeff;
    return Polynomial(a.ring_, detail::mul_terms(k, a.ring_->order(), ta, b.terms<C>()));
  });
}

Polynomial operator*(const FieldElement& c, const Polynomial& f) {
  require_field(f.ring_, c);
  Polynomial p = f;
  detail::with_arith(f.ring_->field(), [&](auto k) {
    using C = typename decltype(k)::Coeff;
    detail::scale_terms(k, std::get<Terms<C>>(p.terms_), coeff_of(k, c));
  });
  return p;
}

Polynomial operator*(long c, const Polynomial& f) {
  return FieldElement(f.ring_->field(), c) * f;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::shift(const Monomial& m) const {
  Polynomial p = *this;
  std::visit(
      [&](auto& t) {
        for (auto& x : t) x.mono = x.mono * m;
      },
      p.terms_);
  return p;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.size() != b.size()) return false;
  return a.visit([&](auto k, const auto& ta) {
    const auto& tb = b.terms<typename decltype(k)::Coeff>();
    for (std::size_t i = 0; i < ta.size(); ++i)
      if (!(ta[i].mono == tb[i].mono) || ta[i].coeff != tb[i].coeff) return false;
    return true;
  });
}

namespace {

void append_monomial(std::string& out, const Monomial& m, const PolyRing& ring, bool& first) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += ring.names()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  visit([&](auto k, const auto& t) {
    using A = decltype(k);
    bool leading = true;
    for (const auto& x : t) {
      bool negative = false;
      std::string magnitude;
      if constexpr (std::is_same_v<A, detail::RatArith>) {
        negative = sgn(x.coeff) < 0;
        magnitude = mpq_class(abs(x.coeff)).get_str();
      } else {
        std::uint32_t c = x.coeff;
        if (c > k.p / 2) {
          negative = true;
          c = k.p - c;
        }
        magnitude = std::to_string(c);
      }
      if (leading)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      leading = false;
      bool first = true;
      if (magnitude != "1" || x.mono.is_one()) {
        out += magnitude;
        first = false;
      }
      append_monomial(out, x.mono, *ring_, first);
    }
  });
  return out;
}

Polynomial map_variables(const Polynomial& f, const RingPtr& target, std::span<const int> var_map) {
  if (!(f.ring()->field() == target->field()))
    throw StructuralError("map_variables: field mismatch");
  if (var_map.size() != f.ring()->size()) throw StructuralError("map_variables: map length");
  return f.visit([&](auto k, const auto& t) {
    using C = typename decltype(k)::Coeff;
    Terms<C> out;
    out.reserve(t.size());
    for (const auto& x : t) {
      Monomial m(target->size());
      for (std::size_t i = 0; i < x.mono.size(); ++i) {
        if (x.mono[i] == 0) continue;
        if (var_map[i] < 0)
          throw DomainError("variable " + f.ring()->names()[i] + " cannot be mapped");
        m.set(static_cast<std::size_t>(var_map[i]), x.mono[i]);
      }
      m.set_component(x.mono.component());
      out.push_back({m, x.coeff});
    }
    detail::normalize_terms(k, target->order(), out);
    return Polynomial(target, std::move(out));
  });
}

Polynomial change_order(const Polynomial& f, const RingPtr& target) {
  if (f.ring()->names() != target->names() || !(f.ring()->field() == target->field()))
    throw StructuralError("change_order: rings differ beyond their order");
  return f.visit([&](auto, const auto& t) {
    auto out = t;
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
      return target->order().compare(x.mono, y.mono) > 0;
    });
    return Polynomial(target, std::move(out));
  });
}

Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images) {
  if (images.size() != f.ring()->size()) throw StructuralError("substitute: image count");
  for (const auto& g : images) require_same_ring(g.ring(), target, "substitute");
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (std::size_t j = 0; j < f.size(); ++j) {
    Monomial m = f.monomial(j);
    Polynomial t = Polynomial::constant(target, f.coefficient(j));
    for (std::size_t i = 0; i < m.size() && !t.is_zero(); ++i)
      if (m[i]) t *= power(i, m[i]);
    result += t;
  }
  return result;
}

Polynomial exact_quotient(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f.ring(), g.ring(), "exact_quotient");
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  return f.visit([&](auto k, const auto& tf) {
    using C = typename decltype(k)::Coeff;
    const auto& tg = g.terms<C>();
    const auto& ord = f.ring()->order();
    Terms<C> rest = tf;
    Terms<C> quotient;
    C lc_inv = k.inv(tg.front().coeff);
    while (!rest.empty()) {
      if (!tg.front().mono.divides(rest.front().mono))
        throw DomainError("inexact division of " + f.to_string() + " by " + g.to_string());
      Monomial m = rest.front().mono / tg.front().mono;
      C c = k.mul(rest.front().coeff, lc_inv);
      rest = detail::sub_mul_terms(k, ord, rest, 1, c, m, tg, 1);
      quotient.push_back({m, c});
    }
    return Polynomial(f.ring(), std::move(quotient));
  });
}

std::string to_string(std::span<const Polynomial> polys) {
  std::string s;
  for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + polys[i].to_string();
  return s;
}

}  // namespace kittab
