#include "kittab/ideal.hpp"

#include <numeric>

#include "kittab/detail/groebner.hpp"
#include "kittab/errors.hpp"

namespace kittab {

namespace {

std::vector<Polynomial> run_groebner(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  return detail::with_arith(ring->field(), [&](auto k) {
    using C = typename decltype(k)::Coeff;
    std::vector<detail::Terms<C>> input;
    input.reserve(gens.size());
    for (const auto& g : gens) input.push_back(g.terms<C>());
    auto basis = detail::groebner(k, ring->order(), std::move(input));
    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (auto& b : basis) out.emplace_back(ring, std::move(b));
    return out;
  });
}

/// A name not used by the ring, starting from "@t".
std::string fresh_name(const PolyRing& ring) {
  std::string name = kAuxVariable;
  for (int i = 2; ring.index_of(name); ++i) name = std::string(kAuxVariable) + std::to_string(i);
  return name;
}

std::vector<int> shift_map(std::size_t n, int by) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), by);
  return m;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(g.ring(), ring_, "ideal generator");
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [&] { cache_->basis = run_groebner(ring_, generators_); });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb.front().is_constant();
}

std::string Ideal::to_string() const { return "ideal(" + kittab::to_string(generators_) + ")"; }

const std::vector<Polynomial>& groebner_basis(const Ideal& I) { return I.groebner_basis(); }

Polynomial normal_form(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "normal_form");
  const auto& gb = I.groebner_basis();
  return f.visit([&](auto k, const auto& terms) {
    using C = typename decltype(k)::Coeff;
    std::vector<detail::Terms<C>> basis;
    basis.reserve(gb.size());
    for (const auto& g : gb) basis.push_back(g.terms<C>());
    return Polynomial(f.ring(), detail::reduce(k, f.ring()->order(), terms, basis));
  });
}

bool ideal_member(const Polynomial& f, const Ideal& I) { return normal_form(f, I).is_zero(); }

bool ideal_contains(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_contains");
  for (const auto& g : J.generators())
    if (!ideal_member(g, I)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_equal");
  return I.groebner_basis() == J.groebner_basis();
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_sum");
  auto gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_product");
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators())
    for (const auto& g : J.generators()) gens.push_back(f * g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal map_ideal(const Ideal& I, const RingPtr& target, std::span<const int> var_map) {
  std::vector<Polynomial> gens;
  gens.reserve(I.generators().size());
  for (const auto& g : I.generators()) gens.push_back(map_variables(g, target, var_map));
  return Ideal(target, std::move(gens));
}

Ideal extend_ideal(const Ideal& I, const RingPtr& target) {
  if (target->size() < I.ring()->size()) throw StructuralError("extend_ideal: smaller target");
  for (std::size_t i = 0; i < I.ring()->size(); ++i)
    if (I.ring()->names()[i] != target->names()[i])
      throw StructuralError("extend_ideal: target does not extend the ring");
  auto m = shift_map(I.ring()->size(), 0);
  return map_ideal(I, target, m);
}

Ideal eliminate(const Ideal& I, std::size_t first_k) {
  const RingPtr& ring = I.ring();
  if (first_k > ring->size()) throw DomainError("eliminate: more variables than the ring has");
  RingPtr elim = ring->with_order(MonomialOrder::elimination(first_k));
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(change_order(g, elim));
  Ideal J(elim, std::move(gens));
  const std::uint32_t mask = first_k >= 32 ? ~0u : ((1u << first_k) - 1);
  std::vector<Polynomial> kept;
  for (const auto& g : J.groebner_basis()) {
    bool free = true;
    for (std::size_t i = 0; i < g.size() && free; ++i)
      if (g.monomial(i).support() & mask) free = false;
    if (free) kept.push_back(change_order(g, ring));
  }
  return Ideal(ring, std::move(kept));
}

namespace {

/// I ∩ J inside `ring` via t·I + (1 - t)·J with t prepended.
Ideal intersect_impl(const Ideal& I, const Ideal& J) {
  const RingPtr& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  RingPtr ext = ring->prepend(fresh_name(*ring), MonomialOrder::elimination(1));
  auto up = shift_map(ring->size(), 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.generators()) gens.push_back(t * map_variables(f, ext, up));
  for (const auto& g : J.generators()) gens.push_back(one_minus_t * map_variables(g, ext, up));
  Ideal K(ext, std::move(gens));
  std::vector<int> down(ext->size());
  down[0] = -1;
  for (std::size_t i = 1; i < ext->size(); ++i) down[i] = static_cast<int>(i - 1);
  std::vector<Polynomial> kept;
  for (const auto& g : K.groebner_basis())
    if (g.leading_monomial()[0] == 0) kept.push_back(map_variables(g, ring, down));
  return Ideal(ring, std::move(kept));
}

}  // namespace

Ideal intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "intersect");
  return intersect_impl(I, J);
}

Ideal colon(const Ideal& I, const Polynomial& g) {
  require_same_ring(I.ring(), g.ring(), "colon");
  if (g.is_zero()) throw DomainError("colon by the zero ideal");
  Ideal K = intersect_impl(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> quotients;
  for (const auto& h : K.generators()) quotients.push_back(exact_quotient(h, g));
  return Ideal(I.ring(), std::move(quotients));
}

Ideal colon(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "colon");
  if (J.is_zero()) throw DomainError("colon by the zero ideal");
  std::optional<Ideal> result;
  for (const auto& g : J.generators()) {
    Ideal q = colon(I, g);
    result = result ? intersect_impl(*result, q) : q;
    if (result->is_zero()) break;
  }
  return *result;
}

bool radical_member(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "radical_member");
  const RingPtr& ring = I.ring();
  RingPtr ext = ring->prepend(fresh_name(*ring), ring->order());
  auto up = shift_map(ring->size(), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(map_variables(g, ext, up));
  gens.push_back(Polynomial::constant(ext, 1) -
                 Polynomial::variable(ext, 0) * map_variables(f, ext, up));
  return Ideal(ext, std::move(gens)).is_unit();
}

bool radical_contains(const Ideal& I, const Ideal& J) {
  for (const auto& g : J.generators())
    if (!radical_member(g, I)) return false;
  return true;
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  if (basis.empty()) return true;
  const RingPtr& ring = basis.front().ring();
  return detail::with_arith(ring->field(), [&](auto k) {
    using C = typename decltype(k)::Coeff;
    std::vector<detail::Terms<C>> b;
    for (const auto& g : basis) b.push_back(g.terms<C>());
    return detail::satisfies_buchberger_criterion(k, ring->order(), b);
  });
}

}  // namespace kittab
