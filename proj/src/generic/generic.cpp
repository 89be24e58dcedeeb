#include "kittab/generic.hpp"

#include <numeric>

#include "kittab/errors.hpp"

namespace kittab {

namespace {

std::vector<int> identity_map(std::size_t n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

KoszulElement embed_element(const KoszulElement& z, const RingPtr& S, std::span<const int> m) {
  KoszulElement out(S, z.rank());
  for (const auto& [set, c] : z.terms()) out.add(set, map_variables(c, S, m));
  return out;
}

}  // namespace

GenericExtension::GenericExtension(RingPtr extended, std::size_t s, std::vector<Polynomial> f,
                                   PolyMatrix Psi)
    : base_(f.front().ring()),
      extended_(std::move(extended)),
      s_(s),
      f_(std::move(f)),
      Psi_(std::move(Psi)) {
  for (const auto& p : f_) f_ext_.push_back(embed(p));
  alpha_ = row_times(f_ext_, Psi_);
}

GenericExtension GenericExtension::make(std::vector<Polynomial> f, std::size_t s) {
  if (f.empty()) throw DomainError("generic extension needs at least one generator");
  if (s == 0) throw DomainError("generic extension needs s >= 1");
  const RingPtr R = f.front().ring();
  for (const auto& p : f) require_same_ring(p.ring(), R, "generic extension");
  if (R->size() + f.size() * s > kMaxVariables)
    throw DomainError("generic extension needs more than " + std::to_string(kMaxVariables) +
                      " variables");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= f.size(); ++i)
    for (std::size_t j = 1; j <= s; ++j) {
      std::string name = "U" + std::to_string(i) + "_" + std::to_string(j);
      if (R->index_of(name))
        throw StructuralError("variable " + name + " already exists in the base ring");
      names.push_back(std::move(name));
    }
  RingPtr S = R->append(names);
  std::vector<Polynomial> u;
  for (std::size_t v = R->size(); v < S->size(); ++v) u.push_back(Polynomial::variable(S, v));
  PolyMatrix Psi(S, f.size(), s, std::move(u));
  return GenericExtension(std::move(S), s, std::move(f), std::move(Psi));
}

Polynomial GenericExtension::embed(const Polynomial& p) const {
  require_same_ring(p.ring(), base_, "embed");
  return map_variables(p, extended_, identity_map(base_->size()));
}

Ideal GenericExtension::embed(const Ideal& I) const { return extend_ideal(I, extended_); }

KittInput GenericExtension::generic_input() const { return KittInput(f_ext_, alpha_, Psi_); }

SpecializationData SpecializationData::make(const GenericExtension& ext, PolyMatrix Phi) {
  require_same_ring(Phi.ring(), ext.base(), "specialization matrix");
  if (Phi.rows() != ext.r() || Phi.cols() != ext.s())
    throw StructuralError("specialization matrix must be " + std::to_string(ext.r()) + "x" +
                          std::to_string(ext.s()));
  std::vector<Polynomial> x;
  for (std::size_t i = 0; i < ext.r(); ++i)
    for (std::size_t j = 0; j < ext.s(); ++j)
      x.push_back(Polynomial::variable(ext.extended(), ext.u_index(i, j)) - ext.embed(Phi(i, j)));
  return {std::move(Phi), std::move(x)};
}

Ideal generic_kitt(const GenericExtension& ext) {
  const RingPtr& S = ext.extended();
  auto m = identity_map(ext.base()->size());
  std::vector<CycleBasis> Z;
  for (std::size_t i = 0; i <= ext.r(); ++i) {
    CycleBasis base = cycles(ext.f(), i);
    CycleBasis lifted{i, {}};
    for (const auto& z : base.generators) lifted.generators.push_back(embed_element(z, S, m));
    Z.push_back(std::move(lifted));
  }
  return kitt_ideal(ext.generic_input(), Z).ideal;
}

Ideal generic_residual(const GenericExtension& ext) {
  Ideal alpha(ext.extended(), ext.alpha());
  Ideal IS(ext.extended(), ext.f_extended());
  if (IS.is_zero()) return Ideal::unit(ext.extended());
  return colon(alpha, IS);
}

Ideal specialize(const Ideal& K, const GenericExtension& ext, const SpecializationData& spec) {
  require_same_ring(K.ring(), ext.extended(), "specialize");
  require_same_ring(spec.Phi.ring(), ext.base(), "specialize");
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < ext.base()->size(); ++v)
    images.push_back(Polynomial::variable(ext.base(), v));
  for (const auto& c : spec.Phi.entries()) images.push_back(c);
  std::vector<Polynomial> gens;
  for (const auto& g : K.generators()) gens.push_back(substitute(g, ext.base(), images));
  return Ideal(ext.base(), std::move(gens));
}

std::vector<Polynomial> pad_generators(const Ideal& a, std::size_t s) {
  std::vector<Polynomial> gens = a.generators();
  if (gens.size() > s)
    throw PreconditionError("a has " + std::to_string(gens.size()) +
                            " generators, more than s = " + std::to_string(s));
  while (gens.size() < s) gens.emplace_back(a.ring());
  return gens;
}

}  // namespace kittab
