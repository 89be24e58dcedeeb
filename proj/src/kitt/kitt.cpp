#include "kittab/kitt.hpp"

#include <map>

#include "kittab/errors.hpp"

namespace kittab {

KittInput::KittInput(std::vector<Polynomial> f, std::vector<Polynomial> a, PolyMatrix Phi)
    : f_(std::move(f)), a_(std::move(a)), Phi_(std::move(Phi)) {
  if (f_.empty()) throw DomainError("Kitt input needs at least one generator of I");
  if (f_.size() > 32 || a_.size() > 32) throw DomainError("at most 32 generators supported");
  const RingPtr& R = f_.front().ring();
  for (const auto& p : f_) require_same_ring(p.ring(), R, "Kitt input f");
  for (const auto& p : a_) require_same_ring(p.ring(), R, "Kitt input a");
  require_same_ring(Phi_.ring(), R, "Kitt input Phi");
  if (Phi_.rows() != f_.size() || Phi_.cols() != a_.size())
    throw StructuralError("Phi must be " + std::to_string(f_.size()) + "x" +
                          std::to_string(a_.size()) + ", got " + std::to_string(Phi_.rows()) +
                          "x" + std::to_string(Phi_.cols()));
  auto product = row_times(f_, Phi_);
  for (std::size_t j = 0; j < a_.size(); ++j)
    if (!(product[j] == a_[j]))
      throw PreconditionError("[a] != [f]*Phi in column " + std::to_string(j + 1) + ": " +
                              a_[j].to_string() + " vs " + product[j].to_string());
}

KittInput KittInput::from_generators(std::vector<Polynomial> f, std::vector<Polynomial> a) {
  if (f.empty()) throw DomainError("Kitt input needs at least one generator of I");
  PolyMatrix Phi = lift(f, a);
  return KittInput(std::move(f), std::move(a), std::move(Phi));
}

KittInput KittInput::select(std::span<const std::size_t> columns) const {
  std::vector<Polynomial> a;
  for (auto j : columns) a.push_back(a_.at(j));
  return KittInput(f_, std::move(a), Phi_.select_columns(columns));
}

KoszulElement zeta(const KittInput& in, std::size_t j) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < in.r(); ++i) c.push_back(in.Phi()(i, j));
  return KoszulElement::linear(c);
}

namespace {

IndexSet top_set(std::size_t r) { return r >= 32 ? ~IndexSet{0} : (IndexSet{1} << r) - 1; }

std::vector<std::size_t> members(IndexSet L) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; L; ++j, L >>= 1)
    if (L & 1) out.push_back(j);
  return out;
}

std::vector<CycleBasis> all_cycles(const KittInput& in, const Ideal* modulo) {
  std::vector<CycleBasis> Z;
  for (std::size_t i = 0; i <= in.r(); ++i)
    Z.push_back(modulo ? cycles_modulo(in.f(), i, *modulo) : cycles(in.f(), i));
  return Z;
}

void add_clean(std::vector<Polynomial>& gens, const Polynomial& p) {
  if (p.is_zero()) return;
  Polynomial q = p.primitive();
  for (const auto& g : gens)
    if (g == q) return;
  gens.push_back(std::move(q));
}

/// ζ_{L}, the wedge of the ζ_j for j ∈ L in increasing order.
KoszulElement zeta_product(const KittInput& in, IndexSet L) {
  KoszulElement w = KoszulElement::basis(Polynomial::constant(in.ring(), 1), in.r(), 0);
  for (auto j : members(L)) w = wedge(w, zeta(in, j));
  return w;
}

}  // namespace

KittResult kitt_ideal(const KittInput& in, std::span<const CycleBasis> Z) {
  const std::size_t r = in.r(), s = in.s();
  if (Z.size() != r + 1) throw StructuralError("kitt_ideal needs cycles Z_0..Z_r");
  const IndexSet top = top_set(r);
  KittResult result{Ideal::zero(in.ring()), {}};
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k <= std::min(r, s); ++k) {
    KittStratum stratum{k, {}};
    const auto& cycles_k = Z[r - k].generators;
    for (IndexSet L : koszul_basis(s, k)) {
      KoszulElement zL = zeta_product(in, L);
      for (std::size_t c = 0; c < cycles_k.size(); ++c) {
        Polynomial coeff = wedge(zL, cycles_k[c]).coefficient(top);
        add_clean(gens, coeff);
        stratum.generators.push_back({std::move(coeff), members(L), c});
      }
    }
    result.strata.push_back(std::move(stratum));
  }
  result.ideal = Ideal(in.ring(), std::move(gens));
  return result;
}

KittResult kitt_ideal(const KittInput& in) {
  auto Z = all_cycles(in, nullptr);
  return kitt_ideal(in, Z);
}

KittResult kitt_ideal_modulo(const KittInput& in, const Ideal& b) {
  require_same_ring(b.ring(), in.ring(), "kitt_ideal_modulo");
  auto Z = all_cycles(in, &b);
  return kitt_ideal(in, Z);
}

namespace {

Ideal sum_of(const RingPtr& R, std::initializer_list<const Ideal*> parts) {
  std::vector<Polynomial> gens;
  for (const Ideal* I : parts)
    for (const auto& g : I->generators()) add_clean(gens, g);
  return Ideal(R, std::move(gens));
}

}  // namespace

Ideal kitt_recursive_small_r(const KittInput& in) {
  const std::size_t r = in.r(), s = in.s();
  if (r > s) throw DomainError("kitt_recursive_small_r needs r <= s (r = " + std::to_string(r) +
                               ", s = " + std::to_string(s) + ")");
  Ideal a = in.a_ideal();
  Ideal fitt = fitting_zero(in.f(), in.Phi());
  Ideal total = sum_of(in.ring(), {&a, &fitt});
  if (r >= 2) {
    auto Z = all_cycles(in, nullptr);
    for (IndexSet sub : koszul_basis(s, r - 2)) {
      auto cols = members(sub);
      Ideal part = kitt_ideal(in.select(cols), Z).ideal;
      total = sum_of(in.ring(), {&total, &part});
    }
  }
  return total;
}

namespace {

Ideal large_r(const KittInput& full, IndexSet columns, std::span<const CycleBasis> Z,
              std::map<IndexSet, Ideal>& memo) {
  if (auto it = memo.find(columns); it != memo.end()) return it->second;
  const std::size_t r = full.r();
  auto cols = members(columns);
  std::vector<Polynomial> gens;
  for (IndexSet rest = columns; rest; rest &= rest - 1) {
    IndexSet omit = columns & ~(rest & (~rest + 1));
    Ideal sub = large_r(full, omit, Z, memo);
    for (const auto& g : sub.generators()) add_clean(gens, g);
  }
  KoszulElement zL = zeta_product(full, columns);
  for (const auto& z : Z[r - cols.size()].generators)
    add_clean(gens, wedge(zL, z).coefficient(top_set(r)));
  Ideal out(full.ring(), std::move(gens));
  memo.emplace(columns, out);
  return out;
}

}  // namespace

Ideal kitt_recursive_large_r(const KittInput& in) {
  const std::size_t r = in.r(), s = in.s();
  if (r < s) throw DomainError("kitt_recursive_large_r needs r >= s (r = " + std::to_string(r) +
                               ", s = " + std::to_string(s) + ")");
  auto Z = all_cycles(in, nullptr);
  std::map<IndexSet, Ideal> memo;
  return large_r(in, top_set(s), Z, memo);
}

}  // namespace kittab
