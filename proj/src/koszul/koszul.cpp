#include "kittab/koszul.hpp"

#include <bit>

#include "kittab/errors.hpp"

namespace kittab {

std::vector<IndexSet> koszul_basis(std::size_t r, std::size_t i) {
  if (r > 32) throw DomainError("Koszul complexes on more than 32 generators");
  if (i > r) return {};
  std::vector<IndexSet> out;
  std::vector<std::size_t> idx(i);
  for (std::size_t k = 0; k < i; ++k) idx[k] = k;
  for (;;) {
    IndexSet S = 0;
    for (auto k : idx) S |= IndexSet{1} << k;
    out.push_back(S);
    std::size_t k = i;
    while (k > 0 && idx[k - 1] == r - i + k - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < i; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

KoszulElement::KoszulElement(RingPtr ring, std::size_t r) : ring_(std::move(ring)), r_(r) {
  if (r > 32) throw DomainError("Koszul complexes on more than 32 generators");
}

KoszulElement KoszulElement::basis(const Polynomial& c, std::size_t r, IndexSet S) {
  KoszulElement e(c.ring(), r);
  if (r < 32 && (S >> r) != 0) throw DomainError("index set outside 1..r");
  e.add(S, c);
  return e;
}

KoszulElement KoszulElement::linear(std::span<const Polynomial> coeffs) {
  if (coeffs.empty()) throw DomainError("linear form needs at least one coefficient");
  KoszulElement e(coeffs.front().ring(), coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.add(IndexSet{1} << i, coeffs[i]);
  return e;
}

Polynomial KoszulElement::coefficient(IndexSet S) const {
  auto it = terms_.find(S);
  return it == terms_.end() ? Polynomial(ring_) : it->second;
}

std::optional<std::size_t> KoszulElement::degree() const {
  std::optional<std::size_t> d;
  for (const auto& [S, c] : terms_) {
    std::size_t k = std::popcount(S);
    if (d && *d != k) return std::nullopt;
    d = k;
  }
  return d;
}

KoszulElement& KoszulElement::add(IndexSet S, const Polynomial& c) {
  require_same_ring(c.ring(), ring_, "Koszul coefficient");
  if (c.is_zero()) return *this;
  auto it = terms_.find(S);
  if (it == terms_.end()) {
    terms_.emplace(S, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

namespace {
void require_rank(const KoszulElement& a, const KoszulElement& b) {
  if (a.rank() != b.rank())
    throw StructuralError("Koszul rank mismatch: " + std::to_string(a.rank()) + " vs " +
                          std::to_string(b.rank()));
  require_same_ring(a.ring(), b.ring(), "Koszul element");
}
}  // namespace

KoszulElement operator+(const KoszulElement& a, const KoszulElement& b) {
  require_rank(a, b);
  KoszulElement out = a;
  for (const auto& [S, c] : b.terms_) out.add(S, c);
  return out;
}

KoszulElement operator-(const KoszulElement& a, const KoszulElement& b) {
  require_rank(a, b);
  KoszulElement out = a;
  for (const auto& [S, c] : b.terms_) out.add(S, -c);
  return out;
}

KoszulElement operator*(const Polynomial& c, const KoszulElement& a) {
  KoszulElement out(a.ring_, a.r_);
  if (c.is_zero()) return out;
  for (const auto& [S, x] : a.terms_) out.add(S, c * x);
  return out;
}

std::string KoszulElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [S, c] : terms_) {
    std::string basis;
    if (S == 0) {
      basis = "";
    } else if (std::popcount(S) == 1) {
      basis = "e" + std::to_string(std::countr_zero(S) + 1);
    } else {
      basis = "e{";
      bool f = true;
      for (IndexSet rest = S; rest; rest &= rest - 1) {
        basis += (f ? "" : ",") + std::to_string(std::countr_zero(rest) + 1);
        f = false;
      }
      basis += "}";
    }
    std::string coeff = c.to_string();
    bool negative_mono = c.size() == 1 && coeff.front() == '-';
    if (!first) s += negative_mono ? " - " : " + ";
    if (negative_mono && first) s += "-";
    if (negative_mono) coeff = coeff.substr(1);
    first = false;
    if (basis.empty())
      s += c.size() > 1 ? "(" + coeff + ")" : coeff;
    else if (coeff == "1")
      s += basis;
    else
      s += (c.size() > 1 ? "(" + coeff + ")" : coeff) + "*" + basis;
  }
  return s;
}

int wedge_sign(IndexSet S, IndexSet T) {
  int inversions = 0;
  for (IndexSet rest = T; rest; rest &= rest - 1) {
    int t = std::countr_zero(rest);
    IndexSet above = t >= 31 ? 0 : (S >> (t + 1));
    inversions += std::popcount(above);
  }
  return inversions % 2 ? -1 : 1;
}

KoszulElement wedge(const KoszulElement& a, const KoszulElement& b) {
  require_rank(a, b);
  KoszulElement out(a.ring(), a.rank());
  for (const auto& [S, x] : a.terms())
    for (const auto& [T, y] : b.terms()) {
      if (S & T) continue;
      Polynomial c = x * y;
      out.add(S | T, wedge_sign(S, T) > 0 ? c : -c);
    }
  return out;
}

KoszulElement differential(const KoszulElement& a, std::span<const Polynomial> f) {
  if (f.size() != a.rank())
    throw StructuralError("differential needs " + std::to_string(a.rank()) + " elements, got " +
                          std::to_string(f.size()));
  KoszulElement out(a.ring(), a.rank());
  for (const auto& [S, c] : a.terms()) {
    int position = 0;
    for (IndexSet rest = S; rest; rest &= rest - 1, ++position) {
      int k = std::countr_zero(rest);
      Polynomial term = c * f[k];
      out.add(S & ~(IndexSet{1} << k), position % 2 == 0 ? term : -term);
    }
  }
  return out;
}

namespace {

CycleBasis cycles_impl(std::span<const Polynomial> f, std::size_t i, const Ideal* modulo) {
  if (f.empty()) throw DomainError("cycles of an empty sequence");
  const std::size_t r = f.size();
  if (i > r) throw DomainError("cycle degree " + std::to_string(i) + " outside 0.." + std::to_string(r));
  const RingPtr& ring = f.front().ring();
  CycleBasis out{i, {}};
  if (i == 0) {
    out.generators.push_back(KoszulElement::basis(Polynomial::constant(ring, 1), r, 0));
    return out;
  }
  auto source = koszul_basis(r, i);
  auto target = koszul_basis(r, i - 1);
  std::map<IndexSet, std::size_t> position;
  for (std::size_t t = 0; t < target.size(); ++t) position[target[t]] = t;
  std::vector<FreeVector> columns;
  for (IndexSet S : source) {
    auto d = differential(KoszulElement::basis(Polynomial::constant(ring, 1), r, S), f);
    std::vector<Polynomial> entries(target.size(), Polynomial(ring));
    for (const auto& [T, c] : d.terms()) entries[position.at(T)] = c;
    columns.emplace_back(ring, std::move(entries));
  }
  auto kernel = modulo ? syzygies_modulo(columns, *modulo) : syzygies(columns);
  for (const auto& h : kernel) {
    KoszulElement z(ring, r);
    for (std::size_t s = 0; s < source.size(); ++s) z.add(source[s], h[s]);
    out.generators.push_back(std::move(z));
  }
  return out;
}

}  // namespace

CycleBasis cycles(std::span<const Polynomial> f, std::size_t i) { return cycles_impl(f, i, nullptr); }

CycleBasis cycles_modulo(std::span<const Polynomial> f, std::size_t i, const Ideal& b) {
  return cycles_impl(f, i, &b);
}

}  // namespace kittab
