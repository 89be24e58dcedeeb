#include "kittab/detail/groebner.hpp"

#include <algorithm>

namespace kittab::detail {

namespace {

template <class A>
class Buchberger {
  using C = typename A::Coeff;
  using P = Terms<C>;

 public:
  Buchberger(const A& k, const MonomialOrder& order, GroebnerOptions options)
      : k_(k), order_(order), options_(options) {}

  std::vector<P> run(std::vector<P> input) {
    input.erase(std::remove_if(input.begin(), input.end(), [](const P& p) { return p.empty(); }),
                input.end());
    std::stable_sort(input.begin(), input.end(), [&](const P& a, const P& b) {
      return order_.compare(a.front().mono, b.front().mono) < 0;
    });
    for (auto& p : input) {
      P h = reduce_full(std::move(p));
      if (!h.empty()) insert(std::move(h));
    }
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t q = 1; q < pairs_.size(); ++q) {
        auto c = order_.compare(pairs_[q].lcm, pairs_[best].lcm);
        if (c < 0 || (c == 0 && std::tie(pairs_[q].j, pairs_[q].i) <
                                    std::tie(pairs_[best].j, pairs_[best].i)))
          best = q;
      }
      Pair pair = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      P h = reduce_full(s_polynomial(pair));
      if (!h.empty()) insert(std::move(h));
    }
    return finish();
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  P s_polynomial(const Pair& pair) const {
    const P& f = polys_[pair.i];
    const P& g = polys_[pair.j];
    Monomial mf = pair.lcm / f.front().mono;
    Monomial mg = pair.lcm / g.front().mono;
    P s;
    s.reserve(f.size() - 1);
    for (std::size_t t = 1; t < f.size(); ++t) s.push_back({f[t].mono * mf, f[t].coeff});
    return sub_mul_terms(k_, order_, s, 0, k_.one(), mg, g, 1);
  }

  const P* find_reducer(const Monomial& m) const {
    for (std::size_t q = 0; q < basis_.size(); ++q)
      if (leads_[q].divides(m)) return &polys_[basis_[q]];
    return nullptr;
  }

  P reduce_full(P p) const {
    P result;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const P* g = find_reducer(p[pos].mono);
      if (!g) {
        result.push_back(std::move(p[pos]));
        ++pos;
        continue;
      }
      // reducers are monic
      C c = p[pos].coeff;
      Monomial m = p[pos].mono / g->front().mono;
      p = sub_mul_terms(k_, order_, p, pos + 1, c, m, *g, 1);
      pos = 0;
    }
    make_monic(k_, result);
    return result;
  }

  bool disjoint(const Monomial& a, const Monomial& b) const {
    return !options_.module && a.coprime(b);
  }

  // Gebauer–Möller update.
  void insert(P h) {
    const std::size_t hi = polys_.size();
    const Monomial hm = h.front().mono;
    polys_.push_back(std::move(h));

    std::vector<Pair> fresh;
    for (std::size_t g : basis_) {
      const Monomial& gm = polys_[g].front().mono;
      if (gm.component() != hm.component()) continue;
      fresh.push_back({g, hi, lcm(gm, hm)});
    }
    // A fresh pair is kept if it is coprime, or no other remaining or
    // already kept fresh pair has an lcm dividing its lcm.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Pair& p = fresh[a];
      bool keep = disjoint(polys_[p.i].front().mono, hm);
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < fresh.size() && keep; ++b)
          if (fresh[b].lcm.divides(p.lcm)) keep = false;
        for (std::size_t b = 0; b < kept.size() && keep; ++b)
          if (kept[b].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    // Coprime pairs reduce to zero.
    std::vector<Pair> accepted;
    for (auto& p : kept)
      if (!disjoint(polys_[p.i].front().mono, hm)) accepted.push_back(std::move(p));

    // Old pairs made redundant by h.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (hm.divides(p.lcm)) {
        const Monomial& mi = polys_[p.i].front().mono;
        const Monomial& mj = polys_[p.j].front().mono;
        if (!(lcm(mi, hm) == p.lcm) && !(lcm(mj, hm) == p.lcm)) continue;
      }
      old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : accepted) pairs_.push_back(std::move(p));

    std::vector<std::size_t> basis;
    std::vector<Monomial> leads;
    for (std::size_t q = 0; q < basis_.size(); ++q) {
      if (hm.divides(leads_[q])) continue;
      basis.push_back(basis_[q]);
      leads.push_back(leads_[q]);
    }
    basis.push_back(hi);
    leads.push_back(hm);
    basis_ = std::move(basis);
    leads_ = std::move(leads);
  }

  std::vector<P> finish() {
    std::vector<P> out;
    out.reserve(basis_.size());
    for (std::size_t g : basis_) {
      P& f = polys_[g];
      P tail(f.begin() + 1, f.end());
      P reduced = reduce_tail(std::move(tail));
      P full;
      full.reserve(reduced.size() + 1);
      full.push_back(f.front());
      full.insert(full.end(), reduced.begin(), reduced.end());
      out.push_back(std::move(full));
    }
    std::sort(out.begin(), out.end(), [&](const P& a, const P& b) {
      return order_.compare(a.front().mono, b.front().mono) > 0;
    });
    return out;
  }

  P reduce_tail(P p) const {
    P result;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const P* g = find_reducer(p[pos].mono);
      if (!g) {
        result.push_back(std::move(p[pos]));
        ++pos;
        continue;
      }
      C c = p[pos].coeff;
      Monomial m = p[pos].mono / g->front().mono;
      p = sub_mul_terms(k_, order_, p, pos + 1, c, m, *g, 1);
      pos = 0;
    }
    return result;
  }

  A k_;
  const MonomialOrder& order_;
  GroebnerOptions options_;
  std::vector<P> polys_;
  std::vector<std::size_t> basis_;
  std::vector<Monomial> leads_;
  std::vector<Pair> pairs_;
};

template <class A>
Terms<typename A::Coeff> reduce_impl(const A& k, const MonomialOrder& order,
                                     Terms<typename A::Coeff> p,
                                     const std::vector<Terms<typename A::Coeff>>& basis) {
  using C = typename A::Coeff;
  Terms<C> result;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Terms<C>* g = nullptr;
    for (const auto& b : basis)
      if (!b.empty() && b.front().mono.divides(p[pos].mono)) {
        g = &b;
        break;
      }
    if (!g) {
      result.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    C c = k.div(p[pos].coeff, g->front().coeff);
    Monomial m = p[pos].mono / g->front().mono;
    p = sub_mul_terms(k, order, p, pos + 1, c, m, *g, 1);
    pos = 0;
  }
  return result;
}

template <class A>
bool criterion_impl(const A& k, const MonomialOrder& order,
                    const std::vector<Terms<typename A::Coeff>>& basis) {
  using C = typename A::Coeff;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      if (f.front().mono.component() != g.front().mono.component()) continue;
      Monomial l = lcm(f.front().mono, g.front().mono);
      Terms<C> s;
      Monomial mf = l / f.front().mono;
      C cf = k.inv(f.front().coeff);
      for (std::size_t t = 1; t < f.size(); ++t)
        s.push_back({f[t].mono * mf, k.mul(f[t].coeff, cf)});
      s = sub_mul_terms(k, order, s, 0, k.inv(g.front().coeff), l / g.front().mono, g, 1);
      if (!reduce_impl(k, order, std::move(s), basis).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Terms<mpq_class>> groebner(const RatArith& k, const MonomialOrder& order,
                                       std::vector<Terms<mpq_class>> input,
                                       GroebnerOptions options) {
  return Buchberger<RatArith>(k, order, options).run(std::move(input));
}

std::vector<Terms<std::uint32_t>> groebner(const ModArith& k, const MonomialOrder& order,
                                           std::vector<Terms<std::uint32_t>> input,
                                           GroebnerOptions options) {
  return Buchberger<ModArith>(k, order, options).run(std::move(input));
}

Terms<mpq_class> reduce(const RatArith& k, const MonomialOrder& order, Terms<mpq_class> p,
                        const std::vector<Terms<mpq_class>>& basis) {
  return reduce_impl(k, order, std::move(p), basis);
}

Terms<std::uint32_t> reduce(const ModArith& k, const MonomialOrder& order,
                            Terms<std::uint32_t> p,
                            const std::vector<Terms<std::uint32_t>>& basis) {
  return reduce_impl(k, order, std::move(p), basis);
}

bool satisfies_buchberger_criterion(const RatArith& k, const MonomialOrder& order,
                                    const std::vector<Terms<mpq_class>>& basis) {
  return criterion_impl(k, order, basis);
}

bool satisfies_buchberger_criterion(const ModArith& k, const MonomialOrder& order,
                                    const std::vector<Terms<std::uint32_t>>& basis) {
  return criterion_impl(k, order, basis);
}

}  // namespace kittab::detail
