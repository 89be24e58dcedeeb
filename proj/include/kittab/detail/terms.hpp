#ifndef KITTAB_DETAIL_TERMS_HPP
#define KITTAB_DETAIL_TERMS_HPP

// Term-vector kernels shared by Polynomial and the Gröbner engines.
// A term vector is sorted strictly descending under a MonomialOrder and
// holds no zero coefficients.

#include <algorithm>
#include <utility>
#include <vector>

#include "kittab/field.hpp"
#include "kittab/monomial.hpp"

namespace kittab::detail {

template <class C>
struct Term {
  Monomial mono;
  C coeff;
};

template <class C>
using Terms = std::vector<Term<C>>;

template <class A>
Terms<typename A::Coeff> add_terms(const A& k, const MonomialOrder& ord,
                                   const Terms<typename A::Coeff>& a,
                                   const Terms<typename A::Coeff>& b) {
  Terms<typename A::Coeff> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      auto s = k.add(a[i].coeff, b[j].coeff);
      if (!k.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

/// p[from:] - c * m * g, written into a fresh vector.
template <class A>
Terms<typename A::Coeff> sub_mul_terms(const A& k, const MonomialOrder& ord,
                                       const Terms<typename A::Coeff>& p, std::size_t from,
                                       const typename A::Coeff& c, const Monomial& m,
                                       const Terms<typename A::Coeff>& g, std::size_t g_from = 0) {
  Terms<typename A::Coeff> out;
  out.reserve(p.size() - from + g.size() - g_from);
  std::size_t i = from, j = g_from;
  Monomial gm;
  bool have = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have) {
      gm = m * g[j].mono;
      have = true;
    }
    if (j >= g.size()) {
      out.insert(out.end(), p.begin() + i, p.end());
      break;
    }
    if (i >= p.size()) {
      out.push_back({gm, k.neg(k.mul(c, g[j].coeff))});
      ++j;
      have = false;
      continue;
    }
    auto cmp = ord.compare(p[i].mono, gm);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gm, k.neg(k.mul(c, g[j].coeff))});
      ++j;
      have = false;
    } else {
      auto s = p[i].coeff;
      k.sub_mul(s, c, g[j].coeff);
      if (!k.is_zero(s)) out.push_back({gm, std::move(s)});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

template <class A>
void scale_terms(const A& k, Terms<typename A::Coeff>& a, const typename A::Coeff& c) {
  if (k.is_zero(c)) {
    a.clear();
    return;
  }
  for (auto& t : a) t.coeff = k.mul(t.coeff, c);
}

template <class A>
void make_monic(const A& k, Terms<typename A::Coeff>& a) {
  if (a.empty() || k.is_one(a.front().coeff)) return;
  auto inv = k.inv(a.front().coeff);
  for (auto& t : a) t.coeff = k.mul(t.coeff, inv);
}

/// Sorts arbitrary terms descending and merges equal monomials.
template <class A>
void normalize_terms(const A& k, const MonomialOrder& ord, Terms<typename A::Coeff>& a) {
  std::sort(a.begin(), a.end(),
            [&](const auto& x, const auto& y) { return ord.compare(x.mono, y.mono) > 0; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < a.size();) {
    auto coeff = a[r].coeff;
    std::size_t s = r + 1;
    while (s < a.size() && a[s].mono == a[r].mono) coeff = k.add(coeff, a[s++].coeff);
    if (!k.is_zero(coeff)) {
      a[w].mono = a[r].mono;
      a[w].coeff = std::move(coeff);
      ++w;
    }
    r = s;
  }
  a.resize(w);
}

template <class A>
Terms<typename A::Coeff> mul_terms(const A& k, const MonomialOrder& ord,
                                   const Terms<typename A::Coeff>& a,
                                   const Terms<typename A::Coeff>& b) {
  Terms<typename A::Coeff> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back({x.mono * y.mono, k.mul(x.coeff, y.coeff)});
  normalize_terms(k, ord, out);
  return out;
}

}  // namespace kittab::detail

#endif  // KITTAB_DETAIL_TERMS_HPP
