#include "kittab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "kittab/koszul.hpp"

namespace kittab::oracle {

/// All exponent vectors of total degree d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i + 1 == n) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      rec(i + 1, left - e);
    }
    m.set(i, 0);
  };
  if (n == 0) {
    if (d == 0) out.push_back(m);
    return out;
  }
  rec(0, d);
  return out;
}

Polynomial random_poly(const RingPtr& R, std::mt19937& rng, unsigned max_degree,
                       unsigned max_terms, int coeff_bound) {
  std::uniform_int_distribution<unsigned> deg(0, max_degree);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  Polynomial f(R);
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    auto monos = monomials_of_degree(R->size(), deg(rng));
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    f += Polynomial::term(R, monos[pick(rng)], FieldElement(R->field(), coeff(rng)));
  }
  return f;
}

Polynomial random_homogeneous(const RingPtr& R, std::mt19937& rng, unsigned degree,
                                     unsigned max_terms, int coeff_bound) {
  auto monos = monomials_of_degree(R->size(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<unsigned> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  Polynomial f(R);
  unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t)
    f += Polynomial::term(R, monos[pick(rng)], FieldElement(R->field(), coeff(rng)));
  return f;
}

// ---- naive division, written against the public Polynomial API only ----

Polynomial naive_remainder(Polynomial p, const std::vector<Polynomial>& G) {
  const RingPtr& R = p.ring();
  Polynomial rem(R);
  while (!p.is_zero()) {
    auto [m, c] = p.leading_term();
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero() || !g.leading_monomial().divides(m)) continue;
      Polynomial q = Polynomial::term(R, m / g.leading_monomial(), c / g.leading_coefficient());
      p -= q * g;
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lt = Polynomial::term(R, m, c);
      rem += lt;
      p -= lt;
    }
  }
  return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const RingPtr& R = f.ring();
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Polynomial a = Polynomial::term(R, l / f.leading_monomial(), f.leading_coefficient().inverse());
  Polynomial b = Polynomial::term(R, l / g.leading_monomial(), g.leading_coefficient().inverse());
  return a * f - b * g;
}

/// Every S-polynomial reduces to zero under naive division.
bool buchberger_oracle(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j)
      if (!naive_remainder(s_polynomial(G[i], G[j]), G).is_zero()) return false;
  return true;
}

/// Reducedness: monic, no term divisible by another element's lead, descending.
bool is_reduced_basis(const std::vector<Polynomial>& G) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!G[i].leading_coefficient().is_one()) return false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (std::size_t t = 0; t < G[i].size(); ++t)
        if (G[j].leading_monomial().divides(G[i].monomial(t))) return false;
    }
    if (i > 0 &&
        G[i].ring()->order().compare(G[i - 1].leading_monomial(), G[i].leading_monomial()) <= 0)
      return false;
  }
  return true;
}

// ---- exact linear algebra over QQ ----

using Row = std::vector<mpq_class>;

/// Rank by fraction-free-ish Gaussian elimination over QQ.
std::size_t rank_of(std::vector<Row> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows.front().size(), rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      mpq_class factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Nullspace basis of the matrix whose columns are `columns` (each of equal length).
std::vector<Row> nullspace(const std::vector<Row>& columns) {
  std::size_t n = columns.size();
  if (n == 0) return {};
  std::size_t m = columns.front().size();
  std::vector<Row> A(m, Row(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) A[i][j] = columns[j][i];
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m; ++c) {
    std::size_t piv = rank;
    while (piv < m && A[piv][c] == 0) ++piv;
    if (piv == m) continue;
    std::swap(A[piv], A[rank]);
    mpq_class inv = 1 / A[rank][c];
    for (auto& x : A[rank]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == rank || A[r][c] == 0) continue;
      mpq_class factor = A[r][c];
      for (std::size_t k = 0; k < n; ++k) A[r][k] -= factor * A[rank][k];
    }
    pivots.push_back(c);
    ++rank;
  }
  std::vector<Row> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Row v(n);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -A[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Coordinates of a homogeneous polynomial on a fixed monomial list.
Row coordinates(const Polynomial& f, const std::vector<Monomial>& basis) {
  Row out(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) out[i] = f.coefficient_of(basis[i]).rational();
  return out;
}

/// dim_K of the degree-d part of the ideal generated by homogeneous gens.
std::size_t graded_piece_dim(const std::vector<Polynomial>& gens, unsigned d) {
  if (gens.empty()) return 0;
  const RingPtr& R = gens.front().ring();
  auto monos = monomials_of_degree(R->size(), d);
  std::vector<Row> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(R->size(), d - g.total_degree()))
      rows.push_back(coordinates(g.shift(m), monos));
  }
  return rank_of(rows);
}

/// dim_K of (I : J)_d by linear algebra: h in R_d with h*g_j in I for all j.
std::size_t graded_colon_dim(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                             unsigned d) {
  const RingPtr& R = I.front().ring();
  auto monos = monomials_of_degree(R->size(), d);
  // unknowns: coefficients of h on monos, plus multipliers expressing h*g_j in I
  std::vector<Row> columns;
  std::vector<std::vector<Monomial>> targets;
  for (const auto& g : J) targets.push_back(monomials_of_degree(R->size(), d + g.total_degree()));
  std::size_t height = 0;
  for (const auto& t : targets) height += t.size();
  auto place = [&](std::size_t j, const Polynomial& p, Row& col) {
    std::size_t off = 0;
    for (std::size_t k = 0; k < j; ++k) off += targets[k].size();
    auto c = coordinates(p, targets[j]);
    for (std::size_t i = 0; i < c.size(); ++i) col[off + i] += c[i];
  };
  for (const auto& m : monos) {
    Row col(height);
    for (std::size_t j = 0; j < J.size(); ++j)
      place(j, J[j].shift(m), col);
    columns.push_back(std::move(col));
  }
  std::size_t h_unknowns = columns.size();
  for (std::size_t j = 0; j < J.size(); ++j) {
    unsigned e = d + J[j].total_degree();
    for (const auto& g : I) {
      if (g.total_degree() > static_cast<int>(e)) continue;
      for (const auto& m : monomials_of_degree(R->size(), e - g.total_degree())) {
        Row col(height);
        place(j, -g.shift(m), col);
        columns.push_back(std::move(col));
      }
    }
  }
  auto ns = nullspace(columns);
  std::vector<Row> projected;
  for (const auto& v : ns) projected.emplace_back(v.begin(), v.begin() + h_unknowns);
  return rank_of(projected);
}

bool is_syzygy(const FreeVector& h, std::span<const FreeVector> g) {
  FreeVector sum = FreeVector::zero(h.ring(), g.front().rank());
  for (std::size_t i = 0; i < g.size(); ++i) sum = sum + h[i] * g[i];
  return sum.is_zero();
}

// Degree-bounded completeness: every syzygy of weighted degree D found by
// linear algebra lies in the K-span of monomial multiples of the returned
// generators. Column i of g is homogeneous of degree deg[i].
bool syzygies_complete_to_degree(std::span<const FreeVector> g, const std::vector<unsigned>& deg,
                                 const std::vector<FreeVector>& found, unsigned D) {
  const RingPtr& R = g.front().ring();
  const std::size_t n = R->size(), m = g.front().rank();
  std::vector<std::vector<Monomial>> h_monos;
  for (unsigned d : deg) h_monos.push_back(d <= D ? monomials_of_degree(n, D - d) : std::vector<Monomial>{});
  auto target = monomials_of_degree(n, D);
  std::vector<Row> columns;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (const auto& mono : h_monos[i]) {
      Row col;
      for (std::size_t c = 0; c < m; ++c) {
        auto part = coordinates(g[i][c].shift(mono), target);
        col.insert(col.end(), part.begin(), part.end());
      }
      columns.push_back(std::move(col));
    }
  auto ns = nullspace(columns);
  std::vector<Row> generated;
  for (const auto& s : found) {
    int weight = -1;
    for (std::size_t i = 0; i < s.rank(); ++i)
      if (!s[i].is_zero()) weight = s[i].total_degree() + static_cast<int>(deg[i]);
    if (weight < 0 || weight > static_cast<int>(D)) continue;
    for (const auto& mono : monomials_of_degree(n, D - weight)) {
      Row row;
      for (std::size_t i = 0; i < s.rank(); ++i) {
        auto part = coordinates(s[i].shift(mono), h_monos[i]);
        row.insert(row.end(), part.begin(), part.end());
      }
      generated.push_back(std::move(row));
    }
  }
  return rank_of(generated) == ns.size();
}

// Brute force over all variable subsets: the largest one containing the
// support of no generator.
int monomial_dimension_oracle(const std::vector<Polynomial>& monomials, std::size_t n) {
  int best = -1;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    bool independent = true;
    for (const auto& m : monomials)
      if ((m.leading_monomial().support() & ~S) == 0) independent = false;
    if (independent) best = std::max(best, std::popcount(S));
  }
  return best;
}

KoszulElement random_homogeneous_element(const RingPtr& R, std::size_t r, std::size_t degree,
                                         std::mt19937& rng) {
  KoszulElement out(R, r);
  for (IndexSet S : koszul_basis(r, degree)) out.add(S, random_poly(R, rng, 2, 2, 3));
  return out;
}

// Random instances with 𝔞 ⊆ I by construction: a = f * Phi for a random Phi.
KittInput random_input(const RingPtr& R, std::mt19937& rng, std::size_t r, std::size_t s) {
  std::vector<Polynomial> f;
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial p = random_poly(R, rng, 3, 2, 3);
    while (p.is_zero() || p.is_constant()) p = random_poly(R, rng, 3, 2, 3);
    f.push_back(p);
  }
  std::vector<Polynomial> entries;
  for (std::size_t k = 0; k < r * s; ++k) entries.push_back(random_poly(R, rng, 1, 2, 3));
  PolyMatrix Phi(R, r, s, entries);
  return KittInput(f, row_times(f, Phi), Phi);
}

}  // namespace kittab::oracle
