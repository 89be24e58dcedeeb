#include "kittab/free_module.hpp"

#include "kittab/detail/groebner.hpp"
#include "kittab/errors.hpp"

namespace kittab {

FreeVector::FreeVector(RingPtr ring, std::vector<Polynomial> entries)
    : ring_(std::move(ring)), entries_(std::move(entries)) {
  for (const auto& e : entries_) require_same_ring(e.ring(), ring_, "free vector entry");
}

FreeVector FreeVector::zero(const RingPtr& ring, std::size_t rank) {
  return FreeVector(ring, std::vector<Polynomial>(rank, Polynomial(ring)));
}

bool FreeVector::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

FreeVector operator+(const FreeVector& a, const FreeVector& b) {
  if (a.rank() != b.rank()) throw StructuralError("free vector rank mismatch");
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < a.rank(); ++i) out.push_back(a[i] + b[i]);
  return FreeVector(a.ring_, std::move(out));
}

FreeVector operator*(const Polynomial& c, const FreeVector& v) {
  std::vector<Polynomial> out;
  for (const auto& e : v.entries_) out.push_back(c * e);
  return FreeVector(v.ring_, std::move(out));
}

std::string FreeVector::to_string() const { return "[" + kittab::to_string(entries_) + "]"; }

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Polynomial(ring)) {}

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols,
                       std::vector<Polynomial> row_major)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(std::move(row_major)) {
  if (entries_.size() != rows * cols)
    throw StructuralError("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                          std::to_string(entries_.size()));
  for (const auto& e : entries_) require_same_ring(e.ring(), ring_, "matrix entry");
}

PolyMatrix PolyMatrix::identity(const RingPtr& ring, std::size_t n) {
  PolyMatrix M(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) M.set(i, i, Polynomial::constant(ring, 1));
  return M;
}

PolyMatrix PolyMatrix::from_columns(const RingPtr& ring, std::size_t rows,
                                    std::span<const FreeVector> columns) {
  PolyMatrix M(ring, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) throw StructuralError("column rank mismatch");
    for (std::size_t i = 0; i < rows; ++i) M.set(i, j, columns[j][i]);
  }
  return M;
}

void PolyMatrix::set(std::size_t i, std::size_t j, Polynomial p) {
  require_same_ring(p.ring(), ring_, "matrix entry");
  entries_.at(i * cols_ + j) = std::move(p);
}

FreeVector PolyMatrix::column(std::size_t j) const {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
  return FreeVector(ring_, std::move(c));
}

std::vector<Polynomial> PolyMatrix::row(std::size_t i) const {
  return {entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_};
}

PolyMatrix PolyMatrix::select(std::span<const std::size_t> rows,
                              std::span<const std::size_t> cols) const {
  PolyMatrix M(ring_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) M.set(i, j, (*this)(rows[i], cols[j]));
  return M;
}

PolyMatrix PolyMatrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<std::size_t> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i) rows[i] = i;
  return select(rows, cols);
}

PolyMatrix PolyMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<std::size_t> cols(cols_);
  for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
  return select(rows, cols);
}

PolyMatrix PolyMatrix::concat(const PolyMatrix& other) const {
  if (rows_ != other.rows_) throw StructuralError("concat: row count mismatch");
  PolyMatrix M(ring_, rows_, cols_ + other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) M.set(i, j, (*this)(i, j));
    for (std::size_t j = 0; j < other.cols_; ++j) M.set(i, cols_ + j, other(i, j));
  }
  return M;
}

std::string PolyMatrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

std::vector<Polynomial> row_times(std::span<const Polynomial> row, const PolyMatrix& M) {
  if (row.size() != M.rows()) throw StructuralError("row_times: length mismatch");
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    Polynomial s(M.ring());
    for (std::size_t i = 0; i < M.rows(); ++i) s += row[i] * M(i, j);
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

template <class C>
detail::Terms<C> pack(std::span<const Polynomial> entries, std::size_t offset) {
  detail::Terms<C> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (const auto& t : entries[i].terms<C>()) {
      out.push_back(t);
      out.back().mono.set_component(static_cast<std::uint16_t>(offset + i));
    }
  return out;
}

template <class C>
std::vector<Polynomial> unpack(const RingPtr& ring, const detail::Terms<C>& terms,
                               std::size_t offset, std::size_t rank) {
  std::vector<detail::Terms<C>> parts(rank);
  for (const auto& t : terms) {
    std::size_t c = t.mono.component();
    if (c < offset || c >= offset + rank) continue;
    parts[c - offset].push_back(t);
    parts[c - offset].back().mono.set_component(0);
  }
  std::vector<Polynomial> out;
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

/// Reduced POT Gröbner basis of the rows (g_i | e_i) of the graph module.
template <class A>
std::vector<detail::Terms<typename A::Coeff>> graph_basis(const A& k, const RingPtr& ring,
                                                          std::span<const FreeVector> g,
                                                          std::size_t m) {
  using C = typename A::Coeff;
  const std::size_t kk = g.size();
  if (m + kk > 65535) throw DomainError("free module rank too large");
  std::vector<detail::Terms<C>> input;
  for (std::size_t i = 0; i < kk; ++i) {
    auto row = pack<C>(g[i].entries(), 0);
    Monomial one(ring->size());
    one.set_component(static_cast<std::uint16_t>(m + i));
    row.push_back({one, k.one()});
    input.push_back(std::move(row));
  }
  return detail::groebner(k, ring->order(), std::move(input), {.module = true});
}

void check_vectors(std::span<const FreeVector> g) {
  if (g.empty()) throw DomainError("syzygies of an empty list");
  for (const auto& v : g) {
    require_same_ring(v.ring(), g.front().ring(), "syzygies");
    if (v.rank() != g.front().rank()) throw StructuralError("syzygies: rank mismatch");
  }
}

}  // namespace

std::vector<FreeVector> syzygies(std::span<const FreeVector> g) {
  check_vectors(g);
  const RingPtr& ring = g.front().ring();
  const std::size_t m = g.front().rank();
  return detail::with_arith(ring->field(), [&](auto k) {
    using C = typename decltype(k)::Coeff;
    std::vector<FreeVector> out;
    for (const auto& b : graph_basis(k, ring, g, m)) {
      if (b.front().mono.component() < m) continue;
      out.emplace_back(ring, unpack<C>(ring, b, m, g.size()));
    }
    return out;
  });
}

std::vector<FreeVector> syzygies(std::span<const Polynomial> f) {
  std::vector<FreeVector> g;
  for (const auto& p : f) g.emplace_back(p.ring(), std::vector<Polynomial>{p});
  return syzygies(g);
}

std::vector<FreeVector> syzygies_modulo(std::span<const FreeVector> g, const Ideal& b) {
  check_vectors(g);
  const RingPtr& ring = g.front().ring();
  require_same_ring(ring, b.ring(), "syzygies_modulo");
  const std::size_t m = g.front().rank();
  std::vector<FreeVector> extended(g.begin(), g.end());
  for (const auto& h : b.generators())
    for (std::size_t c = 0; c < m; ++c) {
      FreeVector v = FreeVector::zero(ring, m);
      std::vector<Polynomial> e = v.entries();
      e[c] = h;
      extended.emplace_back(ring, std::move(e));
    }
  std::vector<FreeVector> out;
  for (const auto& s : syzygies(extended)) {
    std::vector<Polynomial> head(s.entries().begin(), s.entries().begin() + g.size());
    FreeVector v(ring, std::move(head));
    if (v.is_zero()) continue;
    // scale so the first nonzero entry is monic
    for (const auto& e : v.entries())
      if (!e.is_zero()) {
        v = Polynomial::constant(ring, e.leading_coefficient().inverse()) * v;
        break;
      }
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
  }
  return out;
}

PolyMatrix presentation_matrix(std::span<const Polynomial> f) {
  if (f.empty()) throw DomainError("presentation of an empty generator list");
  auto syz = syzygies(f);
  return PolyMatrix::from_columns(f.front().ring(), f.size(), syz);
}

PolyMatrix lift(std::span<const Polynomial> f, std::span<const Polynomial> a) {
  if (f.empty()) throw DomainError("lift: empty generator list");
  const RingPtr& ring = f.front().ring();
  PolyMatrix Phi(ring, f.size(), a.size());
  detail::with_arith(ring->field(), [&](auto k) {
    using C = typename decltype(k)::Coeff;
    std::vector<FreeVector> g;
    for (const auto& p : f) g.emplace_back(ring, std::vector<Polynomial>{p});
    auto basis = graph_basis(k, ring, g, 1);
    for (std::size_t j = 0; j < a.size(); ++j) {
      require_same_ring(a[j].ring(), ring, "lift");
      auto rem = detail::reduce(k, ring->order(), pack<C>(std::span(&a[j], 1), 0), basis);
      if (!rem.empty() && rem.front().mono.component() == 0)
        throw PreconditionError("generator " + a[j].to_string() +
                                " is not in the ideal generated by " + to_string(f));
      auto parts = unpack<C>(ring, rem, 1, f.size());
      for (std::size_t i = 0; i < f.size(); ++i) Phi.set(i, j, -parts[i]);
    }
  });
  return Phi;
}

}  // namespace kittab
