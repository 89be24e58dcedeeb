#include <functional>

#include "kittab/errors.hpp"
#include "kittab/free_module.hpp"

namespace kittab {

namespace {

// Laplace expansion along the first selected row.
Polynomial laplace(const PolyMatrix& M, std::vector<std::size_t>& rows,
                   std::vector<std::size_t>& cols) {
  if (rows.empty()) return Polynomial::constant(M.ring(), 1);
  if (rows.size() == 1) return M(rows[0], cols[0]);
  std::size_t r = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  Polynomial det(M.ring());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const Polynomial& entry = M(r, cols[k]);
    if (entry.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    Polynomial minor = laplace(M, sub_rows, sub_cols);
    det += (k % 2 == 0) ? entry * minor : -(entry * minor);
  }
  return det;
}

void for_each_subset(std::size_t n, std::size_t t,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(t);
  for (std::size_t i = 0; i < t; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = t;
    while (i > 0 && idx[i - 1] == n - t + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Polynomial determinant(const PolyMatrix& M) {
  if (M.rows() != M.cols()) throw StructuralError("determinant of a non-square matrix");
  std::vector<std::size_t> rows(M.rows()), cols(M.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = cols[i] = i;
  return laplace(M, rows, cols);
}

Ideal minors(const PolyMatrix& M, std::size_t t) {
  if (t < 1 || t > std::min(M.rows(), M.cols()))
    throw DomainError("minor size " + std::to_string(t) + " out of range for a " +
                      std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + " matrix");
  std::vector<Polynomial> gens;
  for_each_subset(M.rows(), t, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(M.cols(), t, [&](const std::vector<std::size_t>& cols) {
      auto r = rows;
      auto c = cols;
      Polynomial d = laplace(M, r, c);
      if (!d.is_zero()) gens.push_back(std::move(d));
    });
  });
  return Ideal(M.ring(), std::move(gens));
}

Ideal fitting_zero(std::span<const Polynomial> f, const PolyMatrix& Phi) {
  if (f.empty()) throw DomainError("fitting_zero: empty generator list");
  if (Phi.rows() != f.size())
    throw StructuralError("fitting_zero: Phi has " + std::to_string(Phi.rows()) +
                          " rows for " + std::to_string(f.size()) + " generators");
  PolyMatrix presentation = Phi.concat(presentation_matrix(f));
  if (presentation.cols() < f.size()) return Ideal::zero(Phi.ring());
  return minors(presentation, f.size());
}

Ideal fitting_ideal(std::span<const Polynomial> f, std::size_t i) {
  if (f.empty()) throw DomainError("fitting_ideal: empty generator list");
  const RingPtr& ring = f.front().ring();
  if (i >= f.size()) return Ideal::unit(ring);
  PolyMatrix presentation = presentation_matrix(f);
  std::size_t t = f.size() - i;
  if (presentation.cols() < t) return Ideal::zero(ring);
  return minors(presentation, t);
}

}  // namespace kittab
