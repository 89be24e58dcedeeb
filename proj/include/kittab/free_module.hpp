#ifndef KITTAB_FREE_MODULE_HPP
#define KITTAB_FREE_MODULE_HPP

#include <span>
#include <vector>

#include "kittab/ideal.hpp"

namespace kittab {

/// Element of R^rank.
class FreeVector {
 public:
  FreeVector(RingPtr ring, std::vector<Polynomial> entries);
  static FreeVector zero(const RingPtr& ring, std::size_t rank);

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return entries_.size(); }
  const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Polynomial>& entries() const { return entries_; }
  bool is_zero() const;

  friend FreeVector operator+(const FreeVector& a, const FreeVector& b);
  friend FreeVector operator*(const Polynomial& c, const FreeVector& v);
  friend bool operator==(const FreeVector& a, const FreeVector& b) {
    return a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> entries_;
};

/// rows × cols matrix of polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols, std::vector<Polynomial> row_major);
  static PolyMatrix identity(const RingPtr& ring, std::size_t n);
  static PolyMatrix from_columns(const RingPtr& ring, std::size_t rows,
                                 std::span<const FreeVector> columns);

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, Polynomial p);
  FreeVector column(std::size_t j) const;
  std::vector<Polynomial> row(std::size_t i) const;
  const std::vector<Polynomial>& entries() const { return entries_; }

  PolyMatrix select(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  PolyMatrix select_columns(std::span<const std::size_t> cols) const;
  PolyMatrix select_rows(std::span<const std::size_t> rows) const;
  /// [this | other]
  PolyMatrix concat(const PolyMatrix& other) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// `[[a, b], [c, d]]`
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// [row] * M for a row vector given as polynomials.
std::vector<Polynomial> row_times(std::span<const Polynomial> row, const PolyMatrix& M);

/// Generators of {h : Σ h_i g_i = 0}, from a position-over-term Gröbner
/// basis of the graph module R^m ⊕ R^k. Output is a reduced Gröbner basis
/// of the syzygy module: monic leading entries, sorted descending.
std::vector<FreeVector> syzygies(std::span<const FreeVector> g);
/// Syzygies of a list of polynomials (each viewed in R^1).
std::vector<FreeVector> syzygies(std::span<const Polynomial> f);
/// Kernel of R^k -> (R/b)^m, i.e. syzygies modulo the ideal b.
std::vector<FreeVector> syzygies_modulo(std::span<const FreeVector> g, const Ideal& b);

/// Columns = syzygies of f; an r × m presentation of the module (f).
PolyMatrix presentation_matrix(std::span<const Polynomial> f);

/// Φ with [a] = [f]·Φ. Throws PreconditionError if some a_j ∉ (f).
PolyMatrix lift(std::span<const Polynomial> f, std::span<const Polynomial> a);

Polynomial determinant(const PolyMatrix& M);
/// Ideal of all t×t minors. Throws DomainError unless 1 ≤ t ≤ min(rows, cols).
Ideal minors(const PolyMatrix& M, std::size_t t);
/// Fitt_0(I/a) from [Φ | Syz(f)]: the r×r minors.
Ideal fitting_zero(std::span<const Polynomial> f, const PolyMatrix& Phi);
/// Fitt_i of the ideal (f) viewed as a module: (r-i)-minors of its
/// presentation matrix; the unit ideal when r - i ≤ 0.
Ideal fitting_ideal(std::span<const Polynomial> f, std::size_t i);

}  // namespace kittab

#endif  // KITTAB_FREE_MODULE_HPP
