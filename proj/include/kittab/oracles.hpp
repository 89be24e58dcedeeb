// Independent reference computations used to cross-check the library.
// They rely on naive algorithms and dense linear algebra over QQ only.
#ifndef KITTAB_ORACLES_HPP
#define KITTAB_ORACLES_HPP

#include <gmpxx.h>

#include <random>
#include <span>
#include <vector>

#include "kittab/free_module.hpp"
#include "kittab/kitt.hpp"
#include "kittab/koszul.hpp"
#include "kittab/polynomial.hpp"

namespace kittab::oracle {

/// All exponent vectors of total degree d in n variables.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned d);

Polynomial random_poly(const RingPtr& R, std::mt19937& rng, unsigned max_degree, unsigned max_terms,
                       int coeff_bound = 5);
Polynomial random_homogeneous(const RingPtr& R, std::mt19937& rng, unsigned degree,
                              unsigned max_terms, int coeff_bound = 4);
KoszulElement random_homogeneous_element(const RingPtr& R, std::size_t r, std::size_t degree,
                                         std::mt19937& rng);
/// Random instance with a = f * Phi, so a lies in I.
KittInput random_input(const RingPtr& R, std::mt19937& rng, std::size_t r, std::size_t s);

Polynomial naive_remainder(Polynomial p, const std::vector<Polynomial>& G);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Every S-polynomial reduces to zero under naive division.
bool buchberger_oracle(const std::vector<Polynomial>& G);
bool is_reduced_basis(const std::vector<Polynomial>& G);

using Row = std::vector<mpq_class>;
std::size_t rank_of(std::vector<Row> rows);
std::vector<Row> nullspace(const std::vector<Row>& columns);
Row coordinates(const Polynomial& f, const std::vector<Monomial>& basis);
/// dim_K of the degree-d part of the ideal generated by homogeneous gens.
std::size_t graded_piece_dim(const std::vector<Polynomial>& gens, unsigned d);
/// dim_K of (I : J)_d.
std::size_t graded_colon_dim(const std::vector<Polynomial>& I, const std::vector<Polynomial>& J,
                             unsigned d);

bool is_syzygy(const FreeVector& h, std::span<const FreeVector> g);
bool syzygies_complete_to_degree(std::span<const FreeVector> g, const std::vector<unsigned>& deg,
                                 const std::vector<FreeVector>& found, unsigned D);
/// Krull dimension of R/(monomials) by search over variable subsets.
int monomial_dimension_oracle(const std::vector<Polynomial>& monomials, std::size_t n);

}  // namespace kittab::oracle

#endif  // KITTAB_ORACLES_HPP
