#ifndef KITTAB_DETAIL_GROEBNER_HPP
#define KITTAB_DETAIL_GROEBNER_HPP

#include <vector>

#include "kittab/detail/terms.hpp"

namespace kittab::detail {

struct GroebnerOptions {
  /// Monomials carry components (free-module elements). Disables the
  /// coprime-leading-term criterion, which only holds for ideals.
  bool module = false;
};

/// Reduced Gröbner basis of the span of `input`: monic, interreduced,
/// sorted descending by leading monomial.
std::vector<Terms<mpq_class>> groebner(const RatArith& k, const MonomialOrder& order,
                                       std::vector<Terms<mpq_class>> input,
                                       GroebnerOptions options = {});
std::vector<Terms<std::uint32_t>> groebner(const ModArith& k, const MonomialOrder& order,
                                           std::vector<Terms<std::uint32_t>> input,
                                           GroebnerOptions options = {});

/// Full remainder of p on division by `basis` (any generating set whose
/// leading terms are front()).
Terms<mpq_class> reduce(const RatArith& k, const MonomialOrder& order, Terms<mpq_class> p,
                        const std::vector<Terms<mpq_class>>& basis);
Terms<std::uint32_t> reduce(const ModArith& k, const MonomialOrder& order,
                            Terms<std::uint32_t> p,
                            const std::vector<Terms<std::uint32_t>>& basis);

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
bool satisfies_buchberger_criterion(const RatArith& k, const MonomialOrder& order,
                                    const std::vector<Terms<mpq_class>>& basis);
bool satisfies_buchberger_criterion(const ModArith& k, const MonomialOrder& order,
                                    const std::vector<Terms<std::uint32_t>>& basis);

}  // namespace kittab::detail

#endif  // KITTAB_DETAIL_GROEBNER_HPP
