#ifndef MINTERP_ORACLE_HPP
#define MINTERP_ORACLE_HPP

#include <vector>

#include "minterp/engine.hpp"
#include "minterp/problem.hpp"

namespace minterp {

// All monomials of total degree <= max_deg in the given dimension.
std::vector<Monomial> monomials_up_to_degree(std::size_t dim, int max_deg);

// Independent ground truth for minimal_basis: walk the monomials of total
// degree <= n-1 in ascending order and keep each one whose condition
// column extends the exact rank; stop at n columns. The degree bound is
// valid because a lower set of cardinality n contains no monomial of
// degree >= n. Throws DependentConditions when the enumeration runs out.
std::vector<Monomial> greedy_minimal_basis(const Problem& problem);

// Literal minimality check: try every n-subset of the pool, keep the ones
// with a nonsingular condition matrix, return the set-order minimum.
// Guarded by C(|pool|, n) <= 10^6.
std::vector<Monomial> exhaustive_minimal_basis(const Problem& problem,
                                               const std::vector<Monomial>& pool);

}  // namespace minterp

#endif
