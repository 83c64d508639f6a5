#ifndef MINTERP_REDUCE_HPP
#define MINTERP_REDUCE_HPP

#include <vector>

#include "minterp/polynomial.hpp"

namespace minterp {

// Transforms linearly independent polynomials into a "reverse" reduced
// basis by eliminating the least monomial of each polynomial from every
// later one, in input order. Outputs are normalized monic at their least
// monomial; q_k differs from p_k only by a combination of p_1..p_{k-1}.
// Throws ZeroPivot(k) when p_k collapses to zero (dependent inputs, or
// over-truncated ones).
std::vector<Polynomial> reverse_reduce(std::vector<Polynomial> polys,
                                       const MonomialOrder& order);

// Both clauses of the definition: linear independence (exact rank over the
// joint support) and lm(p_i) absent from every later polynomial's support.
bool is_reverse_reduced(std::span<const Polynomial> polys, const MonomialOrder& order);

// Same with leading monomials.
bool is_reduced(std::span<const Polynomial> polys, const MonomialOrder& order);

}  // namespace minterp

#endif
