#ifndef MINTERP_ENGINE_HPP
#define MINTERP_ENGINE_HPP

#include <optional>
#include <vector>

#include "minterp/matrix.hpp"
#include "minterp/problem.hpp"
#include "minterp/reduce.hpp"
#include "minterp/shift.hpp"

namespace minterp {

struct BasisResult {
    std::vector<Monomial> basis;           // ascending in the problem's order
    std::vector<Polynomial> reduced;       // q's, flattened order, truncated at cap_used
    int cap_used = 0;
    std::vector<ConditionTag> condition_tags;  // origin of reduced[k]
};

// The full pipeline: shift every condition to the origin with a truncated
// exponential series, reverse-reduce, read the least monomials off, and
// verify the result against the exact condition matrix. The initial cap is
// n-1; on ZeroPivot, ZeroAfterTruncation or verification failure the cap
// doubles up to max(4(n-1), n-1 + max condition degree), after which the
// conditions are reported dependent. Verification is truncation-free, so a
// returned basis is always correct.
BasisResult minimal_basis(const Problem& problem,
                          std::optional<int> initial_cap = std::nullopt);

// Exact condition matrix: row per condition (flattened site order), column
// per monomial, entry (delta_theta o P(D)) X^beta.
Matrix build_matrix(const Problem& problem, std::span<const Monomial> monomials);

// Nonsingularity of the square condition matrix; monomial count must be n.
bool is_interpolating_basis(const Problem& problem, std::span<const Monomial> monomials);

// Solves for the interpolant over `basis` (default: the minimal basis)
// matching the given values in flattened condition order.
Polynomial interpolate(const Problem& problem, std::span<const Rational> values,
                       std::optional<std::vector<Monomial>> basis = std::nullopt);

}  // namespace minterp

#endif
