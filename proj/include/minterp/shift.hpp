#ifndef MINTERP_SHIFT_HPP
#define MINTERP_SHIFT_HPP

#include <span>

#include "minterp/polynomial.hpp"

namespace minterp {

// Degree-<=cap part of e^{theta . X} = sum_j (theta . X)^j / j!, exact.
Polynomial exp_series(std::span<const Rational> theta, int cap);

// Translates the condition delta_theta o P(D) to the origin:
// truncate(e^{theta X} * P, cap). Throws ZeroAfterTruncation when the
// product has no term of degree <= cap (P's minimal degree exceeds cap).
Polynomial shift_condition(const Polynomial& p, std::span<const Rational> theta,
                           int cap);

}  // namespace minterp

#endif
