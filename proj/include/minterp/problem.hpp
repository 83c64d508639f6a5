#ifndef MINTERP_PROBLEM_HPP
#define MINTERP_PROBLEM_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "minterp/errors.hpp"
#include "minterp/order.hpp"
#include "minterp/polynomial.hpp"
#include "minterp/rational.hpp"

namespace minterp {

// One interpolation site: a point theta and the nonzero condition
// polynomials P applied there as delta_theta o P(D).
struct Site {
    std::vector<Rational> point;
    std::vector<Polynomial> conditions;
};

// A full Hermite/Lagrange interpolation problem: dimension, named
// variables, the active monomial ordering, and the sites.
class Problem {
public:
    Problem(std::vector<std::string> variables, MonomialOrder order,
            std::vector<Site> sites);  // validates; throws EmptyProblem / DimensionMismatch

    std::size_t dim() const { return variables_.size(); }
    const std::vector<std::string>& variables() const { return variables_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Site>& sites() const { return sites_; }

    // n = total number of conditions across sites.
    std::size_t condition_count() const;

    // (site, condition) pairs in flattened order.
    std::vector<ConditionTag> tags() const;

    Problem with_order(MonomialOrder order) const;

private:
    std::vector<std::string> variables_;
    MonomialOrder order_;
    std::vector<Site> sites_;
};

}  // namespace minterp

#endif
