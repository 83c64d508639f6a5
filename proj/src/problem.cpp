#include "minterp/problem.hpp"

namespace minterp {

Problem::Problem(std::vector<std::string> variables, MonomialOrder order,
                 std::vector<Site> sites)
    : variables_(std::move(variables)), order_(std::move(order)), sites_(std::move(sites)) {
    if (variables_.empty())
        throw EmptyProblem("a problem needs at least one variable");
    if (order_.dim() != variables_.size())
        throw DimensionMismatch("ordering dimension does not match the variables");
    if (sites_.empty())
        throw EmptyProblem("a problem needs at least one site");
    for (const Site& site : sites_) {
        if (site.point.size() != variables_.size())
            throw DimensionMismatch("site point dimension does not match the variables");
        if (site.conditions.empty())
            throw EmptyProblem("every site needs at least one condition");
        for (const Polynomial& p : site.conditions) {
            if (p.dim() != variables_.size())
                throw DimensionMismatch("condition dimension does not match the variables");
            if (p.is_zero())
                throw ZeroPolynomial("conditions must be nonzero polynomials");
        }
    }
}

std::size_t Problem::condition_count() const {
    std::size_t n = 0;
    for (const Site& s : sites_) n += s.conditions.size();
    return n;
}

std::vector<ConditionTag> Problem::tags() const {
    std::vector<ConditionTag> t;
    for (std::size_t i = 0; i < sites_.size(); ++i)
        for (std::size_t j = 0; j < sites_[i].conditions.size(); ++j)
            t.push_back({i, j});
    return t;
}

Problem Problem::with_order(MonomialOrder order) const {
    return Problem(variables_, std::move(order), sites_);
}

}  // namespace minterp
