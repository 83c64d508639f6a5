#include "minterp/engine.hpp"

#include <algorithm>

namespace minterp {

Matrix build_matrix(const Problem& problem, std::span<const Monomial> monomials) {
    for (const Monomial& m : monomials)
        if (m.dim() != problem.dim())
            throw DimensionMismatch("monomial dimension does not match the problem");
    Matrix t(problem.condition_count(), monomials.size());
    std::size_t row = 0;
    for (const Site& site : problem.sites()) {
        for (const Polynomial& p : site.conditions) {
            for (std::size_t j = 0; j < monomials.size(); ++j) {
                Polynomial xb = Polynomial::term(monomials[j], Rational(1));
                t.at(row, j) = functional_apply(p, site.point, xb);
            }
            ++row;
        }
    }
    return t;
}

bool is_interpolating_basis(const Problem& problem, std::span<const Monomial> monomials) {
    if (monomials.size() != problem.condition_count())
        throw DimensionMismatch("candidate basis size must equal the condition count");
    return build_matrix(problem, monomials).nonsingular();
}

BasisResult minimal_basis(const Problem& problem, std::optional<int> initial_cap) {
    const std::size_t n = problem.condition_count();
    const MonomialOrder& order = problem.order();

    int max_condition_degree = 0;
    for (const Site& site : problem.sites())
        for (const Polynomial& p : site.conditions)
            max_condition_degree = std::max(max_condition_degree, p.total_degree());

    // n-1 suffices whenever the basis is a lower set; the retry ladder
    // covers orderings and condition shapes outside that argument.
    const int base = static_cast<int>(n) - 1;
    int cap = initial_cap.value_or(base);
    if (cap < 0) cap = 0;
    int cap_max = std::max(4 * base, base + max_condition_degree);
    cap_max = std::max(cap_max, cap);

    std::optional<ConditionTag> last_pivot_tag;
    std::vector<ConditionTag> tags = problem.tags();

    for (;;) {
        bool attempt_failed = false;
        try {
            std::vector<Polynomial> shifted;
            shifted.reserve(n);
            for (const Site& site : problem.sites())
                for (const Polynomial& p : site.conditions)
                    shifted.push_back(shift_condition(p, site.point, cap));

            std::vector<Polynomial> reduced = reverse_reduce(std::move(shifted), order);

            std::vector<Monomial> basis;
            basis.reserve(n);
            for (const Polynomial& q : reduced)
                basis.push_back(least_monomial(q, order));
            std::sort(basis.begin(), basis.end(),
                      [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });

            // Truncation-free certificate; makes the answer independent of cap.
            if (is_interpolating_basis(problem, basis))
                return BasisResult{std::move(basis), std::move(reduced), cap, std::move(tags)};
            attempt_failed = true;
        } catch (const ZeroPivot& zp) {
            last_pivot_tag = tags[zp.index];
            attempt_failed = true;
        } catch (const ZeroAfterTruncation&) {
            attempt_failed = true;
        }

        if (attempt_failed && cap >= cap_max) {
            std::string msg = "interpolation conditions are linearly dependent";
            if (last_pivot_tag)
                msg += " (condition " + std::to_string(last_pivot_tag->condition) +
                       " of site " + std::to_string(last_pivot_tag->site) +
                       " reduced to zero)";
            throw DependentConditions(msg, last_pivot_tag);
        }
        cap = std::min(std::max(2 * cap, cap + 1), cap_max);
    }
}

Polynomial interpolate(const Problem& problem, std::span<const Rational> values,
                       std::optional<std::vector<Monomial>> basis) {
    const std::size_t n = problem.condition_count();
    if (values.size() != n)
        throw DimensionMismatch("value count must equal the condition count");

    std::vector<Monomial> t = basis ? std::move(*basis) : minimal_basis(problem).basis;
    if (t.size() != n)
        throw DimensionMismatch("basis size must equal the condition count");

    Matrix m = build_matrix(problem, t);
    auto solution = m.solve(std::vector<Rational>(values.begin(), values.end()));
    if (!solution)
        throw DependentConditions("condition matrix is singular for the given basis");

    Polynomial g(problem.dim());
    for (std::size_t j = 0; j < t.size(); ++j)
        g.add_term(t[j], (*solution)[j]);
    return g;
}

}  // namespace minterp
