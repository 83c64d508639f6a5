#include "minterp/oracle.hpp"

#include <algorithm>
#include <cassert>

namespace minterp {

std::vector<Monomial> monomials_up_to_degree(std::size_t dim, int max_deg) {
    std::vector<Monomial> out;
    std::vector<int> e(dim, 0);
    // Odometer over exponent vectors with total degree <= max_deg.
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == dim) {
            out.push_back(Monomial(e));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[i] = k;
            self(self, i + 1, remaining - k);
        }
        e[i] = 0;
    };
    if (max_deg >= 0) rec(rec, 0, max_deg);
    return out;
}

std::vector<Monomial> greedy_minimal_basis(const Problem& problem) {
    const std::size_t n = problem.condition_count();
    const MonomialOrder& order = problem.order();

    // Lower sets of cardinality n contain nothing of degree >= n, so the
    // minimal basis lives inside this pool for the problem classes where
    // it is a lower set.
    std::vector<Monomial> pool = monomials_up_to_degree(problem.dim(), static_cast<int>(n) - 1);
    std::sort(pool.begin(), pool.end(),
              [&](const Monomial& a, const Monomial& b) { return order.less(a, b); });

    std::vector<Monomial> chosen;
    for (const Monomial& candidate : pool) {
        if (chosen.size() == n) break;
        chosen.push_back(candidate);
        if (build_matrix(problem, chosen).rank() != chosen.size())
            chosen.pop_back();
    }
    if (chosen.size() != n)
        throw DependentConditions(
            "rank never reached the condition count over the degree <= n-1 pool");
    return chosen;
}

static mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

std::vector<Monomial> exhaustive_minimal_basis(const Problem& problem,
                                               const std::vector<Monomial>& pool) {
    const std::size_t n = problem.condition_count();
    if (pool.size() < n)
        throw NoBasisInPool("candidate pool is smaller than the condition count");
    if (binomial(pool.size(), n) > 1000000)
        throw PoolTooLarge("subset enumeration would exceed 10^6 candidates");

    const MonomialOrder& order = problem.order();
    std::optional<std::set<Monomial>> best;

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (;;) {
        std::vector<Monomial> subset;
        subset.reserve(n);
        for (std::size_t i : idx) subset.push_back(pool[i]);
        if (is_interpolating_basis(problem, subset)) {
            std::set<Monomial> candidate(subset.begin(), subset.end());
            if (!best) {
                best = std::move(candidate);
            } else {
                auto cmp = compare_sets(order, candidate, *best);
                // Distinct same-size sets have nonempty differences both
                // ways, so ties are impossible.
                assert(cmp != std::strong_ordering::equal);
                if (cmp == std::strong_ordering::less) best = std::move(candidate);
            }
        }
        // Next combination in lexicographic index order.
        std::size_t i = n;
        while (i-- > 0) {
            if (idx[i] != i + pool.size() - n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) {
                if (!best)
                    throw NoBasisInPool("no subset of the pool is an interpolating basis");
                return std::vector<Monomial>(best->begin(), best->end());
            }
        }
    }
}

}  // namespace minterp
