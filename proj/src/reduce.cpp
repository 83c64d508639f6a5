#include "minterp/reduce.hpp"

#include "minterp/matrix.hpp"

namespace minterp {

std::vector<Polynomial> reverse_reduce(std::vector<Polynomial> polys,
                                       const MonomialOrder& order) {
    for (std::size_t i = 0; i < polys.size(); ++i)
        if (polys[i].dim() != order.dim())
            throw DimensionMismatch("polynomial dimension does not match ordering");

    for (std::size_t k = 0; k < polys.size(); ++k) {
        if (polys[k].is_zero())
            throw ZeroPivot(k);
        Monomial pivot = least_monomial(polys[k], order);
        Rational pivot_coeff = polys[k].coeff(pivot);
        for (std::size_t j = k + 1; j < polys.size(); ++j) {
            Rational c = polys[j].coeff(pivot);
            if (c.is_zero()) continue;
            polys[j] -= scale(polys[k], c / pivot_coeff);
        }
    }
    // Monic at the least monomial; the algorithm itself leaves scaling free.
    for (Polynomial& q : polys) {
        Rational lc = q.coeff(least_monomial(q, order));
        if (!(lc == Rational(1)))
            q = scale(q, Rational(1) / lc);
    }
    return polys;
}

// Exact rank of the coefficient matrix over the joint support.
static bool linearly_independent(std::span<const Polynomial> polys) {
    std::set<Monomial> sup = support(polys);
    std::vector<Monomial> cols(sup.begin(), sup.end());
    Matrix m(polys.size(), cols.size());
    for (std::size_t i = 0; i < polys.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(i, j) = polys[i].coeff(cols[j]);
    return m.rank() == polys.size();
}

template <typename ExtremalMonomial>
static bool reduced_clauses_hold(std::span<const Polynomial> polys,
                                 const MonomialOrder& order,
                                 ExtremalMonomial extremal) {
    for (const Polynomial& p : polys) {
        if (p.dim() != order.dim())
            throw DimensionMismatch("polynomial dimension does not match ordering");
        if (p.is_zero())
            throw ZeroPolynomial("reduced-basis check on a zero polynomial");
    }
    for (std::size_t i = 0; i + 1 < polys.size(); ++i) {
        Monomial m = extremal(polys[i], order);
        for (std::size_t j = i + 1; j < polys.size(); ++j)
            if (!polys[j].coeff(m).is_zero()) return false;
    }
    return linearly_independent(polys);
}

bool is_reverse_reduced(std::span<const Polynomial> polys, const MonomialOrder& order) {
    return reduced_clauses_hold(polys, order, [](const Polynomial& p, const MonomialOrder& o) {
        return least_monomial(p, o);
    });
}

bool is_reduced(std::span<const Polynomial> polys, const MonomialOrder& order) {
    return reduced_clauses_hold(polys, order, [](const Polynomial& p, const MonomialOrder& o) {
        return leading_monomial(p, o);
    });
}

}  // namespace minterp
