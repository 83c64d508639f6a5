#include "minterp/polynomial.hpp"

#include <algorithm>

namespace minterp {

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
    Polynomial p(dim);
    p.add_term(Monomial::one(dim), c);
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.dim());
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.dim() != dim_)
        throw DimensionMismatch("term dimension does not match polynomial");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::min_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_) d = std::min(d, m.degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(dim_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (dim_ != o.dim_)
        throw DimensionMismatch("polynomial dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (dim_ != o.dim_)
        throw DimensionMismatch("polynomial dimension mismatch");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.dim() != b.dim())
        throw DimensionMismatch("polynomial dimension mismatch");
    Polynomial r(a.dim());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial scale(const Polynomial& p, const Rational& c) {
    Polynomial r(p.dim());
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms()) r.add_term(m, pc * c);
    return r;
}

Polynomial truncate(const Polynomial& p, int cap) {
    Polynomial r(p.dim());
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= cap) r.add_term(m, c);
    return r;
}

std::set<Monomial> support(std::span<const Polynomial> polys) {
    std::set<Monomial> s;
    for (std::size_t i = 1; i < polys.size(); ++i)
        if (polys[i].dim() != polys[0].dim())
            throw DimensionMismatch("polynomial dimension mismatch");
    for (const Polynomial& p : polys)
        for (const auto& [m, c] : p.terms()) s.insert(m);
    return s;
}

std::set<Monomial> support(const Polynomial& p) {
    return support(std::span<const Polynomial>(&p, 1));
}

Monomial least_monomial(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero())
        throw ZeroPolynomial("least monomial of the zero polynomial");
    auto it = p.terms().begin();
    Monomial best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(it->first, best)) best = it->first;
    return best;
}

Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero())
        throw ZeroPolynomial("leading monomial of the zero polynomial");
    auto it = p.terms().begin();
    Monomial best = it->first;
    for (++it; it != p.terms().end(); ++it)
        if (order.less(best, it->first)) best = it->first;
    return best;
}

// Falling factorial b!/(b-a)! per coordinate, used by D^a X^b.
static Rational derivative_factor(const Monomial& a, const Monomial& b) {
    mpz_class f(1);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (int k = 0; k < a[i]; ++k)
            f *= b[i] - k;
    return Rational(mpq_class(f));
}

Polynomial diff_apply(const Polynomial& p, const Polynomial& q) {
    if (p.dim() != q.dim())
        throw DimensionMismatch("polynomial dimension mismatch");
    Polynomial r(p.dim());
    for (const auto& [a, pc] : p.terms()) {
        for (const auto& [b, qc] : q.terms()) {
            if (!a.divides(b)) continue;
            r.add_term(b / a, pc * qc * derivative_factor(a, b));
        }
    }
    return r;
}

Rational eval(const Polynomial& p, std::span<const Rational> point) {
    if (point.size() != p.dim())
        throw DimensionMismatch("point dimension does not match polynomial");
    Rational sum;
    for (const auto& [m, c] : p.terms()) {
        Rational v = c;
        for (std::size_t i = 0; i < m.dim(); ++i)
            if (m[i] > 0) v *= point[i].pow(static_cast<unsigned long>(m[i]));
        sum += v;
    }
    return sum;
}

Rational functional_apply(const Polynomial& p, std::span<const Rational> theta,
                          const Polynomial& q) {
    return eval(diff_apply(p, q), theta);
}

}  // namespace minterp
