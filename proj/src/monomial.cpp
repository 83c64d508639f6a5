#include "minterp/monomial.hpp"

#include <numeric>

namespace minterp {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
    for (int x : e_)
        if (x < 0)
            throw Error("negative exponent in monomial");
}

Monomial Monomial::one(std::size_t dim) {
    return Monomial(std::vector<int>(dim, 0));
}

Monomial Monomial::variable(std::size_t dim, std::size_t i, int power) {
    if (i >= dim)
        throw DimensionMismatch("variable index out of range");
    std::vector<int> e(dim, 0);
    e[i] = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::is_one() const {
    for (int x : e_)
        if (x != 0) return false;
    return true;
}

bool Monomial::divides(const Monomial& b) const {
    if (dim() != b.dim())
        throw DimensionMismatch("monomial dimension mismatch");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > b.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& b) const {
    if (dim() != b.dim())
        throw DimensionMismatch("monomial dimension mismatch");
    std::vector<int> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& b) const {
    if (!b.divides(*this))
        throw Error("monomial division is not exact");
    std::vector<int> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.e_[i];
    return Monomial(std::move(e));
}

}  // namespace minterp
