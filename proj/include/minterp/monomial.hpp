#ifndef MINTERP_MONOMIAL_HPP
#define MINTERP_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <vector>

#include "minterp/errors.hpp"

namespace minterp {

// A monomial X^a as its exponent vector (a_1, ..., a_d), entries >= 0.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);

    // The constant monomial 1 in dimension dim.
    static Monomial one(std::size_t dim);
    // x_i^power.
    static Monomial variable(std::size_t dim, std::size_t i, int power = 1);

    std::size_t dim() const { return e_.size(); }
    int operator[](std::size_t i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }

    int degree() const;  // total degree

    bool is_one() const;

    // Componentwise a <= b, i.e. X^a divides X^b.
    bool divides(const Monomial& b) const;

    Monomial operator*(const Monomial& b) const;
    // X^(a-b); requires b.divides(*this).
    Monomial operator/(const Monomial& b) const;

    // Storage order only (plain lexicographic on the exponent array), used
    // for map/set keys. The mathematical orderings live in MonomialOrder.
    friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> e_;
};

}  // namespace minterp

#endif
