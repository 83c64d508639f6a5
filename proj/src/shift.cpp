#include "minterp/shift.hpp"

namespace minterp {

Polynomial exp_series(std::span<const Rational> theta, int cap) {
    std::size_t dim = theta.size();
    Polynomial linear(dim);  // theta . X
    for (std::size_t i = 0; i < dim; ++i)
        linear.add_term(Monomial::variable(dim, i), theta[i]);

    Polynomial sum = Polynomial::constant(dim, Rational(1));
    Polynomial power = sum;  // (theta X)^j / j!, accumulated iteratively
    for (int j = 1; j <= cap; ++j) {
        power = truncate(power * linear, cap);
        power = scale(power, Rational(1, static_cast<unsigned long>(j)));
        if (power.is_zero()) break;  // theta = 0
        sum += power;
    }
    return sum;
}

Polynomial shift_condition(const Polynomial& p, std::span<const Rational> theta,
                           int cap) {
    if (theta.size() != p.dim())
        throw DimensionMismatch("point dimension does not match polynomial");
    if (p.is_zero())
        throw ZeroPolynomial("cannot shift the zero condition");
    Polynomial shifted = truncate(exp_series(theta, cap) * p, cap);
    if (shifted.is_zero())
        throw ZeroAfterTruncation(
            "condition vanished below the truncation cap " + std::to_string(cap));
    return shifted;
}

}  // namespace minterp
