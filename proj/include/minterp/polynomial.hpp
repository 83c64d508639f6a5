#ifndef MINTERP_POLYNOMIAL_HPP
#define MINTERP_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <span>
#include <vector>

#include "minterp/monomial.hpp"
#include "minterp/order.hpp"
#include "minterp/rational.hpp"

namespace minterp {

// Sparse multivariate polynomial over exact rationals. Stored coefficients
// are never zero; the zero polynomial has an empty term map.
class Polynomial {
public:
    explicit Polynomial(std::size_t dim) : dim_(dim) {}

    static Polynomial zero(std::size_t dim) { return Polynomial(dim); }
    static Polynomial constant(std::size_t dim, const Rational& c);
    static Polynomial term(const Monomial& m, const Rational& c);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Terms keyed in storage order (see Monomial); serialization sorts by
    // the active monomial order instead.
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Coefficient of X^m, zero if absent.
    Rational coeff(const Monomial& m) const;

    // Accumulates c * X^m, dropping the term if the sum vanishes.
    void add_term(const Monomial& m, const Rational& c);

    // Max total degree over terms; -1 for the zero polynomial.
    int total_degree() const;
    // Min total degree over terms; -1 for the zero polynomial.
    int min_degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    std::size_t dim_;
    std::map<Monomial, Rational> terms_;
};

Polynomial scale(const Polynomial& p, const Rational& c);

// Drops all terms of total degree > cap.
Polynomial truncate(const Polynomial& p, int cap);

// Support of a polynomial list: every monomial occurring with a nonzero
// coefficient in any of them.
std::set<Monomial> support(std::span<const Polynomial> polys);
std::set<Monomial> support(const Polynomial& p);

// Least / leading monomial w.r.t. the ordering; the polynomial must be
// nonzero (throws ZeroPolynomial otherwise).
Monomial least_monomial(const Polynomial& p, const MonomialOrder& order);
Monomial leading_monomial(const Polynomial& p, const MonomialOrder& order);

// P(D) applied to Q: sum over terms of P of phat(a) * D^a Q, with
// D^a X^b = (prod_i b_i!/(b_i-a_i)!) X^(b-a) when a <= b and 0 otherwise.
Polynomial diff_apply(const Polynomial& p, const Polynomial& q);

// Exact evaluation at a rational point.
Rational eval(const Polynomial& p, std::span<const Rational> point);

// The interpolation-condition functional (delta_theta o P(D)) applied to Q;
// exact, no truncation involved.
Rational functional_apply(const Polynomial& p, std::span<const Rational> theta,
                          const Polynomial& q);

}  // namespace minterp

#endif
