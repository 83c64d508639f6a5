#ifndef MINTERP_ORDER_HPP
#define MINTERP_ORDER_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "minterp/monomial.hpp"

namespace minterp {

enum class OrderKind { lex, grlex, grevlex };

std::string to_string(OrderKind kind);
OrderKind order_kind_from_string(const std::string& name);  // throws Error

// A monomial ordering: lex / grlex / grevlex plus a variable precedence,
// given as a permutation of 0..d-1, most significant variable first.
// All three are total multiplicative well-orderings with 1 minimal.
class MonomialOrder {
public:
    MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence);

    // Natural precedence x_0 > x_1 > ... > x_{d-1}.
    static MonomialOrder lex(std::size_t dim);
    static MonomialOrder grlex(std::size_t dim);
    static MonomialOrder grevlex(std::size_t dim);

    OrderKind kind() const { return kind_; }
    std::size_t dim() const { return precedence_.size(); }
    const std::vector<std::size_t>& precedence() const { return precedence_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }
    // Sort comparator.
    bool operator()(const Monomial& a, const Monomial& b) const { return less(a, b); }

private:
    OrderKind kind_;
    std::vector<std::size_t> precedence_;
};

// Set ordering: T1 < T2 iff max(T1-T2) < max(T2-T1). Equal iff T1 = T2.
// When exactly one difference is empty the proper subset is the smaller set
// (extension of the definition, which assumes both differences nonempty).
std::strong_ordering compare_sets(const MonomialOrder& order,
                                  const std::set<Monomial>& t1,
                                  const std::set<Monomial>& t2);

// True iff S is closed under componentwise division (a lower set).
bool is_lower_set(const std::set<Monomial>& s);

}  // namespace minterp

#endif
