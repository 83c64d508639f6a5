#include "minterp/order.hpp"

#include <algorithm>

namespace minterp {

std::string to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
    }
    return "?";
}

OrderKind order_kind_from_string(const std::string& name) {
    if (name == "lex") return OrderKind::lex;
    if (name == "grlex") return OrderKind::grlex;
    if (name == "grevlex") return OrderKind::grevlex;
    throw Error("unknown order kind '" + name + "' (expected lex, grlex or grevlex)");
}

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    std::vector<bool> seen(precedence_.size(), false);
    for (std::size_t v : precedence_) {
        if (v >= precedence_.size() || seen[v])
            throw Error("precedence must be a permutation of the variable indices");
        seen[v] = true;
    }
}

static std::vector<std::size_t> iota_prec(std::size_t dim) {
    std::vector<std::size_t> p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = i;
    return p;
}

MonomialOrder MonomialOrder::lex(std::size_t dim) {
    return MonomialOrder(OrderKind::lex, iota_prec(dim));
}
MonomialOrder MonomialOrder::grlex(std::size_t dim) {
    return MonomialOrder(OrderKind::grlex, iota_prec(dim));
}
MonomialOrder MonomialOrder::grevlex(std::size_t dim) {
    return MonomialOrder(OrderKind::grevlex, iota_prec(dim));
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.dim() != dim() || b.dim() != dim())
        throw DimensionMismatch("monomial dimension does not match ordering");

    if (kind_ != OrderKind::lex) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    }
    switch (kind_) {
        case OrderKind::lex:
        case OrderKind::grlex:
            for (std::size_t v : precedence_)
                if (auto c = a[v] <=> b[v]; c != 0) return c;
            return std::strong_ordering::equal;
        case OrderKind::grevlex:
            // Ties break on the least significant differing variable, where
            // the smaller exponent wins.
            for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it)
                if (auto c = b[*it] <=> a[*it]; c != 0) return c;
            return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
}

std::strong_ordering compare_sets(const MonomialOrder& order,
                                  const std::set<Monomial>& t1,
                                  const std::set<Monomial>& t2) {
    std::vector<Monomial> d1, d2;
    std::set_difference(t1.begin(), t1.end(), t2.begin(), t2.end(), std::back_inserter(d1));
    std::set_difference(t2.begin(), t2.end(), t1.begin(), t1.end(), std::back_inserter(d2));
    if (d1.empty() && d2.empty()) return std::strong_ordering::equal;
    if (d1.empty()) return std::strong_ordering::less;     // proper subset is smaller
    if (d2.empty()) return std::strong_ordering::greater;
    auto max1 = *std::max_element(d1.begin(), d1.end(), order);
    auto max2 = *std::max_element(d2.begin(), d2.end(), order);
    return order.compare(max1, max2);
}

bool is_lower_set(const std::set<Monomial>& s) {
    // Closure under single-variable decrements is equivalent to closure
    // under componentwise <=.
    for (const Monomial& m : s) {
        for (std::size_t i = 0; i < m.dim(); ++i) {
            if (m[i] == 0) continue;
            std::vector<int> e = m.exponents();
            --e[i];
            if (!s.count(Monomial(std::move(e)))) return false;
        }
    }
    return true;
}

}  // namespace minterp
