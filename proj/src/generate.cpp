#include "minterp/generate.hpp"

#include <set>

namespace minterp {

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<unsigned long> den(1, 4);
    return Rational(num(rng), den(rng));
}

std::vector<Rational> distinct_point(std::mt19937_64& rng, std::size_t dim,
                                     std::set<std::vector<std::string>>& used) {
    for (;;) {
        std::vector<Rational> point;
        std::vector<std::string> key;
        for (std::size_t i = 0; i < dim; ++i) {
            point.push_back(random_rational(rng));
            key.push_back(point.back().str());
        }
        if (used.insert(std::move(key)).second) return point;
    }
}

std::vector<std::string> variable_names(std::size_t dim) {
    static const char* names[] = {"x", "y", "z", "w"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < dim; ++i)
        out.push_back(i < 4 ? names[i] : "v" + std::to_string(i));
    return out;
}

// The chain {1}, {1, x_i} or {1, x_i, 1/2 x_i^2 + x_j}: each span is closed
// under differentiation, so the minimal basis stays a lower set.
std::vector<Polynomial> hermite_chain(std::mt19937_64& rng, std::size_t dim,
                                      std::size_t length) {
    std::uniform_int_distribution<std::size_t> var(0, dim - 1);
    std::size_t i = var(rng);
    std::size_t j = var(rng);
    std::vector<Polynomial> chain;
    chain.push_back(Polynomial::constant(dim, Rational(1)));
    if (length >= 2)
        chain.push_back(Polynomial::term(Monomial::variable(dim, i), Rational(1)));
    if (length >= 3) {
        Polynomial p = Polynomial::term(Monomial::variable(dim, i, 2), Rational(1, 2));
        p += Polynomial::term(Monomial::variable(dim, j), Rational(1));
        chain.push_back(std::move(p));
    }
    return chain;
}

}  // namespace

ProblemFile random_problem(std::mt19937_64& rng, InstanceKind kind,
                           std::size_t dim, std::size_t target_conditions) {
    if (dim == 0 || target_conditions == 0)
        throw Error("random_problem needs dim >= 1 and at least one condition");

    std::set<std::vector<std::string>> used_points;
    std::vector<Site> sites;
    std::size_t remaining = target_conditions;

    while (remaining > 0) {
        Site site;
        site.point = distinct_point(rng, dim, used_points);
        if (kind == InstanceKind::lagrange) {
            site.conditions.push_back(Polynomial::constant(dim, Rational(1)));
            remaining -= 1;
        } else {
            std::uniform_int_distribution<std::size_t> len(1, std::min<std::size_t>(3, remaining));
            std::size_t chain_len = len(rng);
            site.conditions = hermite_chain(rng, dim, chain_len);
            remaining -= chain_len;
        }
        sites.push_back(std::move(site));
    }

    std::vector<std::string> variables = variable_names(dim);
    MonomialOrder order(OrderKind::grlex, [&] {
        std::vector<std::size_t> p;
        for (std::size_t i = 0; i < dim; ++i) p.push_back(i);
        return p;
    }());

    ProblemFile file{Problem(std::move(variables), std::move(order), std::move(sites)),
                     std::nullopt};

    std::vector<Rational> values;
    for (std::size_t i = 0; i < file.problem.condition_count(); ++i)
        values.push_back(random_rational(rng));
    file.values = std::move(values);
    return file;
}

ProblemFile random_problem(std::uint64_t seed, InstanceKind kind,
                           std::size_t dim, std::size_t target_conditions) {
    std::mt19937_64 rng(seed);
    return random_problem(rng, kind, dim, target_conditions);
}

}  // namespace minterp
