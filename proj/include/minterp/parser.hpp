#ifndef MINTERP_PARSER_HPP
#define MINTERP_PARSER_HPP

#include <string>
#include <vector>

#include "minterp/polynomial.hpp"

namespace minterp {

// Polynomial expression grammar:
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | var ['^' uint] | '(' expr ')'
//
// Rational literals are `3`, `1/2`, `-7/6`; the `p/q` form is lexed as a
// single token when unspaced, so `1/2*x` means (1/2)*x. There is no
// division operator and no implicit multiplication.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

// Canonical form: terms in decreasing order w.r.t. `order`, explicit `*`,
// `^` only for exponents >= 2, unit coefficients omitted. Round-trips
// through parse_polynomial. The zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& p,
                              const std::vector<std::string>& variables,
                              const MonomialOrder& order);

std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& variables);

}  // namespace minterp

#endif
