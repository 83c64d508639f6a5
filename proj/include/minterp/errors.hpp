#ifndef MINTERP_ERRORS_HPP
#define MINTERP_ERRORS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace minterp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// lm/LM requested on the zero polynomial.
struct ZeroPolynomial : Error {
    using Error::Error;
};

// Reverse reduction drove input k (0-based, in input order) to zero:
// the inputs are linearly dependent, or truncation destroyed them.
struct ZeroPivot : Error {
    std::size_t index;
    explicit ZeroPivot(std::size_t k)
        : Error("polynomial " + std::to_string(k) + " reduced to zero"), index(k) {}
};

// Shifted condition has no term of total degree <= cap.
struct ZeroAfterTruncation : Error {
    using Error::Error;
};

// Flattened (site, condition) index pair identifying one interpolation
// condition within a problem.
struct ConditionTag {
    std::size_t site = 0;
    std::size_t condition = 0;
    friend bool operator==(const ConditionTag&, const ConditionTag&) = default;
};

struct DependentConditions : Error {
    std::optional<ConditionTag> tag;
    explicit DependentConditions(const std::string& msg,
                                 std::optional<ConditionTag> t = std::nullopt)
        : Error(msg), tag(t) {}
};

struct EmptyProblem : Error {
    using Error::Error;
};

struct PoolTooLarge : Error {
    using Error::Error;
};

struct NoBasisInPool : Error {
    using Error::Error;
};

// Expression or file syntax error; `position` is a 0-based character offset.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownVariable : ParseError {
    std::string name;
    UnknownVariable(std::size_t pos, const std::string& n)
        : ParseError(pos, "unknown variable '" + n + "'"), name(n) {}
};

struct NegativeExponent : ParseError {
    NegativeExponent(std::size_t pos)
        : ParseError(pos, "exponents must be nonnegative integers") {}
};

}  // namespace minterp

#endif
