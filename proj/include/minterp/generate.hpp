#ifndef MINTERP_GENERATE_HPP
#define MINTERP_GENERATE_HPP

#include <cstdint>
#include <random>

#include "minterp/problem_io.hpp"

namespace minterp {

enum class InstanceKind { lagrange, hermite };

// Seeded random instances for fuzzing and cross-validation. Lagrange: the
// requested number of distinct rational points, condition {1} each.
// Hermite: sites carry a condition chain {1}, {1, x_i} or
// {1, x_i, 1/2 x_i^2 + x_j}, which keeps each site's span closed under
// differentiation. Values are always included. Deterministic in the seed.
ProblemFile random_problem(std::mt19937_64& rng, InstanceKind kind,
                           std::size_t dim, std::size_t target_conditions);

ProblemFile random_problem(std::uint64_t seed, InstanceKind kind,
                           std::size_t dim, std::size_t target_conditions);

}  // namespace minterp

#endif
