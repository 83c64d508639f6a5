#ifndef MINTERP_MATRIX_HPP
#define MINTERP_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "minterp/rational.hpp"

namespace minterp {

// Dense rational matrix with exact Gaussian elimination. Only what the
// interpolation pipeline needs: rank, nonsingularity, square solve.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rank() const;

    // Square matrices only.
    bool nonsingular() const;

    // Solves A x = rhs exactly; nullopt when A is singular. A must be square.
    std::optional<std::vector<Rational>> solve(std::vector<Rational> rhs) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

}  // namespace minterp

#endif
