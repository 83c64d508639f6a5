#include "minterp/matrix.hpp"

#include "minterp/errors.hpp"

namespace minterp {

// Row-echelon elimination on a copy; returns the pivot row count.
static std::size_t eliminate(Matrix& m) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != rank)
            for (std::size_t j = col; j < m.cols(); ++j)
                std::swap(m.at(pivot, j), m.at(rank, j));
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            Rational f = m.at(i, col) / m.at(rank, col);
            m.at(i, col) = Rational();
            for (std::size_t j = col + 1; j < m.cols(); ++j)
                m.at(i, j) -= f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

std::size_t Matrix::rank() const {
    Matrix work(*this);
    return eliminate(work);
}

bool Matrix::nonsingular() const {
    if (rows_ != cols_)
        throw DimensionMismatch("nonsingularity is defined for square matrices");
    return rank() == rows_;
}

std::optional<std::vector<Rational>> Matrix::solve(std::vector<Rational> rhs) const {
    if (rows_ != cols_)
        throw DimensionMismatch("solve expects a square matrix");
    if (rhs.size() != rows_)
        throw DimensionMismatch("right-hand side length does not match");

    Matrix work(*this);
    // Forward elimination with the rhs carried along.
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t pivot = col;
        while (pivot < rows_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows_) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = col; j < cols_; ++j)
                std::swap(work.at(pivot, j), work.at(col, j));
            std::swap(rhs[pivot], rhs[col]);
        }
        for (std::size_t i = col + 1; i < rows_; ++i) {
            if (work.at(i, col).is_zero()) continue;
            Rational f = work.at(i, col) / work.at(col, col);
            work.at(i, col) = Rational();
            for (std::size_t j = col + 1; j < cols_; ++j)
                work.at(i, j) -= f * work.at(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    // Back substitution.
    std::vector<Rational> x(cols_);
    for (std::size_t i = rows_; i-- > 0;) {
        Rational s = rhs[i];
        for (std::size_t j = i + 1; j < cols_; ++j)
            s -= work.at(i, j) * x[j];
        x[i] = s / work.at(i, i);
    }
    return x;
}

}  // namespace minterp
