#pragma once

#include <cstddef>
#include <vector>

#include "asmg/rational.hpp"

namespace asmg {

using RatVec = std::vector<Rational>;

/// Dense rational matrix, row-major. Small sizes only; everything exact.
class RatMat {
public:
    RatMat() : rows_(0), cols_(0) {}
    RatMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static RatMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatVec apply(const RatVec& x) const;
    RatMat mul(const RatMat& o) const;
    RatMat transpose() const;

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Column sums, one per column.
    RatVec column_sums() const;

    /// Characteristic polynomial coefficients, ascending degree (exact,
    /// Faddeev-LeVerrier).
    RatVec char_poly() const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Solves the square system A x = b exactly with fraction-free (Bareiss)
/// elimination; throws std::domain_error when A is singular.
RatVec solve_linear(const RatMat& A, const RatVec& b);

/// Inverse of a square matrix; throws when singular.
RatMat invert(const RatMat& A);

/// Incremental basis of a rational subspace kept in reduced echelon form.
class SpanBasis {
public:
    explicit SpanBasis(std::size_t ambient_dim) : n_(ambient_dim) {}

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<RatVec>& echelon_rows() const { return rows_; }

    /// Adds v to the span; returns true when the dimension grew.
    bool insert(RatVec v);
    bool contains(const RatVec& v) const;

private:
    RatVec reduce(RatVec v) const;
    std::size_t n_;
    std::vector<RatVec> rows_;       // echelon, pivot normalized to 1
    std::vector<std::size_t> pivots_;
};

}  // namespace asmg
