#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "c2ext/rational.hpp"

namespace c2ext {

using QVector = std::vector<Rational>;

/// Dense matrix over Q, row-major.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static MatrixQ identity(std::size_t n);
    /// Matrix whose columns are the given vectors (all of equal length).
    static MatrixQ from_columns(const std::vector<QVector>& columns, std::size_t nrows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    QVector column(std::size_t j) const;
    bool is_zero() const;

    bool operator==(const MatrixQ& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

MatrixQ matmul(const MatrixQ& a, const MatrixQ& b);
QVector matvec(const MatrixQ& a, const QVector& x);
/// [a | b] side by side.
MatrixQ hstack(const MatrixQ& a, const MatrixQ& b);

struct RrefResult {
    MatrixQ echelon;
    std::vector<std::size_t> pivot_cols;  // strictly increasing
    std::size_t rank = 0;
};

/// Reduced row echelon form. Unique for a given input.
RrefResult rref(const MatrixQ& m);

std::size_t rank(const MatrixQ& m);

/// Columns span ker(m); the canonical free-variable basis read off the RREF
/// (each free column gets a basis vector with entry 1 there).
MatrixQ kernel_basis(const MatrixQ& m);

/// Which columns are preferred as pivots when a solution is underdetermined.
enum class PivotOrder { Leftmost, Rightmost };

/// Canonical particular solution of a x = b (free variables set to 0),
/// or nullopt when inconsistent. PivotOrder::Rightmost prefers pivots in
/// the rightmost columns instead; used to perturb lift choices.
std::optional<QVector> solve(const MatrixQ& a, const QVector& b,
                             PivotOrder order = PivotOrder::Leftmost);

/// Incrementally maintained row span in reduced echelon form.
/// The workhorse for membership tests and span growth (adjoint orbits,
/// minimal generator extraction).
class RrefSpan {
public:
    explicit RrefSpan(std::size_t width) : width_(width) {}

    /// Reduce v against the span; returns the residue (zero iff v is in the span).
    QVector reduce(QVector v) const;
    /// Insert v if independent. Returns true when the span grew.
    bool add(QVector v);
    bool contains(const QVector& v) const;

    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<QVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

private:
    std::size_t width_;
    std::vector<QVector> rows_;          // reduced, pivot entry 1
    std::vector<std::size_t> pivots_;    // strictly increasing
};

}  // namespace c2ext
