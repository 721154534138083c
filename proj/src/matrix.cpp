#include "c2ext/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace c2ext {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::from_columns(const std::vector<QVector>& columns, std::size_t nrows) {
    MatrixQ m(nrows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != nrows)
            throw std::invalid_argument("from_columns: column length mismatch");
        for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = columns[j][i];
    }
    return m;
}

QVector MatrixQ::column(std::size_t j) const {
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool MatrixQ::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& q) { return q == 0; });
}

MatrixQ matmul(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    MatrixQ c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Rational& bkj = b.at(k, j);
                if (bkj != 0) c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

QVector matvec(const MatrixQ& a, const QVector& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
    QVector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij != 0 && x[j] != 0) y[i] += aij * x[j];
        }
    return y;
}

MatrixQ hstack(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows() != b.rows() && a.cols() != 0 && b.cols() != 0)
        throw std::invalid_argument("hstack: row mismatch");
    std::size_t nrows = std::max(a.rows(), b.rows());
    MatrixQ c(nrows, a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    return c;
}

RrefResult rref(const MatrixQ& m) {
    RrefResult res;
    res.echelon = m;
    MatrixQ& e = res.echelon;
    std::size_t row = 0;
    for (std::size_t col = 0; col < e.cols() && row < e.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < e.rows() && e.at(pivot, col) == 0) ++pivot;
        if (pivot == e.rows()) continue;
        if (pivot != row)
            for (std::size_t j = col; j < e.cols(); ++j) std::swap(e.at(row, j), e.at(pivot, j));
        Rational inv = Rational(1) / e.at(row, col);
        for (std::size_t j = col; j < e.cols(); ++j) e.at(row, j) *= inv;
        e.at(row, col) = 1;  // keep exact
        for (std::size_t i = 0; i < e.rows(); ++i) {
            if (i == row) continue;
            const Rational f = e.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < e.cols(); ++j) e.at(i, j) -= f * e.at(row, j);
            e.at(i, col) = 0;
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const MatrixQ& m) { return rref(m).rank; }

MatrixQ kernel_basis(const MatrixQ& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    MatrixQ basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        basis.at(f, k) = 1;
        for (std::size_t p = 0; p < r.pivot_cols.size(); ++p)
            basis.at(r.pivot_cols[p], k) = -r.echelon.at(p, f);
    }
    return basis;
}

std::optional<QVector> solve(const MatrixQ& a, const QVector& b, PivotOrder order) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: dimension mismatch");
    // Work on [a' | b] where a' has its columns reversed for Rightmost.
    MatrixQ aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::size_t src = (order == PivotOrder::Leftmost) ? j : a.cols() - 1 - j;
            aug.at(i, j) = a.at(i, src);
        }
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult r = rref(aug);
    // Inconsistent iff a pivot sits in the b column.
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == a.cols()) return std::nullopt;
    QVector x(a.cols(), Rational(0));
    for (std::size_t p = 0; p < r.pivot_cols.size(); ++p) {
        std::size_t col = r.pivot_cols[p];
        std::size_t dst = (order == PivotOrder::Leftmost) ? col : a.cols() - 1 - col;
        x[dst] = r.echelon.at(p, a.cols());
    }
    return x;
}

QVector RrefSpan::reduce(QVector v) const {
    if (v.size() != width_) throw std::invalid_argument("RrefSpan: width mismatch");
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& c = v[pivots_[k]];
        if (c == 0) continue;
        const Rational f = c;
        const QVector& row = rows_[k];
        for (std::size_t j = pivots_[k]; j < width_; ++j)
            if (row[j] != 0) v[j] -= f * row[j];
        v[pivots_[k]] = 0;
    }
    return v;
}

bool RrefSpan::add(QVector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < width_ && v[p] == 0) ++p;
    if (p == width_) return false;
    Rational inv = Rational(1) / v[p];
    for (std::size_t j = p; j < width_; ++j) v[j] *= inv;
    v[p] = 1;
    // Back-substitute into existing rows to stay fully reduced.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational f = rows_[k][p];
        if (f == 0) continue;
        for (std::size_t j = p; j < width_; ++j)
            if (v[j] != 0) rows_[k][j] -= f * v[j];
        rows_[k][p] = 0;
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

bool RrefSpan::contains(const QVector& v) const {
    QVector res = reduce(v);
    return std::all_of(res.begin(), res.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace c2ext
