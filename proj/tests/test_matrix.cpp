#include <random>

#include "c2ext/matrix.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace c2ext;

namespace {

MatrixQ from_ints(std::size_t rows, std::size_t cols, const std::vector<int>& entries) {
    MatrixQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entries[i * cols + j];
    return m;
}

MatrixQ random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    MatrixQ m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref on the identity") {
    MatrixQ id = MatrixQ::identity(2);
    RrefResult r = rref(id);
    CHECK(r.echelon == id);
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(r.rank == 2);
}

TEST_CASE("rref with dependent rows") {
    MatrixQ m = from_ints(2, 2, {1, 2, 2, 4});
    RrefResult r = rref(m);
    CHECK(r.echelon == from_ints(2, 2, {1, 2, 0, 0}));
    CHECK(r.pivot_cols == std::vector<std::size_t>{0});
    CHECK(r.rank == 1);
}

TEST_CASE("rref rank matches the determinant-minor oracle on random matrices") {
    std::mt19937_64 rng(20240517);
    for (int trial = 0; trial < 10; ++trial) {
        MatrixQ m = random_matrix(rng, 5, 7);
        CHECK(rref(m).rank == oracles::minor_rank(m));
    }
    // Force low rank: duplicate rows.
    MatrixQ m = random_matrix(rng, 3, 7);
    MatrixQ wide(5, 7);
    for (std::size_t j = 0; j < 7; ++j) {
        for (std::size_t i = 0; i < 3; ++i) wide.at(i, j) = m.at(i, j);
        wide.at(3, j) = m.at(0, j) + m.at(1, j);
        wide.at(4, j) = m.at(2, j) * Rational(5, 3);
    }
    CHECK(rref(wide).rank == oracles::minor_rank(wide));
}

TEST_CASE("rref is idempotent") {
    std::mt19937_64 rng(7);
    MatrixQ m = random_matrix(rng, 4, 6);
    MatrixQ e = rref(m).echelon;
    CHECK(rref(e).echelon == e);
}

TEST_CASE("kernel of the identity is trivial") {
    CHECK(kernel_basis(MatrixQ::identity(3)).cols() == 0);
}

TEST_CASE("kernel of the zero map is the standard basis") {
    MatrixQ z(2, 3);
    MatrixQ k = kernel_basis(z);
    CHECK(k == MatrixQ::identity(3));
}

TEST_CASE("kernel with one relation") {
    MatrixQ m = from_ints(2, 3, {1, 1, 0, 0, 0, 1});
    MatrixQ k = kernel_basis(m);
    REQUIRE(k.cols() == 1);
    CHECK(k.at(0, 0) == -k.at(1, 0));
    CHECK(k.at(2, 0) == 0);
    CHECK(k.at(1, 0) != 0);
}

TEST_CASE("rank plus nullity is the column count") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 6);
        MatrixQ m = random_matrix(rng, size(rng), size(rng));
        CHECK(rref(m).rank + kernel_basis(m).cols() == m.cols());
        // Each kernel column really is annihilated.
        MatrixQ k = kernel_basis(m);
        for (std::size_t c = 0; c < k.cols(); ++c) {
            QVector v = k.column(c);
            QVector image = matvec(m, v);
            for (const Rational& q : image) CHECK(q == 0);
        }
    }
}

TEST_CASE("solve against the identity") {
    QVector b{Rational(3), Rational(-1, 2)};
    auto x = solve(MatrixQ::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
}

TEST_CASE("solve detects inconsistency") {
    MatrixQ a = from_ints(2, 1, {1, 1});
    CHECK_FALSE(solve(a, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("solve zeroes the free variables") {
    MatrixQ a = from_ints(1, 2, {1, 1});
    auto x = solve(a, {Rational(3)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 3);
    CHECK((*x)[1] == 0);
    // The rightmost strategy prefers the other variable.
    auto y = solve(a, {Rational(3)}, PivotOrder::Rightmost);
    REQUIRE(y.has_value());
    CHECK((*y)[0] == 0);
    CHECK((*y)[1] == 3);
}

TEST_CASE("solutions satisfy the system exactly") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 10; ++trial) {
        MatrixQ a = random_matrix(rng, 4, 6);
        QVector target(6);
        for (auto& q : target) q = Rational(trial, 3);
        QVector b = matvec(a, target);
        for (PivotOrder order : {PivotOrder::Leftmost, PivotOrder::Rightmost}) {
            auto x = solve(a, b, order);
            REQUIRE(x.has_value());
            CHECK(matvec(a, *x) == b);
        }
    }
}

TEST_CASE("rationals stay in lowest terms") {
    Rational q(6, 4);
    CHECK(numerator(q) == 3);
    CHECK(denominator(q) == 2);
    Rational z(0, 7);
    CHECK(denominator(z) == 1);
    Rational n = Rational(2) / Rational(-6);
    CHECK(numerator(n) == -1);
    CHECK(denominator(n) == 3);
}

TEST_CASE("RrefSpan membership and growth") {
    RrefSpan span(3);
    CHECK(span.add({Rational(1), Rational(2), Rational(0)}));
    CHECK_FALSE(span.add({Rational(2), Rational(4), Rational(0)}));
    CHECK(span.contains({Rational(-3), Rational(-6), Rational(0)}));
    CHECK(span.add({Rational(0), Rational(0), Rational(5)}));
    CHECK(span.dim() == 2);
}
