#include "oracles.hpp"

#include <algorithm>

namespace c2ext::oracles {

namespace {

Rational det_laplace(const MatrixQ& m, std::vector<std::size_t> rows,
                     std::vector<std::size_t> cols) {
    if (rows.size() == 1) return m.at(rows[0], cols[0]);
    Rational out(0);
    int sign = 1;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        std::vector<std::size_t> sub_rows;
        for (std::size_t i = 1; i < rows.size(); ++i) sub_rows.push_back(rows[i]);
        std::vector<std::size_t> sub_cols;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        if (m.at(rows[0], cols[k]) != 0)
            out += Rational(sign) * m.at(rows[0], cols[k]) * det_laplace(m, sub_rows, sub_cols);
        sign = -sign;
    }
    return out;
}

bool combinations(std::vector<std::size_t>& comb, std::size_t n) {
    std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] + (k - i) < n) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::size_t minor_rank(const MatrixQ& m) {
    std::size_t bound = std::min(m.rows(), m.cols());
    for (std::size_t k = bound; k >= 1; --k) {
        std::vector<std::size_t> rows(k), cols(k);
        for (std::size_t i = 0; i < k; ++i) rows[i] = i;
        do {
            for (std::size_t i = 0; i < k; ++i) cols[i] = i;
            do {
                if (det_laplace(m, rows, cols) != 0) return k;
            } while (combinations(cols, m.cols()));
        } while (combinations(rows, m.rows()));
    }
    return 0;
}

std::vector<long> expand_series(const std::vector<int>& num_exponents,
                                const std::vector<int>& den_exponents, int bound) {
    std::vector<long> series(static_cast<std::size_t>(bound) + 1, 0);
    series[0] = 1;
    for (int a : num_exponents) {
        std::vector<long> next(series.size(), 0);
        for (std::size_t i = 0; i < series.size(); ++i) {
            next[i] += series[i];
            if (i + static_cast<std::size_t>(a) < next.size())
                next[i + static_cast<std::size_t>(a)] += series[i];
        }
        series = std::move(next);
    }
    for (int b : den_exponents) {
        // multiply by 1/(1 - t^b) = geometric series
        for (std::size_t i = static_cast<std::size_t>(b); i < series.size(); ++i)
            series[i] += series[i - static_cast<std::size_t>(b)];
    }
    return series;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b) {
    std::size_t len = std::min(a.size(), b.size());
    std::vector<std::size_t> out(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j + i < len; ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace c2ext::oracles
