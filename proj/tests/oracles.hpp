#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <vector>

#include "c2ext/matrix.hpp"

namespace c2ext::oracles {

/// Rank as the largest k with a nonzero k x k minor (Laplace expansion).
std::size_t minor_rank(const MatrixQ& m);

/// Coefficients 0..bound of prod (1 + t^{a}) for a in num_exponents divided
/// by prod (1 - t^{b}) for b in den_exponents.
std::vector<long> expand_series(const std::vector<int>& num_exponents,
                                const std::vector<int>& den_exponents, int bound);

/// Coefficientwise product of two series, truncated to the shorter length.
std::vector<std::size_t> convolve(const std::vector<std::size_t>& a,
                                  const std::vector<std::size_t>& b);

}  // namespace c2ext::oracles
