#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "c2ext/graded_quotient.hpp"

namespace c2ext {

/// One free-module generator of a resolution level. The kernel vector lives
/// in the slice of the previous level at this internal degree and is the
/// image of the generator under the differential.
struct ResGenerator {
    int degree = 0;
    QVector kernel_vector;
};

struct BettiEntry {
    int level = 0;
    int internal_degree = 0;
    std::size_t count = 0;
    bool certified = true;
};

/// Degree-truncated minimal graded free resolution of the residue field.
/// Bigraded storage: slices indexed by (homological level, internal degree).
class FreeResolution {
public:
    FreeResolution(std::shared_ptr<const GradedQuotient> base, int P, int D,
                   std::vector<std::vector<ResGenerator>> levels,
                   std::map<std::pair<int, int>, MatrixQ> differentials);

    const GradedQuotient& base() const { return *base_; }
    const std::shared_ptr<const GradedQuotient>& base_ptr() const { return base_; }
    int homological_bound() const { return P_; }
    int internal_bound() const { return D_; }

    std::size_t generator_count(int level) const;
    const std::vector<ResGenerator>& generators(int level) const;

    std::size_t slice_dim(int level, int j) const;
    /// Offset of each generator's coordinate block inside slice(level, j).
    std::vector<std::size_t> block_offsets(int level, int j) const;
    /// Differential slice(level, j) -> slice(level-1, j), level >= 1.
    const MatrixQ& differential(int level, int j) const;

    /// Multiplication by variable `var` on slice coordinates:
    /// slice(level, j) -> slice(level, j + weight(var)).
    MatrixQ var_mult_slice(int level, std::size_t var, int j) const;
    /// Multiply a slice vector by a monomial, raising the internal degree.
    QVector monomial_mult_slice(int level, const Monomial& m, int j, const QVector& v) const;

    std::size_t betti(int level, int internal_degree) const;
    std::size_t betti_total(int level) const;
    std::vector<BettiEntry> betti_table() const;
    /// True when no generator of this level can exist above the internal
    /// bound (finite-dimensional base argument).
    bool row_complete(int level) const;

private:
    std::shared_ptr<const GradedQuotient> base_;
    int P_ = 0;
    int D_ = 0;
    std::vector<std::vector<ResGenerator>> levels_;
    std::map<std::pair<int, int>, MatrixQ> diff_;
};

/// Compute the minimal free resolution of R/m by degreewise exact linear
/// algebra: kernels of each differential, minimal generators extracted as the
/// RREF-canonical complement of m * kernel.
FreeResolution minimal_resolution(std::shared_ptr<const GradedQuotient> q, int P, int D);

struct VerifyReport {
    bool composes_to_zero = true;
    bool exact = true;
    bool minimal = true;
    std::vector<std::string> violations;
    bool ok() const { return composes_to_zero && exact && minimal; }
};

/// Slice-by-slice checks: consecutive differentials compose to zero,
/// dim ker = dim im at interior slots, and all entries lie in m.
VerifyReport verify(const FreeResolution& res);

struct PoincareSeries {
    std::vector<std::size_t> coefficients;  // sum_j beta_{i,j} for i = 0..P
    std::vector<bool> complete;             // per homological level
};

PoincareSeries poincare_series(const FreeResolution& res);

}  // namespace c2ext
