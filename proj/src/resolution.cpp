#include "c2ext/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace c2ext {

FreeResolution::FreeResolution(std::shared_ptr<const GradedQuotient> base, int P, int D,
                               std::vector<std::vector<ResGenerator>> levels,
                               std::map<std::pair<int, int>, MatrixQ> differentials)
    : base_(std::move(base)), P_(P), D_(D), levels_(std::move(levels)),
      diff_(std::move(differentials)) {}

std::size_t FreeResolution::generator_count(int level) const {
    if (level < 0 || level > P_) throw std::out_of_range("level out of range");
    return levels_[static_cast<std::size_t>(level)].size();
}

const std::vector<ResGenerator>& FreeResolution::generators(int level) const {
    if (level < 0 || level > P_) throw std::out_of_range("level out of range");
    return levels_[static_cast<std::size_t>(level)];
}

std::size_t FreeResolution::slice_dim(int level, int j) const {
    std::size_t total = 0;
    for (const ResGenerator& g : generators(level)) {
        int d = j - g.degree;
        if (d >= 0 && d <= D_) total += base_->dim(d);
    }
    return total;
}

std::vector<std::size_t> FreeResolution::block_offsets(int level, int j) const {
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const ResGenerator& g : generators(level)) {
        offsets.push_back(total);
        int d = j - g.degree;
        if (d >= 0 && d <= D_) total += base_->dim(d);
    }
    return offsets;
}

const MatrixQ& FreeResolution::differential(int level, int j) const {
    auto it = diff_.find({level, j});
    if (it == diff_.end()) throw std::out_of_range("differential slice not computed");
    return it->second;
}

namespace {

/// Blockwise multiplication of a slice vector by one variable:
/// each generator block R_{j - deg g} maps into R_{j + w - deg g}.
QVector apply_variable(const GradedQuotient& q, const std::vector<ResGenerator>& gens,
                       std::size_t var, int j, const QVector& v, int D) {
    int w = q.ring()->weight(var);
    std::size_t out_dim = 0;
    for (const ResGenerator& g : gens) {
        int d = j + w - g.degree;
        if (d >= 0 && d <= D) out_dim += q.dim(d);
    }
    QVector out(out_dim, Rational(0));
    std::size_t src = 0, dst = 0;
    for (const ResGenerator& g : gens) {
        int d = j - g.degree;
        std::size_t src_here = (d >= 0 && d <= D) ? q.dim(d) : 0;
        std::size_t dst_here = (d + w >= 0 && d + w <= D) ? q.dim(d + w) : 0;
        if (src_here > 0 && dst_here > 0) {
            const MatrixQ& block = q.times_variable(var, d);
            for (std::size_t r = 0; r < block.rows(); ++r) {
                Rational acc(0);
                for (std::size_t c = 0; c < block.cols(); ++c) {
                    const Rational& b = block.at(r, c);
                    if (b != 0 && v[src + c] != 0) acc += b * v[src + c];
                }
                out[dst + r] = acc;
            }
        }
        src += src_here;
        dst += dst_here;
    }
    return out;
}

QVector apply_monomial(const GradedQuotient& q, const std::vector<ResGenerator>& gens,
                       const Monomial& m, int j, QVector v, int D) {
    int deg = j;
    for (std::size_t var = 0; var < q.ring()->size(); ++var)
        for (int rep = 0; rep < m.exponents[var]; ++rep) {
            v = apply_variable(q, gens, var, deg, v, D);
            deg += q.ring()->weight(var);
        }
    return v;
}

}  // namespace

MatrixQ FreeResolution::var_mult_slice(int level, std::size_t var, int j) const {
    int w = base_->ring()->weight(var);
    MatrixQ out(slice_dim(level, j + w), slice_dim(level, j));
    std::vector<std::size_t> src_off = block_offsets(level, j);
    std::vector<std::size_t> dst_off = block_offsets(level, j + w);
    const auto& gens = generators(level);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        int d = j - gens[g].degree;
        if (d < 0 || base_->dim(d) == 0) continue;
        if (d + w > D_ || base_->dim(d + w) == 0) continue;
        const MatrixQ& block = base_->times_variable(var, d);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                out.at(dst_off[g] + r, src_off[g] + c) = block.at(r, c);
    }
    return out;
}

QVector FreeResolution::monomial_mult_slice(int level, const Monomial& m, int j,
                                            const QVector& v) const {
    return apply_monomial(*base_, generators(level), m, j, v, D_);
}

std::size_t FreeResolution::betti(int level, int internal_degree) const {
    std::size_t count = 0;
    for (const ResGenerator& g : generators(level))
        if (g.degree == internal_degree) ++count;
    return count;
}

std::size_t FreeResolution::betti_total(int level) const { return generator_count(level); }

std::vector<BettiEntry> FreeResolution::betti_table() const {
    std::vector<BettiEntry> table;
    for (int i = 0; i <= P_; ++i) {
        std::map<int, std::size_t> by_degree;
        for (const ResGenerator& g : generators(i)) ++by_degree[g.degree];
        for (const auto& [j, count] : by_degree)
            table.push_back(BettiEntry{i, j, count, j <= D_});
    }
    return table;
}

bool FreeResolution::row_complete(int level) const {
    if (level == 0) return true;
    int top = base_->certified_top_degree();
    if (top < 0) return false;
    int prev_max = 0;
    for (const ResGenerator& g : generators(level - 1)) prev_max = std::max(prev_max, g.degree);
    return prev_max + top <= D_;
}

FreeResolution minimal_resolution(std::shared_ptr<const GradedQuotient> q, int P, int D) {
    if (P < 1) throw std::invalid_argument("minimal_resolution: P must be >= 1");
    if (D < P) throw std::invalid_argument("minimal_resolution: D must be >= P");
    if (D > q->truncation())
        throw std::invalid_argument("minimal_resolution: D exceeds quotient truncation");

    std::vector<std::vector<ResGenerator>> levels;
    levels.push_back({ResGenerator{0, {}}});
    std::map<std::pair<int, int>, MatrixQ> diff;

    auto slice_dim = [&](int level, int j) {
        std::size_t total = 0;
        for (const ResGenerator& g : levels[static_cast<std::size_t>(level)]) {
            int d = j - g.degree;
            if (d >= 0 && d <= D) total += q->dim(d);
        }
        return total;
    };

    for (int i = 0; i < P; ++i) {
        const std::vector<ResGenerator>& current = levels[static_cast<std::size_t>(i)];
        std::vector<MatrixQ> kernel(static_cast<std::size_t>(D) + 1);
        for (int j = 1; j <= D; ++j) {
            if (i == 0) {
                kernel[static_cast<std::size_t>(j)] = MatrixQ::identity(q->dim(j));
            } else {
                kernel[static_cast<std::size_t>(j)] = kernel_basis(diff.at({i, j}));
            }
        }
        std::vector<ResGenerator> next;
        for (int j = 1; j <= D; ++j) {
            const MatrixQ& K = kernel[static_cast<std::size_t>(j)];
            if (K.cols() == 0) continue;
            // Span of m * kernel in degree j: t_v applied to lower kernel slices.
            std::vector<QVector> decomposable;
            for (std::size_t v = 0; v < q->ring()->size(); ++v) {
                int src = j - q->ring()->weight(v);
                if (src < 1) continue;
                const MatrixQ& Ksrc = kernel[static_cast<std::size_t>(src)];
                for (std::size_t c = 0; c < Ksrc.cols(); ++c)
                    decomposable.push_back(apply_variable(*q, current, v, src, Ksrc.column(c), D));
            }
            MatrixQ M = MatrixQ::from_columns(decomposable, slice_dim(i, j));
            RrefResult r = rref(hstack(M, K));
            for (std::size_t p : r.pivot_cols) {
                if (p < M.cols()) continue;
                next.push_back(ResGenerator{j, K.column(p - M.cols())});
            }
        }
        levels.push_back(std::move(next));

        // Reacquire after push_back: the vector may have reallocated.
        const std::vector<ResGenerator>& parent = levels[static_cast<std::size_t>(i)];
        const std::vector<ResGenerator>& gens = levels.back();
        for (int j = 0; j <= D; ++j) {
            MatrixQ d(slice_dim(i, j), slice_dim(i + 1, j));
            std::size_t col = 0;
            for (const ResGenerator& g : gens) {
                int mdeg = j - g.degree;
                if (mdeg < 0) continue;
                for (const Monomial& m : q->standard_monomials(mdeg)) {
                    QVector image = apply_monomial(*q, parent, m, g.degree, g.kernel_vector, D);
                    for (std::size_t rix = 0; rix < image.size(); ++rix)
                        d.at(rix, col) = image[rix];
                    ++col;
                }
            }
            diff.emplace(std::make_pair(i + 1, j), std::move(d));
        }
    }
    return FreeResolution(std::move(q), P, D, std::move(levels), std::move(diff));
}

VerifyReport verify(const FreeResolution& res) {
    VerifyReport report;
    const GradedQuotient& q = res.base();
    int P = res.homological_bound();
    int D = res.internal_bound();

    for (int i = 2; i <= P; ++i) {
        for (int j = 0; j <= D; ++j) {
            MatrixQ composed = matmul(res.differential(i - 1, j), res.differential(i, j));
            if (!composed.is_zero()) {
                report.composes_to_zero = false;
                report.violations.push_back("d^2 != 0 at level " + std::to_string(i) +
                                            ", degree " + std::to_string(j));
            }
        }
    }
    // Exactness: the image of d_1 is all of m; at interior levels
    // dim ker d_i = dim im d_{i+1}.
    for (int j = 1; j <= D; ++j) {
        if (rank(res.differential(1, j)) != q.dim(j)) {
            report.exact = false;
            report.violations.push_back("augmentation not exact at degree " + std::to_string(j));
        }
    }
    for (int i = 1; i < P; ++i) {
        for (int j = 1; j <= D; ++j) {
            std::size_t dim_slice = res.slice_dim(i, j);
            std::size_t rank_i = rank(res.differential(i, j));
            std::size_t rank_next = rank(res.differential(i + 1, j));
            if (rank_next != dim_slice - rank_i) {
                report.exact = false;
                report.violations.push_back("homology nonzero at level " + std::to_string(i) +
                                            ", degree " + std::to_string(j));
            }
        }
    }
    // Minimality: no generator image has a constant coordinate in a block of
    // the same internal degree.
    for (int i = 1; i <= P; ++i) {
        const auto& prev = res.generators(i - 1);
        for (const ResGenerator& g : res.generators(i)) {
            std::vector<std::size_t> offsets = res.block_offsets(i - 1, g.degree);
            for (std::size_t b = 0; b < prev.size(); ++b) {
                if (prev[b].degree != g.degree) continue;
                if (g.kernel_vector[offsets[b]] != 0) {
                    report.minimal = false;
                    report.violations.push_back("differential entry outside m at level " +
                                                std::to_string(i) + ", degree " +
                                                std::to_string(g.degree));
                }
            }
        }
    }
    return report;
}

PoincareSeries poincare_series(const FreeResolution& res) {
    PoincareSeries out;
    for (int i = 0; i <= res.homological_bound(); ++i) {
        out.coefficients.push_back(res.betti_total(i));
        out.complete.push_back(res.row_complete(i));
    }
    return out;
}

}  // namespace c2ext
