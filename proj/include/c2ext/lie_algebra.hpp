#pragma once

#include <string>
#include <vector>

#include "c2ext/matrix.hpp"
#include "c2ext/root_system.hpp"

namespace c2ext {

/// Concrete simple Lie algebra given by an exact matrix realization:
/// sl2, sl3, sp4 (the B2 = C2 algebra) and the derivation algebra of the
/// split octonions for G2. Structure constants are extracted by exact
/// linear algebra and validated (antisymmetry + Jacobi) at construction.
class LieAlgebraBasis {
public:
    static LieAlgebraBasis create(LieType type, int rank);
    static bool supported(LieType type, int rank);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& names() const { return names_; }

    /// [b_i, b_j] as coefficients over the basis.
    const QVector& bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }
    /// Bracket of arbitrary elements given by coefficient vectors.
    QVector bracket_of(const QVector& x, const QVector& y) const;
    /// Adjoint action matrix of the element with the given coefficients.
    MatrixQ ad(const QVector& coeffs) const;

    /// Root vector of the highest root (coefficients over the basis).
    const QVector& highest_root_vector() const { return e_theta_; }
    /// Root vectors of the negative simple roots.
    const std::vector<QVector>& simple_lowerings() const { return lowerings_; }

private:
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<QVector>> table_;
    QVector e_theta_;
    std::vector<QVector> lowerings_;

    void validate() const;
    void root_decomposition(const std::vector<QVector>& cartan_coords);
};

}  // namespace c2ext
