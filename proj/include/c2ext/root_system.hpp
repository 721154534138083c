#pragma once

#include <string>
#include <vector>

#include "c2ext/matrix.hpp"

namespace c2ext {

enum class LieType { A, B, C, D, E, F, G };

LieType lie_type_from_string(const std::string& s);
std::string to_string(LieType t);

/// Root system in an explicit rational coordinate realization, inner product
/// normalized so long roots have squared length 2.
class RootSystem {
public:
    static RootSystem create(LieType type, int rank);

    LieType type() const { return type_; }
    int rank() const { return rank_; }
    const std::vector<QVector>& positive_roots() const { return positive_; }
    const std::vector<QVector>& simple_roots() const { return simple_; }
    const QVector& highest_root() const { return theta_; }
    const QVector& rho() const { return rho_; }

    Rational inner(const QVector& a, const QVector& b) const;
    /// h-dual: 1 + (rho, theta).
    int dual_coxeter() const;
    /// rank + 2 |Phi+|.
    long dimension() const;

private:
    LieType type_ = LieType::A;
    int rank_ = 0;
    Rational scale_ = 1;  // inner product = scale * standard dot
    std::vector<QVector> positive_;
    std::vector<QVector> simple_;
    QVector theta_;
    QVector rho_;
};

/// N_k = prod_{alpha in Phi+} ((k+1) (theta, alpha) / (rho, alpha) + 1).
Rational weyl_nk_value(const RootSystem& rs, int k);

/// The same product expanded as an exact polynomial in k
/// (coefficients ascending).
std::vector<Rational> weyl_nk_polynomial(const RootSystem& rs);

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x);

/// Degree of N_k as a polynomial in k: the number of positive roots not
/// orthogonal to theta. Cross-checked against the published per-type table
/// and against 2 h-dual - 3; any disagreement is a hard failure.
int nk_degree(const RootSystem& rs);

}  // namespace c2ext
