#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "c2ext/resolution.hpp"

namespace c2ext {

struct ExtBasisElement {
    int level = 0;             // homological degree
    std::size_t index = 0;     // position among the level's generators
    int internal_degree = 0;   // internal degree of the dual resolution generator
    std::string label;
};

/// Truncated Yoneda Ext algebra of the residue field. Basis dual to the
/// minimal-resolution generators; products via chain-map lifting in the
/// shifted-chain-map ("product") convention of the source construction.
/// The composition convention differs by (-1)^{pq}.
class ExtAlgebra {
public:
    static ExtAlgebra compute(std::shared_ptr<const FreeResolution> res, int P,
                              PivotOrder lift_strategy = PivotOrder::Leftmost);

    const FreeResolution& resolution() const { return *res_; }
    int truncation() const { return P_; }
    static const char* convention() { return "product"; }

    std::size_t dim(int level) const;
    const std::vector<ExtBasisElement>& basis() const { return basis_; }
    std::size_t basis_offset(int level) const;
    std::size_t global_index(int level, std::size_t index) const;
    const ExtBasisElement& element(std::size_t global) const { return basis_[global]; }

    /// Structure constants of element_left * element_right, as coefficients
    /// over the basis of level |left| + |right|. Total degree must be <= P.
    const QVector& product(std::size_t left_global, std::size_t right_global) const;

    /// Bilinear extension of the product to coefficient vectors in fixed levels.
    QVector multiply(int level_a, const QVector& a, int level_b, const QVector& b) const;

private:
    std::shared_ptr<const FreeResolution> res_;
    int P_ = 0;
    PivotOrder strategy_ = PivotOrder::Leftmost;
    std::vector<ExtBasisElement> basis_;
    std::vector<std::size_t> level_offset_;

    // Chain-map lift of basis element k: lift_[k][n - level] is the list of
    // values on the generators of F_n, each a vector in
    // slice(n - level, deg g - internal_degree). Lazily extended under the
    // lock; node-based storage keeps returned references stable.
    mutable std::shared_ptr<std::mutex> cache_lock_ = std::make_shared<std::mutex>();
    mutable std::vector<std::vector<std::vector<QVector>>> lifts_;
    mutable std::vector<std::map<std::pair<std::size_t, std::size_t>, QVector>> table_;

    void ensure_lift(std::size_t global, int up_to_level) const;
};

struct CommutativeQuotientReport {
    std::vector<std::size_t> ext_dims;       // dim Ext^d, d = 0..P
    std::vector<std::size_t> quotient_dims;  // after the commutator ideal
    int growth_degree = -1;                  // heuristic; -1 when dims vanish
    int variety_dim_estimate = 0;            // heuristic: growth degree + 1
    std::vector<std::string> surviving_generators;
};

/// Degreewise quotient of the truncated Ext algebra by the two-sided ideal
/// generated by commutators uv - vu of basis elements. The computable
/// surrogate for the maximal commutative quotient; the growth estimate is a
/// labeled heuristic, never a certificate.
CommutativeQuotientReport commutative_quotient(const ExtAlgebra& ext, int P);

struct CommutatorViolation {
    std::string left, right;
};

/// Basis pairs (u, v) with uv != (-1)^{|u||v|} vu, |u| + |v| <= P.
std::vector<CommutatorViolation> graded_commutator_report(const ExtAlgebra& ext);

struct SignConventionNote {
    std::string convention;
    std::string relation;
};

SignConventionNote sign_convention_note(const ExtAlgebra& ext);

enum class WitnessVerdict { Pass, Fail, Unknown };

struct WitnessReport {
    WitnessVerdict verdict = WitnessVerdict::Unknown;
    std::string detail;
    std::vector<std::string> class_labels;
};

/// Lower-bound witness for the polynomial quotient: identify the degree-2
/// classes dual to relation generators (by internal degree) and check that
/// their degree-m products span C(expected_r - 1 + m, m) dimensions for all
/// m with 2m <= P.
WitnessReport polynomial_subalgebra_witness(const ExtAlgebra& ext, std::size_t expected_r);

}  // namespace c2ext
