#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "c2ext/ext_algebra.hpp"
#include "c2ext/graded_quotient.hpp"
#include "c2ext/resolution.hpp"

namespace c2ext {

/// Free-module basis element of the complete-intersection resolution:
/// a monomial in the degree-2 symbols times a square-free monomial in the
/// degree-1 exterior symbols.
struct TateBasisElement {
    std::vector<int> s_exponents;      // one per relation symbol
    std::vector<std::size_t> t_set;    // strictly increasing variable indices
    int homological_degree = 0;        // 2*|s| + |t|
    int internal_degree = 0;
};

/// The explicit resolution of the residue field over a complete intersection:
/// exterior symbols T_i with dT_i = t_i and polynomial symbols S_j with
/// dS_j = sum_i c_{j,i} T_i, realized slice by slice as exact matrices.
class TateComplex {
public:
    /// Requires a CI-certified quotient; the c_{j,i} decomposition assigns
    /// each monomial of c_j to its smallest dividing variable.
    static TateComplex build(std::shared_ptr<const GradedQuotient> q);
    /// Same complex with an explicit decomposition c_j = sum_i cji[j][i] t_i.
    /// No validation: a wrong decomposition breaks d^2 = 0, which is exactly
    /// what the verification tests exercise.
    static TateComplex build_with_decomposition(std::shared_ptr<const GradedQuotient> q,
                                                std::vector<std::vector<Polynomial>> cji);

    const GradedQuotient& base() const { return *q_; }
    std::size_t variable_count() const { return n_; }
    std::size_t relation_count() const { return r_; }
    const std::vector<int>& relation_degrees() const { return degrees_; }
    const Polynomial& c_decomposition(std::size_t j, std::size_t i) const;

    /// Free rank of the homological degree m piece.
    std::size_t rank(int m) const;
    const std::vector<TateBasisElement>& basis(int m) const;

    std::size_t slice_dim(int m, int d) const;
    std::vector<std::size_t> block_offsets(int m, int d) const;
    /// Differential slice(m, d) -> slice(m-1, d).
    MatrixQ differential(int m, int d) const;
    /// R-module multiplication by a monomial on slice coordinates.
    QVector multiply_by_monomial(int m, const Monomial& mono, int d, const QVector& v) const;

private:
    std::shared_ptr<const GradedQuotient> q_;
    std::size_t n_ = 0, r_ = 0;
    std::vector<int> degrees_;
    std::vector<std::vector<Polynomial>> cji_;  // [j][i]
    // A deque keeps references to each degree's basis stable while higher
    // degrees are enumerated lazily under the lock.
    mutable std::shared_ptr<std::mutex> basis_lock_ = std::make_shared<std::mutex>();
    mutable std::deque<std::vector<TateBasisElement>> basis_;
    void ensure_basis(int m) const;
};

struct TateVerifyReport {
    bool d_squared_zero = true;
    bool exact = true;
    std::vector<std::string> violations;
    bool ok() const { return d_squared_zero && exact; }
};

/// Slice checks d^2 = 0 and exactness against the augmentation for all
/// internal degrees <= D.
TateVerifyReport verify_tate(const TateComplex& t, int D);

/// Closed-form Ext presentation of a complete intersection:
/// alphas in degree 1, betas in degree 2, relations
/// a_i a_k + a_k a_i + sum_j (sbar_j^{i,k} + sbar_j^{k,i}) b_j.
struct CIPresentation {
    std::size_t n = 0, r = 0;
    std::vector<int> relation_degrees;
    std::vector<std::vector<Polynomial>> s_data;  // s_j^{i,l} indexed [j][i*n+l]
    /// Constant images sbar_j^{i,l} in S/m.
    std::vector<MatrixQ> sbar;  // per j, an n x n matrix of rationals
    /// Per homological degree 0..P: dim of the normal-ordered basis
    /// {beta monomial x alpha subset}.
    std::vector<std::size_t> dims;
    bool cor_deg3_form = false;  // all c_j in m^3: relations purely exterior
    std::string convention = "product";

    /// Coefficients over the betas of the relation for the pair (i, k).
    QVector relation_constants(std::size_t i, std::size_t k) const;
};

CIPresentation ci_ext_presentation(const GradedQuotient& q, int P);

/// The modified complete intersection: adjoin one weight-1 variable per
/// generator and replace c_j by c_j - u_j^{deg c_j}.
struct ModifiedCI {
    RingPtr extended_ring;
    std::vector<Polynomial> modified_generators;
    std::shared_ptr<const GradedQuotient> quotient;
    CiReport ci;
    CIPresentation presentation;
    std::vector<std::string> new_variables;
};

ModifiedCI modified_ci(const RingPtr& ring, const std::vector<Polynomial>& gens, int D, int P);

/// Target of the surjection from Ext: Q[b_1..b_r]<a_1..a_n> modulo the
/// Clifford relations carried by the s-data of the presentation itself.
struct QuotientTarget {
    std::size_t n = 0, r = 0;
    std::vector<MatrixQ> sbar;
    std::vector<std::size_t> dims;  // per degree 0..P
    bool tensor_form = false;       // degrees >= 3: Q[betas] (x) Lambda[alphas]
};

QuotientTarget quotient_target(const RingPtr& ring, const std::vector<Polynomial>& gens, int P);

struct LowerBoundReport {
    bool pass = false;
    int first_failure = -1;
    std::vector<std::size_t> ext_dims;
    std::vector<std::size_t> target_dims;
};

/// pass iff dim Ext^i >= target for every i <= P with certified rows.
LowerBoundReport verify_lower_bound(const FreeResolution& res,
                                    const std::vector<std::size_t>& target_dims);

/// Transport of the presentation classes into engine coordinates through a
/// comparison chain map between the minimal resolution and the CI resolution
/// (levels 1 and 2). Row j of betas gives the Ext^2 coordinates of b_j; row i
/// of alphas gives the Ext^1 coordinates of a_i.
struct TateEngineTransport {
    MatrixQ alphas;  // n x dim Ext^1
    MatrixQ betas;   // r x dim Ext^2
};

TateEngineTransport tate_engine_transport(const TateComplex& t, const FreeResolution& res);

}  // namespace c2ext
