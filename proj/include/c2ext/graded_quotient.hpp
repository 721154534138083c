#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "c2ext/polynomial.hpp"

namespace c2ext {

struct HilbertData {
    std::vector<std::size_t> dims;             // dim R_d for 0 <= d <= D
    std::vector<std::size_t> series_truncated; // Hilbert series coefficients (= dims)
};

/// Finitely presented graded quotient R = S/I with standard-monomial bases
/// per degree, exact up to the truncation degree D. Ideal membership and
/// quotient bases come from degreewise RREF over the monomial basis; no
/// Groebner bases anywhere.
class GradedQuotient {
public:
    static GradedQuotient build(RingPtr ring, std::vector<Polynomial> generators, int D);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    int truncation() const { return D_; }

    const std::vector<Monomial>& standard_monomials(int d) const;
    const std::vector<Monomial>& all_monomials(int d) const;
    std::size_t dim(int d) const;        // dim R_d
    std::size_t ideal_dim(int d) const;  // dim I_d
    HilbertData hilbert() const;

    /// Degree d with R_e = 0 for all e > d, when that is provable inside the
    /// truncation window (dims vanish on a trailing window of width
    /// max variable weight). Returns -1 when not provable.
    int certified_top_degree() const;

    /// Coefficient vector over standard_monomials(deg p); p - result lies in I.
    QVector normal_form(const Polynomial& p) const;
    Polynomial normal_form_poly(const Polynomial& p) const;

    /// Multiplication by variable `var`: R_d -> R_{d + weight(var)} on
    /// standard-monomial coordinates. Cached.
    const MatrixQ& times_variable(std::size_t var, int d) const;
    /// Multiplication by a standard monomial m: R_d -> R_{d + deg m}.
    QVector multiply_by_monomial(const Monomial& m, int d, const QVector& coords) const;

private:
    struct DegreeData {
        std::vector<Monomial> monos;       // all monomials, descending grevlex
        std::vector<Monomial> std_monos;   // non-pivot monomials, same order
        std::vector<std::size_t> std_idx;  // positions of std monomials in monos
        RrefSpan ideal{0};                 // RREF rows spanning I_d over monos
    };

    RingPtr ring_;
    std::vector<Polynomial> gens_;
    int D_ = 0;
    std::vector<DegreeData> by_degree_;
    // Lazy multiplication cache behind a shared lock so that const access
    // stays safe across threads (the value itself is immutable).
    mutable std::shared_ptr<std::mutex> cache_lock_ = std::make_shared<std::mutex>();
    mutable std::map<std::pair<std::size_t, int>, MatrixQ> var_mult_cache_;
};

/// Minimal homogeneous generator data for the ideal <gens> in degrees <= D.
struct MinimalGenerators {
    std::size_t total = 0;
    std::map<int, std::size_t> per_degree;  // degree -> count of minimal generators
    std::vector<bool> redundant;            // per supplied generator
};

MinimalGenerators minimal_generator_count(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens, int D);

enum class CiVerdict { YesCertifiedToD, No, Unknown };

struct CiReport {
    CiVerdict verdict = CiVerdict::Unknown;
    int certified_to = 0;
    std::string reason;
};

/// Complete-intersection certificate up to the truncation degree: "No" when
/// the minimal generator count exceeds the variable count or the Hilbert
/// series deviates from prod(1-t^{d_j}) / prod(1-t^{w_i}) below D.
CiReport is_complete_intersection(const GradedQuotient& q);

/// Coefficients 0..D of prod_j (1 - t^{gen_degrees[j]}) / prod_i (1 - t^{w_i}).
std::vector<Integer> ci_hilbert_series(const RingSpec& ring, const std::vector<int>& gen_degrees,
                                       int D);

}  // namespace c2ext
