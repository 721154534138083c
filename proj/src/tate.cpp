#include "c2ext/tate.hpp"

#include <algorithm>
#include <stdexcept>

namespace c2ext {

namespace {

/// Smallest-index variable dividing each monomial takes the quotient:
/// c_j = sum_i c_{j,i} t_i.
std::vector<Polynomial> decompose_c(const Polynomial& c, const RingPtr& ring) {
    std::size_t n = ring->size();
    std::vector<Polynomial> parts(n, Polynomial(ring));
    for (const auto& [m, coeff] : c.terms()) {
        std::size_t i = 0;
        while (i < n && m.exponents[i] == 0) ++i;
        if (i == n) throw std::invalid_argument("tate: generator with a constant term");
        Monomial rest = m;
        rest.exponents[i] -= 1;
        parts[i].add_term(rest, coeff);
    }
    return parts;
}

/// Two smallest variable indices i <= l of each monomial:
/// c_j = sum_{i,l} s_j^{i,l} t_i t_l. Entries with i > l stay zero.
std::vector<Polynomial> decompose_s(const Polynomial& c, const RingPtr& ring) {
    std::size_t n = ring->size();
    std::vector<Polynomial> s(n * n, Polynomial(ring));
    for (const auto& [m, coeff] : c.terms()) {
        if (m.total_exponent() < 2)
            throw std::invalid_argument("tate: generator has a degree-1 term in the variables");
        std::size_t i = 0;
        while (m.exponents[i] == 0) ++i;
        Monomial rest = m;
        rest.exponents[i] -= 1;
        std::size_t l = 0;
        while (rest.exponents[l] == 0) ++l;
        rest.exponents[l] -= 1;
        s[i * n + l].add_term(rest, coeff);
    }
    return s;
}

}  // namespace

TateComplex TateComplex::build(std::shared_ptr<const GradedQuotient> q) {
    CiReport ci = is_complete_intersection(*q);
    if (ci.verdict != CiVerdict::YesCertifiedToD)
        throw std::invalid_argument("tate: quotient is not CI-certified (" + ci.reason + ")");
    MinimalGenerators mg =
        minimal_generator_count(q->ring(), q->generators(), q->truncation());
    if (mg.total != q->generators().size() ||
        std::any_of(mg.redundant.begin(), mg.redundant.end(), [](bool b) { return b; }))
        throw std::invalid_argument("tate: supplied generators are not a minimal set");

    TateComplex t;
    t.q_ = std::move(q);
    t.n_ = t.q_->ring()->size();
    t.r_ = t.q_->generators().size();
    for (const Polynomial& c : t.q_->generators()) {
        t.degrees_.push_back(c.degree());
        t.cji_.push_back(decompose_c(c, t.q_->ring()));
    }
    return t;
}

TateComplex TateComplex::build_with_decomposition(std::shared_ptr<const GradedQuotient> q,
                                                  std::vector<std::vector<Polynomial>> cji) {
    TateComplex t;
    t.q_ = std::move(q);
    t.n_ = t.q_->ring()->size();
    t.r_ = t.q_->generators().size();
    for (const Polynomial& c : t.q_->generators()) t.degrees_.push_back(c.degree());
    t.cji_ = std::move(cji);
    return t;
}

const Polynomial& TateComplex::c_decomposition(std::size_t j, std::size_t i) const {
    return cji_[j][i];
}

void TateComplex::ensure_basis(int m) const {
    std::lock_guard<std::mutex> guard(*basis_lock_);
    while (basis_.size() <= static_cast<std::size_t>(m)) {
        int hom = static_cast<int>(basis_.size());
        std::vector<TateBasisElement> out;
        std::vector<int> s(r_, 0);
        // Enumerate s-exponent vectors with 2*|s| <= hom (lex ascending),
        // then square-free t-sets of the remaining homological degree.
        auto rec_s = [&](auto&& self, std::size_t j, int budget) -> void {
            if (j == r_) {
                int tsize = budget;
                if (tsize > static_cast<int>(n_)) return;
                std::vector<std::size_t> comb;
                auto rec_t = [&](auto&& tself, std::size_t start, int remaining) -> void {
                    if (remaining == 0) {
                        TateBasisElement b;
                        b.s_exponents = s;
                        b.t_set = comb;
                        b.homological_degree = hom;
                        b.internal_degree = 0;
                        for (std::size_t jj = 0; jj < r_; ++jj)
                            b.internal_degree += s[jj] * degrees_[jj];
                        for (std::size_t i : comb)
                            b.internal_degree += q_->ring()->weight(i);
                        out.push_back(std::move(b));
                        return;
                    }
                    for (std::size_t i = start; i + static_cast<std::size_t>(remaining) <= n_;
                         ++i) {
                        comb.push_back(i);
                        tself(tself, i + 1, remaining - 1);
                        comb.pop_back();
                    }
                };
                rec_t(rec_t, 0, tsize);
                return;
            }
            for (int a = 0; 2 * a <= budget; ++a) {
                s[j] = a;
                self(self, j + 1, budget - 2 * a);
            }
            s[j] = 0;
        };
        rec_s(rec_s, 0, hom);
        basis_.push_back(std::move(out));
    }
}

std::size_t TateComplex::rank(int m) const {
    if (m < 0) return 0;
    ensure_basis(m);
    return basis_[static_cast<std::size_t>(m)].size();
}

const std::vector<TateBasisElement>& TateComplex::basis(int m) const {
    ensure_basis(m);
    return basis_[static_cast<std::size_t>(m)];
}

std::size_t TateComplex::slice_dim(int m, int d) const {
    if (m < 0) return 0;
    std::size_t total = 0;
    for (const TateBasisElement& b : basis(m)) {
        int deg = d - b.internal_degree;
        if (deg >= 0 && deg <= q_->truncation()) total += q_->dim(deg);
    }
    return total;
}

std::vector<std::size_t> TateComplex::block_offsets(int m, int d) const {
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const TateBasisElement& b : basis(m)) {
        offsets.push_back(total);
        int deg = d - b.internal_degree;
        if (deg >= 0 && deg <= q_->truncation()) total += q_->dim(deg);
    }
    return offsets;
}

MatrixQ TateComplex::differential(int m, int d) const {
    const std::vector<TateBasisElement>& src = basis(m);
    const std::vector<TateBasisElement>& dst = basis(m - 1);
    std::vector<std::size_t> dst_off = block_offsets(m - 1, d);
    MatrixQ out(slice_dim(m - 1, d), slice_dim(m, d));

    // Index of each target basis element for sign-tracked insertion.
    auto find_dst = [&](const std::vector<int>& s, const std::vector<std::size_t>& tset) {
        for (std::size_t k = 0; k < dst.size(); ++k)
            if (dst[k].s_exponents == s && dst[k].t_set == tset) return k;
        throw std::logic_error("tate: missing target basis element");
    };

    std::size_t col = 0;
    for (const TateBasisElement& b : src) {
        int mu_deg = d - b.internal_degree;
        if (mu_deg < 0 || q_->dim(mu_deg) == 0) continue;
        for (const Monomial& mu : q_->standard_monomials(mu_deg)) {
            Polynomial mu_poly = Polynomial::term(q_->ring(), mu, Rational(1));
            // dS_j factors: a_j * c_{j,i} * (T_i ^ T^E).
            for (std::size_t j = 0; j < r_; ++j) {
                if (b.s_exponents[static_cast<std::size_t>(j)] == 0) continue;
                std::vector<int> s1 = b.s_exponents;
                int aj = s1[j];
                s1[j] -= 1;
                for (std::size_t i = 0; i < n_; ++i) {
                    if (cji_[j][i].is_zero()) continue;
                    if (std::find(b.t_set.begin(), b.t_set.end(), i) != b.t_set.end()) continue;
                    int sign = 1;
                    std::vector<std::size_t> tset = b.t_set;
                    std::size_t pos = 0;
                    while (pos < tset.size() && tset[pos] < i) ++pos;
                    if (pos % 2 != 0) sign = -sign;
                    tset.insert(tset.begin() + static_cast<std::ptrdiff_t>(pos), i);
                    std::size_t k = find_dst(s1, tset);
                    Polynomial prod = mu_poly * cji_[j][i] * Rational(aj * sign);
                    QVector coords = q_->normal_form(prod);
                    for (std::size_t ri = 0; ri < coords.size(); ++ri)
                        if (coords[ri] != 0) out.at(dst_off[k] + ri, col) += coords[ri];
                }
            }
            // dT terms: alternating removal from the exterior part.
            for (std::size_t pos = 0; pos < b.t_set.size(); ++pos) {
                int sign = (pos % 2 == 0) ? 1 : -1;
                std::vector<std::size_t> tset = b.t_set;
                std::size_t var = tset[pos];
                tset.erase(tset.begin() + static_cast<std::ptrdiff_t>(pos));
                std::size_t k = find_dst(b.s_exponents, tset);
                Polynomial prod =
                    mu_poly * Polynomial::variable(q_->ring(), var) * Rational(sign);
                QVector coords = q_->normal_form(prod);
                for (std::size_t ri = 0; ri < coords.size(); ++ri)
                    if (coords[ri] != 0) out.at(dst_off[k] + ri, col) += coords[ri];
            }
            ++col;
        }
    }
    return out;
}

QVector TateComplex::multiply_by_monomial(int m, const Monomial& mono, int d,
                                          const QVector& v) const {
    int shift = weighted_degree(mono, *q_->ring());
    QVector out(slice_dim(m, d + shift), Rational(0));
    std::vector<std::size_t> src_off = block_offsets(m, d);
    std::vector<std::size_t> dst_off = block_offsets(m, d + shift);
    const auto& bs = basis(m);
    for (std::size_t k = 0; k < bs.size(); ++k) {
        int deg = d - bs[k].internal_degree;
        if (deg < 0 || q_->dim(deg) == 0) continue;
        QVector block(v.begin() + static_cast<std::ptrdiff_t>(src_off[k]),
                      v.begin() + static_cast<std::ptrdiff_t>(src_off[k] + q_->dim(deg)));
        QVector moved = q_->multiply_by_monomial(mono, deg, block);
        for (std::size_t ri = 0; ri < moved.size(); ++ri) out[dst_off[k] + ri] = moved[ri];
    }
    return out;
}

TateVerifyReport verify_tate(const TateComplex& t, int D) {
    TateVerifyReport report;
    if (D > t.base().truncation())
        throw std::invalid_argument("verify_tate: D exceeds quotient truncation");
    // Slices vanish once the minimal internal degree outgrows D.
    int m_max = 1;
    while (true) {
        int min_int = -1;
        for (const TateBasisElement& b : t.basis(m_max))
            if (min_int < 0 || b.internal_degree < min_int) min_int = b.internal_degree;
        if (min_int < 0 || min_int > D) break;
        ++m_max;
    }
    for (int d = 1; d <= D; ++d) {
        if (rank(t.differential(1, d)) != t.base().dim(d)) {
            report.exact = false;
            report.violations.push_back("augmentation not exact at degree " + std::to_string(d));
        }
    }
    for (int m = 1; m <= m_max; ++m) {
        for (int d = 0; d <= D; ++d) {
            MatrixQ dm = t.differential(m, d);
            if (m >= 2) {
                MatrixQ above = t.differential(m - 1, d);
                if (!matmul(above, dm).is_zero()) {
                    report.d_squared_zero = false;
                    report.violations.push_back("d^2 != 0 at homological degree " +
                                                std::to_string(m) + ", internal degree " +
                                                std::to_string(d));
                }
            }
            std::size_t dim = t.slice_dim(m, d);
            std::size_t r1 = rank(dm);
            std::size_t r2 = rank(t.differential(m + 1, d));
            if (r2 != dim - r1) {
                report.exact = false;
                report.violations.push_back("homology nonzero at homological degree " +
                                            std::to_string(m) + ", internal degree " +
                                            std::to_string(d));
            }
        }
    }
    return report;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

std::vector<std::size_t> presentation_dims(std::size_t n, std::size_t r, int P) {
    std::vector<std::size_t> dims;
    for (int m = 0; m <= P; ++m) {
        std::size_t total = 0;
        for (int a = 0; 2 * a <= m; ++a) {
            std::size_t b = static_cast<std::size_t>(m - 2 * a);
            total += binomial(r - 1 + static_cast<std::size_t>(a), static_cast<std::size_t>(a)) *
                     binomial(n, b);
        }
        dims.push_back(total);
    }
    return dims;
}

std::vector<MatrixQ> sbar_from_gens(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::size_t n = ring->size();
    std::vector<MatrixQ> sbar;
    Monomial unit = Monomial::one(n);
    for (const Polynomial& c : gens) {
        std::vector<Polynomial> s = decompose_s(c, ring);
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) m.at(i, l) = s[i * n + l].coefficient(unit);
        sbar.push_back(std::move(m));
    }
    return sbar;
}

}  // namespace

QVector CIPresentation::relation_constants(std::size_t i, std::size_t k) const {
    QVector out(r, Rational(0));
    for (std::size_t j = 0; j < r; ++j)
        out[j] = sbar[j].at(i, k) + sbar[j].at(k, i);
    return out;
}

CIPresentation ci_ext_presentation(const GradedQuotient& q, int P) {
    CiReport ci = is_complete_intersection(q);
    if (ci.verdict != CiVerdict::YesCertifiedToD)
        throw std::invalid_argument("ci_ext_presentation: quotient is not CI-certified");
    CIPresentation pres;
    pres.n = q.ring()->size();
    pres.r = q.generators().size();
    bool all_deg3 = true;
    for (const Polynomial& c : q.generators()) {
        pres.relation_degrees.push_back(c.degree());
        pres.s_data.push_back(decompose_s(c, q.ring()));
        if (!c.in_power_of_irrelevant_ideal(3)) all_deg3 = false;
    }
    pres.sbar = sbar_from_gens(q.ring(), q.generators());
    pres.dims = presentation_dims(pres.n, pres.r, P);
    pres.cor_deg3_form = all_deg3;
    return pres;
}

ModifiedCI modified_ci(const RingPtr& ring, const std::vector<Polynomial>& gens, int D, int P) {
    if (gens.empty()) throw std::invalid_argument("modified_ci: no generators");
    int max_degree = 0;
    for (const Polynomial& g : gens) {
        if (!g.is_homogeneous() || g.degree() < 2)
            throw std::invalid_argument("modified_ci: generators must be homogeneous of degree >= 2");
        max_degree = std::max(max_degree, g.degree());
    }
    MinimalGenerators mg = minimal_generator_count(ring, gens, max_degree);
    if (mg.total != gens.size() ||
        std::any_of(mg.redundant.begin(), mg.redundant.end(), [](bool b) { return b; }))
        throw std::invalid_argument("modified_ci: generators are not a minimal set");

    ModifiedCI out;
    std::vector<RingSpec::Variable> vars = ring->variables();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        std::string name = "u" + std::to_string(j + 1);
        while (std::any_of(vars.begin(), vars.end(),
                           [&](const RingSpec::Variable& v) { return v.name == name; }))
            name = "_" + name;
        out.new_variables.push_back(name);
        vars.push_back({name, 1});
    }
    out.extended_ring = make_ring(std::move(vars));

    std::size_t n = ring->size();
    for (std::size_t j = 0; j < gens.size(); ++j) {
        Polynomial mapped(out.extended_ring);
        for (const auto& [m, c] : gens[j].terms()) {
            Monomial ext = Monomial::one(out.extended_ring->size());
            for (std::size_t i = 0; i < n; ++i) ext.exponents[i] = m.exponents[i];
            mapped.add_term(ext, c);
        }
        Monomial power = Monomial::one(out.extended_ring->size());
        power.exponents[n + j] = gens[j].degree();
        mapped.add_term(power, Rational(-1));
        out.modified_generators.push_back(std::move(mapped));
    }
    out.quotient = std::make_shared<const GradedQuotient>(
        GradedQuotient::build(out.extended_ring, out.modified_generators, D));
    out.ci = is_complete_intersection(*out.quotient);
    out.presentation = ci_ext_presentation(*out.quotient, P);
    return out;
}

QuotientTarget quotient_target(const RingPtr& ring, const std::vector<Polynomial>& gens, int P) {
    if (gens.empty()) throw std::invalid_argument("quotient_target: no generators");
    int max_degree = 0;
    for (const Polynomial& g : gens) {
        if (!g.is_homogeneous() || g.degree() < 2)
            throw std::invalid_argument(
                "quotient_target: generators must be homogeneous of degree >= 2");
        max_degree = std::max(max_degree, g.degree());
    }
    MinimalGenerators mg = minimal_generator_count(ring, gens, max_degree);
    if (mg.total != gens.size() ||
        std::any_of(mg.redundant.begin(), mg.redundant.end(), [](bool b) { return b; }))
        throw std::invalid_argument("quotient_target: generators are not a minimal set");
    QuotientTarget out;
    out.n = ring->size();
    out.r = gens.size();
    out.sbar = sbar_from_gens(ring, gens);
    out.dims = presentation_dims(out.n, out.r, P);
    out.tensor_form = std::all_of(gens.begin(), gens.end(), [](const Polynomial& g) {
        return g.in_power_of_irrelevant_ideal(3);
    });
    return out;
}

LowerBoundReport verify_lower_bound(const FreeResolution& res,
                                    const std::vector<std::size_t>& target_dims) {
    LowerBoundReport report;
    report.target_dims = target_dims;
    report.pass = true;
    for (int i = 0; i <= res.homological_bound() &&
                    i < static_cast<int>(target_dims.size());
         ++i) {
        std::size_t beta = res.betti_total(i);
        report.ext_dims.push_back(beta);
        if (beta < target_dims[static_cast<std::size_t>(i)]) {
            report.pass = false;
            if (report.first_failure < 0) report.first_failure = i;
        }
    }
    return report;
}

TateEngineTransport tate_engine_transport(const TateComplex& t, const FreeResolution& res) {
    const GradedQuotient& q = t.base();
    TateEngineTransport out;
    const auto& gens1 = res.generators(1);
    const auto& gens2 = res.generators(2);

    // psi_1: solve the Tate differential for each engine level-1 generator.
    std::vector<QVector> psi1(gens1.size());
    for (std::size_t u = 0; u < gens1.size(); ++u) {
        auto x = solve(t.differential(1, gens1[u].degree), gens1[u].kernel_vector);
        if (!x) throw std::logic_error("transport: level-1 comparison failed");
        psi1[u] = std::move(*x);
    }
    // psi_2: push each engine kernel vector through psi_1, then solve.
    std::vector<QVector> psi2(gens2.size());
    for (std::size_t v = 0; v < gens2.size(); ++v) {
        int dv = gens2[v].degree;
        QVector rhs(t.slice_dim(1, dv), Rational(0));
        std::vector<std::size_t> offsets = res.block_offsets(1, dv);
        for (std::size_t u = 0; u < gens1.size(); ++u) {
            int mdeg = dv - gens1[u].degree;
            if (mdeg < 0) continue;
            const std::vector<Monomial>& monos = q.standard_monomials(mdeg);
            for (std::size_t mi = 0; mi < monos.size(); ++mi) {
                const Rational& c = gens2[v].kernel_vector[offsets[u] + mi];
                if (c == 0) continue;
                QVector moved =
                    t.multiply_by_monomial(1, monos[mi], gens1[u].degree, psi1[u]);
                for (std::size_t k = 0; k < moved.size(); ++k)
                    if (moved[k] != 0) rhs[k] += c * moved[k];
            }
        }
        auto x = solve(t.differential(2, dv), rhs);
        if (!x) throw std::logic_error("transport: level-2 comparison failed");
        psi2[v] = std::move(*x);
    }

    // Read off the dual classes: alpha_i = T_i^*, beta_j = S_j^*.
    std::size_t n = t.variable_count();
    std::size_t r = t.relation_count();
    out.alphas = MatrixQ(n, gens1.size());
    out.betas = MatrixQ(r, gens2.size());
    for (std::size_t u = 0; u < gens1.size(); ++u) {
        int du = gens1[u].degree;
        const auto& basis1 = t.basis(1);
        std::vector<std::size_t> off = t.block_offsets(1, du);
        for (std::size_t k = 0; k < basis1.size(); ++k) {
            if (basis1[k].internal_degree != du) continue;  // constant coordinate only
            std::size_t i = basis1[k].t_set[0];
            out.alphas.at(i, u) = psi1[u][off[k]];
        }
    }
    for (std::size_t v = 0; v < gens2.size(); ++v) {
        int dv = gens2[v].degree;
        const auto& basis2 = t.basis(2);
        std::vector<std::size_t> off = t.block_offsets(2, dv);
        for (std::size_t k = 0; k < basis2.size(); ++k) {
            if (basis2[k].internal_degree != dv) continue;
            if (basis2[k].t_set.size() != 0) continue;  // only the S_j blocks
            for (std::size_t j = 0; j < r; ++j) {
                if (basis2[k].s_exponents[j] == 1) {
                    out.betas.at(j, v) = psi2[v][off[k]];
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace c2ext
