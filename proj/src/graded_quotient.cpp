#include "c2ext/graded_quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace c2ext {

GradedQuotient GradedQuotient::build(RingPtr ring, std::vector<Polynomial> generators, int D) {
    if (!ring) throw std::invalid_argument("build: null ring");
    int max_gen_degree = 0;
    for (const Polynomial& g : generators) {
        if (g.is_zero()) throw std::invalid_argument("build: zero generator");
        if (&*g.ring() != &*ring && !(*g.ring() == *ring))
            throw std::invalid_argument("build: generator from a different ring");
        if (!g.is_homogeneous()) throw std::invalid_argument("build: non-homogeneous generator");
        int d = g.degree();
        if (d < 1) throw std::invalid_argument("build: generator of degree < 1");
        max_gen_degree = std::max(max_gen_degree, d);
    }
    if (D < max_gen_degree)
        throw std::invalid_argument("build: truncation degree below max generator degree");
    if (D < 0) throw std::invalid_argument("build: negative truncation degree");

    GradedQuotient q;
    q.ring_ = ring;
    q.gens_ = std::move(generators);
    q.D_ = D;
    q.by_degree_.resize(static_cast<std::size_t>(D) + 1);

    for (int d = 0; d <= D; ++d) {
        DegreeData& data = q.by_degree_[static_cast<std::size_t>(d)];
        data.monos = monomials_of_degree(*ring, d);
        data.ideal = RrefSpan(data.monos.size());
        // I_d = span{ m * c_j : deg m + deg c_j = d }.
        for (const Polynomial& g : q.gens_) {
            int e = g.degree();
            if (e > d) continue;
            for (const Monomial& m : monomials_of_degree(*ring, d - e)) {
                Polynomial prod = g * Polynomial::term(ring, m, Rational(1));
                data.ideal.add(prod.coefficients_on(data.monos));
            }
        }
        std::vector<bool> is_pivot(data.monos.size(), false);
        for (std::size_t p : data.ideal.pivots()) is_pivot[p] = true;
        for (std::size_t i = 0; i < data.monos.size(); ++i) {
            if (!is_pivot[i]) {
                data.std_monos.push_back(data.monos[i]);
                data.std_idx.push_back(i);
            }
        }
    }
    if (q.dim(0) != 1) throw std::invalid_argument("build: R_0 must be Q");
    return q;
}

const std::vector<Monomial>& GradedQuotient::standard_monomials(int d) const {
    if (d < 0 || d > D_) throw std::out_of_range("degree exceeds truncation");
    return by_degree_[static_cast<std::size_t>(d)].std_monos;
}

const std::vector<Monomial>& GradedQuotient::all_monomials(int d) const {
    if (d < 0 || d > D_) throw std::out_of_range("degree exceeds truncation");
    return by_degree_[static_cast<std::size_t>(d)].monos;
}

std::size_t GradedQuotient::dim(int d) const {
    if (d < 0) return 0;
    if (d > D_) throw std::out_of_range("degree exceeds truncation");
    return by_degree_[static_cast<std::size_t>(d)].std_monos.size();
}

std::size_t GradedQuotient::ideal_dim(int d) const {
    if (d < 0 || d > D_) throw std::out_of_range("degree exceeds truncation");
    return by_degree_[static_cast<std::size_t>(d)].ideal.dim();
}

HilbertData GradedQuotient::hilbert() const {
    HilbertData h;
    for (int d = 0; d <= D_; ++d) h.dims.push_back(dim(d));
    h.series_truncated = h.dims;
    return h;
}

int GradedQuotient::certified_top_degree() const {
    int w = ring_->max_weight();
    // Find the last nonzero dimension; require a zero window of width w after it.
    int top = -1;
    for (int d = 0; d <= D_; ++d)
        if (dim(d) != 0) top = d;
    if (top < 0) return -1;
    if (top + w > D_) return -1;
    for (int d = top + 1; d <= top + w; ++d)
        if (dim(d) != 0) return -1;
    return top;
}

QVector GradedQuotient::normal_form(const Polynomial& p) const {
    if (p.is_zero()) throw std::invalid_argument("normal_form: zero polynomial has no degree");
    if (!p.is_homogeneous()) throw std::invalid_argument("normal_form: non-homogeneous");
    int d = p.degree();
    if (d > D_) throw std::out_of_range("normal_form: degree exceeds truncation");
    const DegreeData& data = by_degree_[static_cast<std::size_t>(d)];
    QVector reduced = data.ideal.reduce(p.coefficients_on(data.monos));
    QVector out(data.std_monos.size());
    for (std::size_t k = 0; k < data.std_idx.size(); ++k) out[k] = reduced[data.std_idx[k]];
    return out;
}

Polynomial GradedQuotient::normal_form_poly(const Polynomial& p) const {
    if (p.is_zero()) return Polynomial(ring_);
    QVector v = normal_form(p);
    const std::vector<Monomial>& std_monos = standard_monomials(p.degree());
    Polynomial out(ring_);
    for (std::size_t k = 0; k < v.size(); ++k) out.add_term(std_monos[k], v[k]);
    return out;
}

const MatrixQ& GradedQuotient::times_variable(std::size_t var, int d) const {
    std::lock_guard<std::mutex> guard(*cache_lock_);
    auto key = std::make_pair(var, d);
    auto it = var_mult_cache_.find(key);
    if (it != var_mult_cache_.end()) return it->second;

    int target = d + ring_->weight(var);
    if (target > D_) throw std::out_of_range("times_variable: target degree exceeds truncation");
    const std::vector<Monomial>& source = standard_monomials(d);
    MatrixQ m(dim(target), source.size());
    Monomial tvar = Monomial::variable(ring_->size(), var);
    for (std::size_t j = 0; j < source.size(); ++j) {
        Polynomial prod = Polynomial::term(ring_, mono_mul(source[j], tvar), Rational(1));
        QVector col = normal_form(prod);
        for (std::size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
    }
    return var_mult_cache_.emplace(key, std::move(m)).first->second;
}

QVector GradedQuotient::multiply_by_monomial(const Monomial& m, int d, const QVector& coords) const {
    QVector current = coords;
    int deg = d;
    for (std::size_t var = 0; var < ring_->size(); ++var) {
        for (int rep = 0; rep < m.exponents[var]; ++rep) {
            current = matvec(times_variable(var, deg), current);
            deg += ring_->weight(var);
        }
    }
    return current;
}

MinimalGenerators minimal_generator_count(const RingPtr& ring,
                                          const std::vector<Polynomial>& gens, int D) {
    GradedQuotient q = GradedQuotient::build(ring, gens, D);
    MinimalGenerators out;
    out.redundant.assign(gens.size(), false);

    // dim I_d / (S_+ . I)_d per degree d <= D.
    for (int d = 1; d <= D; ++d) {
        const std::vector<Monomial>& monos = q.all_monomials(d);
        RrefSpan decomposable(monos.size());
        for (const Polynomial& g : gens) {
            int e = g.degree();
            if (e >= d) continue;  // strictly positive monomial multiplier
            for (const Monomial& m : monomials_of_degree(*ring, d - e)) {
                if (m.total_exponent() == 0) continue;
                Polynomial prod = g * Polynomial::term(ring, m, Rational(1));
                decomposable.add(prod.coefficients_on(monos));
            }
        }
        std::size_t count = q.ideal_dim(d) - decomposable.dim();
        if (count > 0) out.per_degree[d] = count;
        out.total += count;

        // A supplied generator of degree d is redundant when it lies in the
        // ideal generated by the others (degreewise membership).
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (gens[j].degree() != d) continue;
            RrefSpan others(monos.size());
            for (std::size_t l = 0; l < gens.size(); ++l) {
                if (l == j) continue;
                int e = gens[l].degree();
                if (e > d) continue;
                for (const Monomial& m : monomials_of_degree(*ring, d - e)) {
                    Polynomial prod = gens[l] * Polynomial::term(ring, m, Rational(1));
                    others.add(prod.coefficients_on(monos));
                }
            }
            if (others.contains(gens[j].coefficients_on(monos))) out.redundant[j] = true;
        }
    }
    return out;
}

std::vector<Integer> ci_hilbert_series(const RingSpec& ring, const std::vector<int>& gen_degrees,
                                       int D) {
    // Numerator prod (1 - t^{d_j}) as a dense polynomial truncated at D.
    std::vector<Integer> series(static_cast<std::size_t>(D) + 1, Integer(0));
    series[0] = 1;
    for (int d : gen_degrees) {
        std::vector<Integer> next(series.size(), Integer(0));
        for (std::size_t i = 0; i < series.size(); ++i) {
            if (series[i] == 0) continue;
            next[i] += series[i];
            if (i + static_cast<std::size_t>(d) < next.size())
                next[i + static_cast<std::size_t>(d)] -= series[i];
        }
        series = std::move(next);
    }
    // Divide by (1 - t^{w_i}): multiply by the geometric series.
    for (std::size_t v = 0; v < ring.size(); ++v) {
        int w = ring.weight(v);
        for (std::size_t i = static_cast<std::size_t>(w); i < series.size(); ++i)
            series[i] += series[i - static_cast<std::size_t>(w)];
    }
    return series;
}

CiReport is_complete_intersection(const GradedQuotient& q) {
    CiReport report;
    report.certified_to = q.truncation();

    MinimalGenerators mg = minimal_generator_count(q.ring(), q.generators(), q.truncation());
    std::vector<int> degrees;
    for (const auto& [d, count] : mg.per_degree)
        for (std::size_t k = 0; k < count; ++k) degrees.push_back(d);

    std::size_t n = q.ring()->size();
    if (degrees.size() > n) {
        report.verdict = CiVerdict::No;
        report.reason = "minimal generator count " + std::to_string(degrees.size()) +
                        " exceeds variable count " + std::to_string(n);
        return report;
    }
    std::vector<Integer> expected = ci_hilbert_series(*q.ring(), degrees, q.truncation());
    for (int d = 0; d <= q.truncation(); ++d) {
        if (expected[static_cast<std::size_t>(d)] != Integer(q.dim(d))) {
            report.verdict = CiVerdict::No;
            report.reason = "Hilbert series deviates from the complete-intersection form at degree " +
                            std::to_string(d);
            return report;
        }
    }
    report.verdict = CiVerdict::YesCertifiedToD;
    report.reason = "Hilbert series matches the complete-intersection form for all degrees <= " +
                    std::to_string(q.truncation());
    return report;
}

}  // namespace c2ext
