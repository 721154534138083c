#include "c2ext/voa.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace c2ext {

namespace {

Polynomial linear_combination(const RingPtr& ring, const QVector& coeffs) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.add_term(Monomial::variable(ring->size(), i), coeffs[i]);
    return p;
}

Polynomial from_coords(const RingPtr& ring, const std::vector<Monomial>& monos,
                       const QVector& coords) {
    Polynomial p(ring);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i] != 0) p.add_term(monos[i], coords[i]);
    return p;
}

/// Derivation action of a Lie element on Sym(g): x . p = sum_i [x, g_i] dp/dg_i.
Polynomial act(const LieAlgebraBasis& lie, const RingPtr& ring, const QVector& x,
               const Polynomial& p) {
    Polynomial out(ring);
    for (std::size_t var = 0; var < ring->size(); ++var) {
        Polynomial dp = p.derivative(var);
        if (dp.is_zero()) continue;
        QVector evar(lie.dim(), Rational(0));
        evar[var] = 1;
        Polynomial image = linear_combination(ring, lie.bracket_of(x, evar));
        if (!image.is_zero()) out = out + dp * image;
    }
    return out;
}

}  // namespace

C2Presentation affine_c2(LieType type, int rank, int k) {
    if (k < 0) throw std::invalid_argument("affine_c2: level must be a nonnegative integer");
    LieAlgebraBasis lie = LieAlgebraBasis::create(type, rank);
    RootSystem rs = RootSystem::create(type, rank);
    Rational nk = weyl_nk_value(rs, k);
    if (denominator(nk) != 1) throw std::logic_error("affine_c2: N_k is not an integer");
    std::size_t expected = static_cast<std::size_t>(numerator(nk));

    std::vector<RingSpec::Variable> vars;
    for (const std::string& name : lie.names()) vars.push_back({name, 1});
    RingPtr ring = make_ring(std::move(vars));

    // e_theta^{k+1} and its adjoint orbit span inside Sym^{k+1}(g).
    Polynomial v = Polynomial::constant(ring, Rational(1));
    Polynomial etheta = linear_combination(ring, lie.highest_root_vector());
    for (int i = 0; i <= k; ++i) v = v * etheta;

    const std::vector<Monomial> monos = monomials_of_degree(*ring, k + 1);
    RrefSpan span(monos.size());
    std::vector<QVector> queue;
    QVector v0 = v.coefficients_on(monos);
    span.add(v0);
    queue.push_back(std::move(v0));
    std::size_t cap = monos.size();
    std::size_t processed = 0;
    while (processed < queue.size()) {
        if (queue.size() > cap + 1)
            throw std::logic_error("affine_c2: lowering failed to terminate");
        QVector current = queue[processed++];
        for (const QVector& f : lie.simple_lowerings()) {
            Polynomial lowered = act(lie, ring, f, from_coords(ring, monos, current));
            if (lowered.is_zero()) continue;
            QVector coords = lowered.coefficients_on(monos);
            if (span.add(coords)) queue.push_back(std::move(coords));
        }
    }
    if (span.dim() != expected)
        throw std::logic_error("affine_c2: orbit span dimension " + std::to_string(span.dim()) +
                               " does not match N_k = " + std::to_string(expected));

    C2Presentation pres;
    pres.ring = ring;
    for (const QVector& row : span.rows()) pres.generators.push_back(from_coords(ring, monos, row));
    pres.provenance =
        "affine " + to_string(type) + std::to_string(rank) + " level " + std::to_string(k);
    return pres;
}

C2Presentation virasoro_c2_minimal(int p, int q) {
    if (!(p >= 2 && q > p && std::gcd(p, q) == 1))
        throw std::invalid_argument("virasoro: requires gcd(p, q) = 1 and q > p >= 2");
    RingPtr ring = make_ring({{"x", 2}});
    int r = (p - 1) * (q - 1) / 2;
    Monomial xr = Monomial::one(1);
    xr.exponents[0] = r;
    C2Presentation pres;
    pres.ring = ring;
    pres.generators.push_back(Polynomial::term(ring, xr, Rational(1)));
    pres.provenance = "virasoro minimal (" + std::to_string(p) + "," + std::to_string(q) + ")";
    return pres;
}

C2Presentation virasoro_c2_generic() {
    C2Presentation pres;
    pres.ring = make_ring({{"x", 2}});
    pres.provenance = "virasoro generic";
    return pres;
}

Rational cpq(int p, int q) {
    if (!(p >= 2 && q > p && std::gcd(p, q) == 1))
        throw std::invalid_argument("cpq: requires gcd(p, q) = 1 and q > p >= 2");
    Rational diff(p - q);
    return Rational(1 - Rational(6) * diff * diff / Rational(p * q));
}

C2Presentation tensor_c2(const C2Presentation& a, const C2Presentation& b) {
    std::vector<RingSpec::Variable> vars = a.ring->variables();
    std::vector<std::string> renames;
    std::vector<std::string> b_names;
    for (const RingSpec::Variable& v : b.ring->variables()) {
        std::string name = v.name;
        while (std::any_of(vars.begin(), vars.end(),
                           [&](const RingSpec::Variable& w) { return w.name == name; })) {
            name += "_2";
        }
        if (name != v.name) renames.push_back(v.name + "->" + name);
        b_names.push_back(name);
        vars.push_back({name, v.weight});
    }
    RingPtr ring = make_ring(std::move(vars));
    std::size_t na = a.ring->size();

    C2Presentation out;
    out.ring = ring;
    for (const Polynomial& g : a.generators) {
        Polynomial mapped(ring);
        for (const auto& [m, c] : g.terms()) {
            Monomial ext = Monomial::one(ring->size());
            for (std::size_t i = 0; i < na; ++i) ext.exponents[i] = m.exponents[i];
            mapped.add_term(ext, c);
        }
        out.generators.push_back(std::move(mapped));
    }
    for (const Polynomial& g : b.generators) {
        Polynomial mapped(ring);
        for (const auto& [m, c] : g.terms()) {
            Monomial ext = Monomial::one(ring->size());
            for (std::size_t i = 0; i < b.ring->size(); ++i)
                ext.exponents[na + i] = m.exponents[i];
            mapped.add_term(ext, c);
        }
        out.generators.push_back(std::move(mapped));
    }
    out.provenance = "tensor(" + a.provenance + ", " + b.provenance + ")";
    if (!renames.empty()) {
        out.provenance += " renamed:";
        for (const std::string& r : renames) out.provenance += " " + r;
    }
    return out;
}

std::pair<C2Presentation, C2Presentation> direct_sum_c2(const C2Presentation& a,
                                                        const C2Presentation& b) {
    C2Presentation left = a;
    C2Presentation right = b;
    left.provenance = "sum-branch-1(" + a.provenance + ")";
    right.provenance = "sum-branch-2(" + b.provenance + ")";
    return {left, right};
}

}  // namespace c2ext
