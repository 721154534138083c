#include "c2ext/root_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "c2ext/matrix.hpp"

namespace c2ext {

LieType lie_type_from_string(const std::string& s) {
    if (s == "A" || s == "a") return LieType::A;
    if (s == "B" || s == "b") return LieType::B;
    if (s == "C" || s == "c") return LieType::C;
    if (s == "D" || s == "d") return LieType::D;
    if (s == "E" || s == "e") return LieType::E;
    if (s == "F" || s == "f") return LieType::F;
    if (s == "G" || s == "g") return LieType::G;
    throw std::invalid_argument("unknown Lie type '" + s + "'");
}

std::string to_string(LieType t) {
    switch (t) {
        case LieType::A: return "A";
        case LieType::B: return "B";
        case LieType::C: return "C";
        case LieType::D: return "D";
        case LieType::E: return "E";
        case LieType::F: return "F";
        case LieType::G: return "G";
    }
    return "?";
}

namespace {

QVector unit(std::size_t dim, std::size_t i, const Rational& c = Rational(1)) {
    QVector v(dim, Rational(0));
    v[i] = c;
    return v;
}

QVector add(const QVector& a, const QVector& b, const Rational& fb = Rational(1)) {
    QVector out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += fb * b[i];
    return out;
}

/// All roots of E8: +-e_i +- e_j and half-sum vectors with an even number of
/// minus signs.
std::vector<QVector> e8_roots() {
    std::vector<QVector> roots;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 1; j < 8; ++j)
            for (int si = -1; si <= 1; si += 2)
                for (int sj = -1; sj <= 1; sj += 2) {
                    QVector v(8, Rational(0));
                    v[i] = si;
                    v[j] = sj;
                    roots.push_back(std::move(v));
                }
    for (int mask = 0; mask < 256; ++mask) {
        int minus = 0;
        for (int b = 0; b < 8; ++b)
            if (mask & (1 << b)) ++minus;
        if (minus % 2 != 0) continue;
        QVector v(8);
        for (int b = 0; b < 8; ++b)
            v[static_cast<std::size_t>(b)] = (mask & (1 << b)) ? Rational(-1, 2) : Rational(1, 2);
        roots.push_back(std::move(v));
    }
    return roots;
}

std::vector<QVector> bourbaki_e_simples(int rank) {
    // Bourbaki numbering inside R^8.
    std::vector<QVector> simples;
    QVector a1(8, Rational(0));
    a1[0] = Rational(1, 2);
    a1[7] = Rational(1, 2);
    for (std::size_t i = 1; i <= 6; ++i) a1[i] = Rational(-1, 2);
    simples.push_back(a1);
    QVector a2(8, Rational(0));
    a2[0] = 1;
    a2[1] = 1;
    simples.push_back(a2);
    for (int k = 0; k < rank - 2; ++k) {
        QVector a(8, Rational(0));
        a[static_cast<std::size_t>(k)] = -1;
        a[static_cast<std::size_t>(k) + 1] = 1;
        simples.push_back(a);
    }
    return simples;
}

}  // namespace

Rational RootSystem::inner(const QVector& a, const QVector& b) const {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return Rational(s * scale_);
}

int RootSystem::dual_coxeter() const {
    Rational h = inner(rho_, theta_) + 1;
    if (denominator(h) != 1) throw std::logic_error("dual Coxeter number not an integer");
    return static_cast<int>(numerator(h));
}

long RootSystem::dimension() const {
    return rank_ + 2 * static_cast<long>(positive_.size());
}

RootSystem RootSystem::create(LieType type, int rank) {
    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    std::vector<QVector> roots;
    std::size_t dim = 0;

    switch (type) {
        case LieType::A: {
            if (rank < 1) throw std::invalid_argument("A_l needs rank >= 1");
            dim = static_cast<std::size_t>(rank) + 1;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (i != j) roots.push_back(add(unit(dim, i), unit(dim, j), Rational(-1)));
            for (int k = 0; k < rank; ++k)
                rs.simple_.push_back(add(unit(dim, static_cast<std::size_t>(k)),
                                         unit(dim, static_cast<std::size_t>(k) + 1), Rational(-1)));
            break;
        }
        case LieType::B: {
            if (rank < 2) throw std::invalid_argument("B_l needs rank >= 2");
            dim = static_cast<std::size_t>(rank);
            for (std::size_t i = 0; i < dim; ++i)
                for (int s = -1; s <= 1; s += 2) roots.push_back(unit(dim, i, Rational(s)));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j)
                    for (int si = -1; si <= 1; si += 2)
                        for (int sj = -1; sj <= 1; sj += 2)
                            roots.push_back(add(unit(dim, i, Rational(si)), unit(dim, j),
                                                Rational(sj)));
            for (int k = 0; k + 1 < rank; ++k)
                rs.simple_.push_back(add(unit(dim, static_cast<std::size_t>(k)),
                                         unit(dim, static_cast<std::size_t>(k) + 1), Rational(-1)));
            rs.simple_.push_back(unit(dim, dim - 1));
            break;
        }
        case LieType::C: {
            if (rank < 2) throw std::invalid_argument("C_l needs rank >= 2");
            dim = static_cast<std::size_t>(rank);
            rs.scale_ = Rational(1, 2);  // long roots 2 e_i get squared length 2
            for (std::size_t i = 0; i < dim; ++i)
                for (int s = -1; s <= 1; s += 2) roots.push_back(unit(dim, i, Rational(2 * s)));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j)
                    for (int si = -1; si <= 1; si += 2)
                        for (int sj = -1; sj <= 1; sj += 2)
                            roots.push_back(add(unit(dim, i, Rational(si)), unit(dim, j),
                                                Rational(sj)));
            for (int k = 0; k + 1 < rank; ++k)
                rs.simple_.push_back(add(unit(dim, static_cast<std::size_t>(k)),
                                         unit(dim, static_cast<std::size_t>(k) + 1), Rational(-1)));
            rs.simple_.push_back(unit(dim, dim - 1, Rational(2)));
            break;
        }
        case LieType::D: {
            if (rank < 3) throw std::invalid_argument("D_l needs rank >= 3");
            dim = static_cast<std::size_t>(rank);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j)
                    for (int si = -1; si <= 1; si += 2)
                        for (int sj = -1; sj <= 1; sj += 2)
                            roots.push_back(add(unit(dim, i, Rational(si)), unit(dim, j),
                                                Rational(sj)));
            for (int k = 0; k + 1 < rank; ++k)
                rs.simple_.push_back(add(unit(dim, static_cast<std::size_t>(k)),
                                         unit(dim, static_cast<std::size_t>(k) + 1), Rational(-1)));
            rs.simple_.push_back(add(unit(dim, dim - 2), unit(dim, dim - 1)));
            break;
        }
        case LieType::E: {
            if (rank < 6 || rank > 8) throw std::invalid_argument("E_l needs rank 6, 7 or 8");
            dim = 8;
            rs.simple_ = bourbaki_e_simples(rank);
            // Keep the E8 roots lying in the span of the chosen simples.
            MatrixQ basis(8, rs.simple_.size());
            for (std::size_t c = 0; c < rs.simple_.size(); ++c)
                for (std::size_t rix = 0; rix < 8; ++rix)
                    basis.at(rix, c) = rs.simple_[c][rix];
            for (QVector& v : e8_roots()) {
                if (rank == 8 || solve(basis, v).has_value()) roots.push_back(std::move(v));
            }
            break;
        }
        case LieType::F: {
            if (rank != 4) throw std::invalid_argument("F needs rank 4");
            dim = 4;
            for (std::size_t i = 0; i < dim; ++i)
                for (int s = -1; s <= 1; s += 2) roots.push_back(unit(dim, i, Rational(s)));
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j)
                    for (int si = -1; si <= 1; si += 2)
                        for (int sj = -1; sj <= 1; sj += 2)
                            roots.push_back(add(unit(dim, i, Rational(si)), unit(dim, j),
                                                Rational(sj)));
            for (int mask = 0; mask < 16; ++mask) {
                QVector v(4);
                for (int b = 0; b < 4; ++b)
                    v[static_cast<std::size_t>(b)] =
                        (mask & (1 << b)) ? Rational(-1, 2) : Rational(1, 2);
                roots.push_back(std::move(v));
            }
            rs.simple_.push_back(add(unit(dim, 1), unit(dim, 2), Rational(-1)));
            rs.simple_.push_back(add(unit(dim, 2), unit(dim, 3), Rational(-1)));
            rs.simple_.push_back(unit(dim, 3));
            QVector a4(4);
            a4[0] = Rational(1, 2);
            a4[1] = Rational(-1, 2);
            a4[2] = Rational(-1, 2);
            a4[3] = Rational(-1, 2);
            rs.simple_.push_back(std::move(a4));
            break;
        }
        case LieType::G: {
            if (rank != 2) throw std::invalid_argument("G needs rank 2");
            dim = 3;
            // Realization in the sum-zero hyperplane: long roots e_i - e_j,
            // short roots +-(2e_i - e_j - e_k)/3.
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j) {
                    if (i == j) continue;
                    roots.push_back(add(unit(dim, i), unit(dim, j), Rational(-1)));
                }
            for (std::size_t i = 0; i < 3; ++i) {
                QVector v(3, Rational(-1, 3));
                v[i] = Rational(2, 3);
                roots.push_back(v);
                for (Rational& c : v) c = -c;
                roots.push_back(std::move(v));
            }
            QVector a1(3, Rational(0));
            a1[0] = Rational(2, 3);
            a1[1] = Rational(-1, 3);
            a1[2] = Rational(-1, 3);
            rs.simple_.push_back(std::move(a1));
            rs.simple_.push_back(add(unit(dim, 1), unit(dim, 0), Rational(-1)));
            break;
        }
    }

    // Positivity: nonnegative coordinates in the simple basis.
    MatrixQ basis(dim, rs.simple_.size());
    for (std::size_t c = 0; c < rs.simple_.size(); ++c)
        for (std::size_t rix = 0; rix < dim; ++rix) basis.at(rix, c) = rs.simple_[c][rix];
    QVector max_height_root;
    Rational max_height(-1);
    for (const QVector& root : roots) {
        auto coords = solve(basis, root);
        if (!coords) throw std::logic_error("root outside simple-root span");
        bool nonneg = std::all_of(coords->begin(), coords->end(),
                                  [](const Rational& c) { return c >= 0; });
        bool nonpos = std::all_of(coords->begin(), coords->end(),
                                  [](const Rational& c) { return c <= 0; });
        if (!nonneg && !nonpos) throw std::logic_error("root not signed in simple basis");
        if (!nonneg) continue;
        rs.positive_.push_back(root);
        Rational height(0);
        for (const Rational& c : *coords) height += c;
        if (height > max_height) {
            max_height = height;
            max_height_root = root;
        }
    }
    rs.theta_ = max_height_root;
    rs.rho_ = QVector(dim, Rational(0));
    for (const QVector& root : rs.positive_)
        for (std::size_t i = 0; i < dim; ++i) rs.rho_[i] += root[i] / 2;

    if (rs.inner(rs.theta_, rs.theta_) != 2)
        throw std::logic_error("highest root is not long after normalization");
    return rs;
}

Rational weyl_nk_value(const RootSystem& rs, int k) {
    if (k < 0) throw std::invalid_argument("weyl_nk: k must be a nonnegative integer");
    Rational prod(1);
    for (const QVector& alpha : rs.positive_roots()) {
        Rational ratio = rs.inner(rs.highest_root(), alpha) / rs.inner(rs.rho(), alpha);
        prod *= Rational(ratio * (k + 1) + 1);
    }
    return prod;
}

std::vector<Rational> weyl_nk_polynomial(const RootSystem& rs) {
    std::vector<Rational> poly{Rational(1)};
    for (const QVector& alpha : rs.positive_roots()) {
        Rational ratio = rs.inner(rs.highest_root(), alpha) / rs.inner(rs.rho(), alpha);
        if (ratio == 0) continue;
        // Multiply by (ratio * k + ratio + 1).
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i] * (ratio + 1);
            next[i + 1] += poly[i] * ratio;
        }
        poly = std::move(next);
    }
    return poly;
}

Rational evaluate_polynomial(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational out(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) out = Rational(out * x + coeffs[i]);
    return out;
}

int nk_degree(const RootSystem& rs) {
    int count = 0;
    for (const QVector& alpha : rs.positive_roots())
        if (rs.inner(rs.highest_root(), alpha) != 0) ++count;

    // Published table of deg N_k per type.
    int table = -1;
    int l = rs.rank();
    switch (rs.type()) {
        case LieType::A: table = 2 * l - 1; break;
        case LieType::B: table = 4 * l - 5; break;
        case LieType::C: table = 2 * l - 1; break;
        case LieType::D: table = 4 * l - 7; break;
        case LieType::E: table = (l == 6) ? 21 : (l == 7) ? 33 : 57; break;
        case LieType::F: table = 15; break;
        case LieType::G: table = 5; break;
    }
    int via_coxeter = 2 * rs.dual_coxeter() - 3;
    if (count != table || count != via_coxeter)
        throw std::logic_error("nk_degree: count " + std::to_string(count) + ", table " +
                               std::to_string(table) + ", 2h^v-3 " +
                               std::to_string(via_coxeter) + " disagree");
    return count;
}

}  // namespace c2ext
