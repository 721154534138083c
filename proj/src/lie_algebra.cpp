#include "c2ext/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace c2ext {

namespace {

using Mat = std::vector<QVector>;  // square matrix as rows

Mat zeros(std::size_t n) { return Mat(n, QVector(n, Rational(0))); }

Mat commutator(const Mat& a, const Mat& b) {
    std::size_t n = a.size();
    Mat c = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            for (std::size_t j = 0; j < n; ++j) {
                if (a[i][j] != 0 && b[j][k] != 0) c[i][k] += a[i][j] * b[j][k];
                if (b[i][j] != 0 && a[j][k] != 0) c[i][k] -= b[i][j] * a[j][k];
            }
        }
    return c;
}

QVector flatten(const Mat& m) {
    QVector v;
    for (const QVector& row : m) v.insert(v.end(), row.begin(), row.end());
    return v;
}

Mat unflatten(const QVector& v, std::size_t n) {
    Mat m = zeros(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = v[i * n + j];
    return m;
}

Mat elementary(std::size_t n, std::size_t i, std::size_t j, const Rational& c = Rational(1)) {
    Mat m = zeros(n);
    m[i][j] = c;
    return m;
}

Mat add_mats(const Mat& a, const Mat& b, const Rational& fb = Rational(1)) {
    Mat c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) c[i][j] += fb * b[i][j];
    return c;
}

/// Zorn vector-matrix model of the split octonions: elements
/// (a, v; w, b) with a, b scalars and v, w in Q^3,
/// (a,v;w,b)(a',v';w',b') =
///   (aa' + v.w', av' + b'v - w x w'; a'w + bw' + v x v', bb' + w.v').
/// Basis order: u, u', v1, v2, v3, w1, w2, w3.
struct Octonions {
    // mult[i][j] = coordinates of x_i * x_j
    std::vector<std::vector<QVector>> mult;

    Octonions() {
        auto cross = [](const QVector& a, const QVector& b) {
            QVector c(3, Rational(0));
            c[0] = a[1] * b[2] - a[2] * b[1];
            c[1] = a[2] * b[0] - a[0] * b[2];
            c[2] = a[0] * b[1] - a[1] * b[0];
            return c;
        };
        auto dot = [](const QVector& a, const QVector& b) {
            Rational s(0);
            for (int i = 0; i < 3; ++i) s += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(i)];
            return s;
        };
        auto split = [](std::size_t idx) {
            // (a, v, w, b) parts of a basis element
            Rational a(idx == 0 ? 1 : 0), b(idx == 1 ? 1 : 0);
            QVector v(3, Rational(0)), w(3, Rational(0));
            if (idx >= 2 && idx <= 4) v[idx - 2] = 1;
            if (idx >= 5) w[idx - 5] = 1;
            return std::make_tuple(a, v, w, b);
        };
        mult.assign(8, std::vector<QVector>(8));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                auto [a1, v1, w1, b1] = split(i);
                auto [a2, v2, w2, b2] = split(j);
                Rational pa = a1 * a2 + dot(v1, w2);
                Rational pb = b1 * b2 + dot(w1, v2);
                QVector pv(3, Rational(0)), pw(3, Rational(0));
                QVector wxw = cross(w1, w2), vxv = cross(v1, v2);
                for (std::size_t k = 0; k < 3; ++k) {
                    pv[k] = a1 * v2[k] + b2 * v1[k] - wxw[k];
                    pw[k] = a2 * w1[k] + b1 * w2[k] + vxv[k];
                }
                QVector out(8, Rational(0));
                out[0] = pa;
                out[1] = pb;
                for (std::size_t k = 0; k < 3; ++k) {
                    out[2 + k] = pv[k];
                    out[5 + k] = pw[k];
                }
                mult[i][j] = std::move(out);
            }
    }

    QVector multiply(const QVector& x, const QVector& y) const {
        QVector out(8, Rational(0));
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) {
                if (x[i] == 0 || y[j] == 0) continue;
                Rational f = x[i] * y[j];
                for (std::size_t k = 0; k < 8; ++k)
                    if (mult[i][j][k] != 0) out[k] += f * mult[i][j][k];
            }
        return out;
    }
};

/// Derivations of the split octonions: the split form of G2, dimension 14.
std::vector<Mat> octonion_derivations() {
    Octonions O;
    // Unknown D as a 64-vector, D[r*8+c]; equations D(x_i x_j) = D(x_i) x_j + x_i D(x_j).
    MatrixQ system(8 * 8 * 8, 64);
    std::size_t row = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const QVector& p = O.mult[i][j];
            for (std::size_t k = 0; k < 8; ++k) {
                // coefficient of D[k][m] from D(p): p[m]
                for (std::size_t m = 0; m < 8; ++m)
                    if (p[m] != 0) system.at(row, k * 8 + m) += p[m];
                // -(D e_i) x_j: -sum_m D[m][i] mult[m][j][k]
                for (std::size_t m = 0; m < 8; ++m)
                    if (O.mult[m][j][k] != 0) system.at(row, m * 8 + i) -= O.mult[m][j][k];
                // -x_i (D e_j): -sum_m D[m][j] mult[i][m][k]
                for (std::size_t m = 0; m < 8; ++m)
                    if (O.mult[i][m][k] != 0) system.at(row, m * 8 + j) -= O.mult[i][m][k];
                ++row;
            }
        }
    MatrixQ kernel = kernel_basis(system);
    if (kernel.cols() != 14)
        throw std::logic_error("octonion derivation algebra has dimension " +
                               std::to_string(kernel.cols()) + ", expected 14");
    std::vector<Mat> basis;
    for (std::size_t c = 0; c < kernel.cols(); ++c) basis.push_back(unflatten(kernel.column(c), 8));
    return basis;
}

/// sl3-torus derivation of the octonions: v -> Hv, w -> -H^T w.
Mat torus_derivation(const QVector& h_diag) {
    Mat m = zeros(8);
    for (std::size_t k = 0; k < 3; ++k) {
        m[2 + k][2 + k] = h_diag[k];
        m[5 + k][5 + k] = -h_diag[k];
    }
    return m;
}

}  // namespace

bool LieAlgebraBasis::supported(LieType type, int rank) {
    return (type == LieType::A && (rank == 1 || rank == 2)) ||
           ((type == LieType::B || type == LieType::C) && rank == 2) ||
           (type == LieType::G && rank == 2);
}

LieAlgebraBasis LieAlgebraBasis::create(LieType type, int rank) {
    if (!supported(type, rank))
        throw std::invalid_argument("concrete Lie data implemented for A1, A2, B2/C2, G2 only");

    std::vector<Mat> basis;
    std::vector<Mat> cartan;
    std::vector<std::string> names;

    if (type == LieType::A && rank == 1) {
        basis = {elementary(2, 0, 1),
                 add_mats(elementary(2, 0, 0), elementary(2, 1, 1), Rational(-1)),
                 elementary(2, 1, 0)};
        names = {"e", "h", "f"};
        cartan = {basis[1]};
    } else if (type == LieType::A && rank == 2) {
        basis = {elementary(3, 0, 1), elementary(3, 0, 2), elementary(3, 1, 2),
                 add_mats(elementary(3, 0, 0), elementary(3, 1, 1), Rational(-1)),
                 add_mats(elementary(3, 1, 1), elementary(3, 2, 2), Rational(-1)),
                 elementary(3, 1, 0), elementary(3, 2, 0), elementary(3, 2, 1)};
        cartan = {basis[3], basis[4]};
    } else if (type == LieType::B || type == LieType::C) {
        // sp4: blocks [[A, B], [C, -A^T]] with B, C symmetric.
        auto embed = [&](const Mat& A, const Mat& B, const Mat& C) {
            Mat m = zeros(4);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) {
                    m[i][j] = A[i][j];
                    m[i][2 + j] = B[i][j];
                    m[2 + i][j] = C[i][j];
                    m[2 + i][2 + j] = -A[j][i];
                }
            return m;
        };
        Mat z2 = zeros(2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                basis.push_back(embed(elementary(2, i, j), z2, z2));
        auto sym = [&](std::size_t i, std::size_t j) {
            Mat s = zeros(2);
            s[i][j] = 1;
            s[j][i] = 1;
            if (i == j) s[i][j] = 1;
            return s;
        };
        basis.push_back(embed(z2, sym(0, 0), z2));
        basis.push_back(embed(z2, sym(0, 1), z2));
        basis.push_back(embed(z2, sym(1, 1), z2));
        basis.push_back(embed(z2, z2, sym(0, 0)));
        basis.push_back(embed(z2, z2, sym(0, 1)));
        basis.push_back(embed(z2, z2, sym(1, 1)));
        cartan = {basis[0], basis[3]};  // diag(1,0), diag(0,1) in the A block
    } else {  // G2
        basis = octonion_derivations();
        QVector h1{Rational(1), Rational(-1), Rational(0)};
        QVector h2{Rational(0), Rational(1), Rational(-1)};
        cartan = {torus_derivation(h1), torus_derivation(h2)};
    }

    LieAlgebraBasis lie;
    lie.dim_ = basis.size();
    if (names.empty())
        for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("x" + std::to_string(i + 1));
    lie.names_ = std::move(names);

    // Express arbitrary matrices in the chosen basis.
    std::size_t msize = basis[0].size();
    MatrixQ basis_cols(msize * msize, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        QVector flat = flatten(basis[c]);
        for (std::size_t rix = 0; rix < flat.size(); ++rix) basis_cols.at(rix, c) = flat[rix];
    }
    auto express = [&](const Mat& m) {
        auto coords = solve(basis_cols, flatten(m));
        if (!coords) throw std::logic_error("lie: element outside the basis span");
        return *coords;
    };

    lie.table_.assign(lie.dim_, std::vector<QVector>(lie.dim_));
    for (std::size_t i = 0; i < lie.dim_; ++i)
        for (std::size_t j = 0; j < lie.dim_; ++j)
            lie.table_[i][j] = express(commutator(basis[i], basis[j]));
    lie.validate();

    std::vector<QVector> cartan_coords;
    for (const Mat& h : cartan) cartan_coords.push_back(express(h));
    lie.root_decomposition(cartan_coords);
    return lie;
}

QVector LieAlgebraBasis::bracket_of(const QVector& x, const QVector& y) const {
    QVector out(dim_, Rational(0));
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            const QVector& t = table_[i][j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (t[k] != 0) out[k] += f * t[k];
        }
    }
    return out;
}

MatrixQ LieAlgebraBasis::ad(const QVector& coeffs) const {
    MatrixQ m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        QVector ej(dim_, Rational(0));
        ej[j] = 1;
        QVector col = bracket_of(coeffs, ej);
        for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
    }
    return m;
}

void LieAlgebraBasis::validate() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (table_[i][j][k] != -table_[j][i][k])
                    throw std::logic_error("lie: antisymmetry violated");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) {
                QVector ei(dim_, Rational(0)), ej(dim_, Rational(0)), ek(dim_, Rational(0));
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                QVector sum = bracket_of(table_[i][j], ek);
                QVector t2 = bracket_of(table_[j][k], ei);
                QVector t3 = bracket_of(table_[k][i], ej);
                for (std::size_t m = 0; m < dim_; ++m) {
                    Rational total = sum[m] + t2[m] + t3[m];
                    if (total != 0) throw std::logic_error("lie: Jacobi identity violated");
                }
            }
}

void LieAlgebraBasis::root_decomposition(const std::vector<QVector>& cartan_coords) {
    std::size_t l = cartan_coords.size();
    std::vector<MatrixQ> ads;
    for (const QVector& h : cartan_coords) ads.push_back(ad(h));

    // Simultaneous integer eigenspaces over a small grid.
    std::map<std::vector<int>, std::vector<QVector>> spaces;
    std::vector<int> lambda(l, 0);
    std::size_t found = 0;
    auto scan = [&](auto&& self, std::size_t pos) -> void {
        if (pos == l) {
            MatrixQ stacked(dim_ * l, dim_);
            for (std::size_t a = 0; a < l; ++a)
                for (std::size_t i = 0; i < dim_; ++i)
                    for (std::size_t j = 0; j < dim_; ++j)
                        stacked.at(a * dim_ + i, j) =
                            ads[a].at(i, j) - ((i == j) ? Rational(lambda[a]) : Rational(0));
            MatrixQ ker = kernel_basis(stacked);
            if (ker.cols() > 0) {
                std::vector<QVector> vecs;
                for (std::size_t c = 0; c < ker.cols(); ++c) vecs.push_back(ker.column(c));
                found += vecs.size();
                spaces[lambda] = std::move(vecs);
            }
            return;
        }
        for (int v = -4; v <= 4; ++v) {
            lambda[pos] = v;
            self(self, pos + 1);
        }
    };
    scan(scan, 0);
    if (found != dim_) throw std::logic_error("lie: root decomposition incomplete");

    std::vector<int> zero(l, 0);
    if (spaces.count(zero) == 0 || spaces[zero].size() != l)
        throw std::logic_error("lie: Cartan subalgebra has unexpected dimension");

    // Positivity by the lexicographic functional on eigenvalue tuples.
    auto phi = [&](const std::vector<int>& w) {
        long s = 0;
        for (std::size_t a = 0; a < l; ++a) {
            long p = 1;
            for (std::size_t rep = a; rep + 1 < l; ++rep) p *= 100;
            s += w[a] * p;
        }
        return s;
    };
    std::vector<std::vector<int>> positive;
    for (const auto& [w, vecs] : spaces) {
        if (w == zero) continue;
        if (vecs.size() != 1) throw std::logic_error("lie: root space not one-dimensional");
        if (phi(w) == 0) throw std::logic_error("lie: positivity functional vanishes on a root");
        if (phi(w) > 0) positive.push_back(w);
    }
    // Simple roots: positive roots that are not sums of two positive roots.
    auto is_root_sum = [&](const std::vector<int>& w) {
        for (const auto& u : positive)
            for (const auto& v : positive) {
                bool match = true;
                for (std::size_t a = 0; a < l; ++a)
                    if (u[a] + v[a] != w[a]) { match = false; break; }
                if (match) return true;
            }
        return false;
    };
    std::vector<std::vector<int>> simple;
    for (const auto& w : positive)
        if (!is_root_sum(w)) simple.push_back(w);
    if (simple.size() != l) throw std::logic_error("lie: wrong number of simple roots");

    // Heights: expand each positive root in the simple basis.
    MatrixQ simple_mat(l, l);
    for (std::size_t c = 0; c < l; ++c)
        for (std::size_t rix = 0; rix < l; ++rix)
            simple_mat.at(rix, c) = Rational(simple[c][rix]);
    long best_height = -1;
    std::vector<int> theta;
    for (const auto& w : positive) {
        QVector rhs(l);
        for (std::size_t a = 0; a < l; ++a) rhs[a] = Rational(w[a]);
        auto coords = solve(simple_mat, rhs);
        if (!coords) throw std::logic_error("lie: root outside simple span");
        Rational h(0);
        for (const Rational& c : *coords) h += c;
        if (denominator(h) != 1) throw std::logic_error("lie: non-integral height");
        long hv = static_cast<long>(numerator(h));
        if (hv > best_height) {
            best_height = hv;
            theta = w;
        }
    }
    e_theta_ = spaces[theta][0];
    for (const auto& w : simple) {
        std::vector<int> neg(l);
        for (std::size_t a = 0; a < l; ++a) neg[a] = -w[a];
        lowerings_.push_back(spaces[neg][0]);
    }
}

}  // namespace c2ext
