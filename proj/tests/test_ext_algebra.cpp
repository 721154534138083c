#include <memory>

#include "c2ext/ext_algebra.hpp"
#include "c2ext/voa.hpp"
#include "doctest.h"

using namespace c2ext;

namespace {

ExtAlgebra ext_of(const RingPtr& ring, const std::vector<std::string>& gens, int P, int D,
                  PivotOrder strategy = PivotOrder::Leftmost) {
    std::vector<Polynomial> polys;
    for (const std::string& g : gens) polys.push_back(parse_polynomial(ring, g));
    auto q = std::make_shared<const GradedQuotient>(GradedQuotient::build(ring, polys, D));
    auto res = std::make_shared<const FreeResolution>(minimal_resolution(q, P, D));
    return ExtAlgebra::compute(res, P, strategy);
}

QVector unit_vec(std::size_t n, std::size_t i) {
    QVector v(n, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

TEST_CASE("alpha squared over Q[x]/x^2 hits the degree-2 class") {
    RingPtr ring = make_ring({{"x", 1}});
    ExtAlgebra ext = ext_of(ring, {"x^2"}, 6, 12);
    // alpha^2 = -beta in the product convention.
    const QVector& sq = ext.product(ext.global_index(1, 0), ext.global_index(1, 0));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0] == -1);
}

TEST_CASE("alpha squared vanishes over Q[x]/x^3") {
    RingPtr ring = make_ring({{"x", 1}});
    ExtAlgebra ext = ext_of(ring, {"x^3"}, 6, 12);
    const QVector& sq = ext.product(ext.global_index(1, 0), ext.global_index(1, 0));
    REQUIRE(sq.size() == 1);
    CHECK(sq[0] == 0);
}

TEST_CASE("anticommutator of the two classes over Q[x,y]/(x^2,y^2) vanishes") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    ExtAlgebra ext = ext_of(ring, {"x^2", "y^2"}, 6, 12);
    REQUIRE(ext.dim(1) == 2);
    std::size_t a1 = ext.global_index(1, 0);
    std::size_t a2 = ext.global_index(1, 1);
    const QVector& p12 = ext.product(a1, a2);
    const QVector& p21 = ext.product(a2, a1);
    REQUIRE(p12.size() == p21.size());
    bool nonzero = false;
    for (std::size_t k = 0; k < p12.size(); ++k) {
        CHECK(p12[k] + p21[k] == 0);
        if (p12[k] != 0) nonzero = true;
    }
    CHECK(nonzero);  // alpha_1 alpha_2 itself is a nonzero class
}

TEST_CASE("Ext dims equal Betti numbers") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    ExtAlgebra ext = ext_of(ring, {"x^2", "y^3"}, 6, 12);
    for (int i = 0; i <= 6; ++i) CHECK(ext.dim(i) == ext.resolution().betti_total(i));
}

TEST_CASE("the degree-0 class is a two-sided unit") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    ExtAlgebra ext = ext_of(ring, {"x^2", "y^2"}, 5, 10);
    std::size_t one = ext.global_index(0, 0);
    for (int level = 0; level <= 5; ++level) {
        for (std::size_t i = 0; i < ext.dim(level); ++i) {
            std::size_t u = ext.global_index(level, i);
            CHECK(ext.product(one, u) == unit_vec(ext.dim(level), i));
            CHECK(ext.product(u, one) == unit_vec(ext.dim(level), i));
        }
    }
}

TEST_CASE("products are associative on all basis triples") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    ExtAlgebra ext = ext_of(ring, {"x^2", "y^2"}, 6, 12);
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            for (int c = 1; a + b + c <= 6 && c <= 2; ++c)
                for (std::size_t i = 0; i < ext.dim(a); ++i)
                    for (std::size_t j = 0; j < ext.dim(b); ++j)
                        for (std::size_t k = 0; k < ext.dim(c); ++k) {
                            QVector ei = unit_vec(ext.dim(a), i);
                            QVector ej = unit_vec(ext.dim(b), j);
                            QVector ek = unit_vec(ext.dim(c), k);
                            QVector left =
                                ext.multiply(a + b, ext.multiply(a, ei, b, ej), c, ek);
                            QVector right =
                                ext.multiply(a, ei, b + c, ext.multiply(b, ej, c, ek));
                            CHECK(left == right);
                        }
}

TEST_CASE("structure constants do not depend on the lift strategy") {
    for (auto gens : {std::vector<std::string>{"x^2", "y^2"},
                      std::vector<std::string>{"x^3", "y^3"},
                      std::vector<std::string>{"x^2 + y^2", "x*y"}}) {
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        ExtAlgebra a = ext_of(ring, gens, 4, 10, PivotOrder::Leftmost);
        ExtAlgebra b = ext_of(ring, gens, 4, 10, PivotOrder::Rightmost);
        for (int p = 1; p <= 3; ++p)
            for (int q = 1; p + q <= 4; ++q)
                for (std::size_t i = 0; i < a.dim(p); ++i)
                    for (std::size_t j = 0; j < a.dim(q); ++j)
                        CHECK(a.product(a.global_index(p, i), a.global_index(q, j)) ==
                              b.product(b.global_index(p, i), b.global_index(q, j)));
    }
}

TEST_CASE("graded commutator report is empty exactly in the cube regime") {
    RingPtr uni = make_ring({{"x", 1}});
    SUBCASE("Q[x]/x^3 and Q[x,y]/(x^3,y^3): generators in m^3, no violations") {
        CHECK(graded_commutator_report(ext_of(uni, {"x^3"}, 6, 12)).empty());
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        CHECK(graded_commutator_report(ext_of(ring, {"x^3", "y^3"}, 4, 10)).empty());
    }
    SUBCASE("Q[x]/x^2: odd squares survive, graded commutativity fails") {
        auto violations = graded_commutator_report(ext_of(uni, {"x^2"}, 6, 12));
        CHECK_FALSE(violations.empty());
    }
    SUBCASE("quadratic relations put nonzero constants on the odd squares") {
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        auto violations = graded_commutator_report(ext_of(ring, {"x^2", "y^2"}, 4, 10));
        bool square_found = false;
        for (const auto& v : violations)
            if (v.left == "xi_1_1" && v.right == "xi_1_1") square_found = true;
        CHECK(square_found);
    }
    SUBCASE("unit pairs always commute") {
        ExtAlgebra ext = ext_of(uni, {"x^2"}, 6, 12);
        for (const auto& v : graded_commutator_report(ext)) {
            CHECK(v.left != "xi_0_1");
            CHECK(v.right != "xi_0_1");
        }
    }
}

TEST_CASE("commutative quotients and the growth heuristic") {
    RingPtr uni = make_ring({{"x", 1}});
    SUBCASE("Q[x]/x^3: polynomial ring on beta") {
        CommutativeQuotientReport r = commutative_quotient(ext_of(uni, {"x^3"}, 6, 12), 6);
        CHECK(r.quotient_dims == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1});
        CHECK(r.growth_degree == 0);
        CHECK(r.variety_dim_estimate == 1);
    }
    SUBCASE("Q[x]: exterior algebra, quotient vanishes above degree 1") {
        auto q = std::make_shared<const GradedQuotient>(GradedQuotient::build(uni, {}, 8));
        auto res = std::make_shared<const FreeResolution>(minimal_resolution(q, 6, 8));
        CommutativeQuotientReport r =
            commutative_quotient(ExtAlgebra::compute(res, 6), 6);
        CHECK(r.quotient_dims == std::vector<std::size_t>{1, 1, 0, 0, 0, 0, 0});
        CHECK(r.variety_dim_estimate == 0);
    }
    SUBCASE("Q[x,y]/(x^3,y^3): linear even growth, estimate 2") {
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        CommutativeQuotientReport r =
            commutative_quotient(ext_of(ring, {"x^3", "y^3"}, 6, 12), 6);
        CHECK(r.growth_degree == 1);
        CHECK(r.variety_dim_estimate == 2);
    }
}

TEST_CASE("polynomial subalgebra witness") {
    RingPtr uni = make_ring({{"x", 1}});
    SUBCASE("one cube") {
        WitnessReport r = polynomial_subalgebra_witness(ext_of(uni, {"x^3"}, 6, 12), 1);
        CHECK(r.verdict == WitnessVerdict::Pass);
    }
    SUBCASE("two cubes") {
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        WitnessReport r = polynomial_subalgebra_witness(ext_of(ring, {"x^3", "y^3"}, 6, 12), 2);
        CHECK(r.verdict == WitnessVerdict::Pass);
        CHECK(r.class_labels.size() == 2);
    }
    SUBCASE("wrong expected count fails") {
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        WitnessReport r = polynomial_subalgebra_witness(ext_of(ring, {"x^3", "y^3"}, 6, 12), 3);
        CHECK(r.verdict == WitnessVerdict::Fail);
    }
    SUBCASE("too small a truncation is Unknown") {
        WitnessReport r = polynomial_subalgebra_witness(ext_of(uni, {"x^3"}, 3, 8), 1);
        CHECK(r.verdict == WitnessVerdict::Unknown);
    }
}

TEST_CASE("sign convention note") {
    RingPtr uni = make_ring({{"x", 1}});
    ExtAlgebra ext = ext_of(uni, {"x^2"}, 4, 8);
    SignConventionNote note = sign_convention_note(ext);
    CHECK(note.convention == "product");
    CHECK(note.relation.find("(-1)^{pq}") != std::string::npos);
}

TEST_CASE("composition convention differs by (-1)^{pq}: both odd classes") {
    // In the product convention alpha * alpha = -beta over Q[x]/x^2; the
    // composition convention flips the sign for p = q = 1, giving +beta,
    // the form of the published presentation.
    RingPtr uni = make_ring({{"x", 1}});
    ExtAlgebra ext = ext_of(uni, {"x^2"}, 4, 8);
    const QVector& sq = ext.product(ext.global_index(1, 0), ext.global_index(1, 0));
    Rational composition_value = -sq[0];  // (-1)^{1*1}
    CHECK(composition_value == 1);
}

TEST_CASE("witness for the level-2 sl2 quotient: seven polynomial classes") {
    C2Presentation pres = affine_c2(LieType::A, 1, 2);
    auto q = std::make_shared<const GradedQuotient>(
        GradedQuotient::build(pres.ring, pres.generators, 10));
    auto res = std::make_shared<const FreeResolution>(minimal_resolution(q, 4, 10));
    ExtAlgebra ext = ExtAlgebra::compute(res, 4);
    WitnessReport w = polynomial_subalgebra_witness(ext, 7);
    CHECK(w.verdict == WitnessVerdict::Pass);
    CHECK(w.class_labels.size() == 7);
}
