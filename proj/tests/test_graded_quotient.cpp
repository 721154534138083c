#include "c2ext/graded_quotient.hpp"
#include "c2ext/root_system.hpp"
#include "c2ext/voa.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace c2ext;

namespace {

GradedQuotient univariate_power(int r, int D) {
    RingPtr ring = make_ring({{"x", 1}});
    Monomial xr{{r}};
    return GradedQuotient::build(ring, {Polynomial::term(ring, xr, 1)}, D);
}

}  // namespace

TEST_CASE("Hilbert dims of Q[x]/x^3") {
    GradedQuotient q = univariate_power(3, 5);
    CHECK(q.hilbert().dims == std::vector<std::size_t>{1, 1, 1, 0, 0, 0});
}

TEST_CASE("Hilbert dims of Q[x,y]/(x^2, y^2)") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    GradedQuotient q = GradedQuotient::build(
        ring, {parse_polynomial(ring, "x^2"), parse_polynomial(ring, "y^2")}, 4);
    CHECK(q.hilbert().dims == std::vector<std::size_t>{1, 2, 1, 0, 0});
    CHECK(q.certified_top_degree() == 2);
}

TEST_CASE("degree-2 slice of the level-1 sl2 quotient") {
    C2Presentation pres = affine_c2(LieType::A, 1, 1);
    RootSystem rs = RootSystem::create(LieType::A, 1);
    GradedQuotient q = GradedQuotient::build(pres.ring, pres.generators, 4);
    // dim Sym^2(g) - N_1, with N_1 from the Weyl formula
    Rational n1 = weyl_nk_value(rs, 1);
    std::size_t sym2 = monomials_of_degree(*pres.ring, 2).size();
    CHECK(Rational(static_cast<int>(sym2)) - n1 == Rational(static_cast<int>(q.dim(2))));
    CHECK(q.dim(2) == 1);
}

TEST_CASE("normal form against a single relation") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    GradedQuotient q = GradedQuotient::build(ring, {parse_polynomial(ring, "x^2 + y^2")}, 6);
    // x^2 reduces to -y^2: the standard monomials in degree 2 are xy and y^2.
    Polynomial x2 = parse_polynomial(ring, "x^2");
    CHECK(q.normal_form_poly(x2) == parse_polynomial(ring, "-1*y^2"));
}

TEST_CASE("normal form kills the generators and fixes standard monomials") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    std::vector<Polynomial> gens{parse_polynomial(ring, "x^2 - x*y"),
                                 parse_polynomial(ring, "y^3")};
    GradedQuotient q = GradedQuotient::build(ring, gens, 8);
    for (const Polynomial& g : gens) {
        QVector nf = q.normal_form(g);
        for (const Rational& c : nf) CHECK(c == 0);
    }
    for (int d = 0; d <= 8; ++d)
        for (const Monomial& m : q.standard_monomials(d))
            CHECK(q.normal_form_poly(Polynomial::term(ring, m, 1)) ==
                  Polynomial::term(ring, m, 1));
}

TEST_CASE("normal form is a projection") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    GradedQuotient q = GradedQuotient::build(
        ring, {parse_polynomial(ring, "x^2 + x*y"), parse_polynomial(ring, "y^2")}, 8);
    Polynomial p = parse_polynomial(ring, "3*x^3 - 2*x^2*y + x*y^2");
    CHECK(q.normal_form_poly(q.normal_form_poly(p)) == q.normal_form_poly(p));
}

TEST_CASE("dim I_d + dim R_d = dim S_d") {
    RingPtr ring = make_ring({{"x", 2}, {"y", 1}});
    GradedQuotient q = GradedQuotient::build(
        ring, {parse_polynomial(ring, "x^2 - y^4"), parse_polynomial(ring, "y^5")}, 9);
    for (int d = 0; d <= 9; ++d)
        CHECK(q.ideal_dim(d) + q.dim(d) == monomials_of_degree(*ring, d).size());
}

TEST_CASE("minimal generator counts") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    SUBCASE("two independent quadrics") {
        MinimalGenerators mg = minimal_generator_count(
            ring, {parse_polynomial(ring, "x^2"), parse_polynomial(ring, "x^2 + y^2")}, 6);
        CHECK(mg.total == 2);
        CHECK(mg.redundant == std::vector<bool>{false, false});
    }
    SUBCASE("x^3 is redundant next to x^2") {
        RingPtr uni = make_ring({{"x", 1}});
        MinimalGenerators mg = minimal_generator_count(
            uni, {parse_polynomial(uni, "x^2"), parse_polynomial(uni, "x^3")}, 6);
        CHECK(mg.total == 1);
        CHECK(mg.redundant == std::vector<bool>{false, true});
    }
}

TEST_CASE("minimal generator count ignores invertible recombination") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}, {"z", 1}});
    std::vector<Polynomial> gens{parse_polynomial(ring, "x^2 + y*z"),
                                 parse_polynomial(ring, "y^2 - x*z")};
    std::vector<Polynomial> mixed{gens[0] + gens[1] * Rational(3), gens[1] * Rational(-2)};
    MinimalGenerators a = minimal_generator_count(ring, gens, 6);
    MinimalGenerators b = minimal_generator_count(ring, mixed, 6);
    CHECK(a.total == b.total);
    CHECK(a.per_degree == b.per_degree);
}

TEST_CASE("complete intersection verdicts") {
    SUBCASE("coordinate squares") {
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        GradedQuotient q = GradedQuotient::build(
            ring, {parse_polynomial(ring, "x^2"), parse_polynomial(ring, "y^2")}, 8);
        CiReport ci = is_complete_intersection(q);
        CHECK(ci.verdict == CiVerdict::YesCertifiedToD);
        CHECK(ci.certified_to == 8);
    }
    SUBCASE("more relations than variables") {
        C2Presentation pres = affine_c2(LieType::A, 1, 1);
        GradedQuotient q = GradedQuotient::build(pres.ring, pres.generators, 4);
        CHECK(is_complete_intersection(q).verdict == CiVerdict::No);
    }
    SUBCASE("level zero is a complete intersection") {
        C2Presentation pres = affine_c2(LieType::A, 1, 0);
        GradedQuotient q = GradedQuotient::build(pres.ring, pres.generators, 3);
        CHECK(is_complete_intersection(q).verdict == CiVerdict::YesCertifiedToD);
    }
    SUBCASE("non-CI detected by the Hilbert series") {
        // <x^2, xy>: 2 generators, 2 variables, but not a regular sequence.
        RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
        GradedQuotient q = GradedQuotient::build(
            ring, {parse_polynomial(ring, "x^2"), parse_polynomial(ring, "x*y")}, 8);
        CiReport ci = is_complete_intersection(q);
        CHECK(ci.verdict == CiVerdict::No);
    }
}

TEST_CASE("tensor products convolve Hilbert dims") {
    RingPtr rx = make_ring({{"x", 1}});
    RingPtr ry = make_ring({{"y", 1}});
    C2Presentation a{rx, {parse_polynomial(rx, "x^2")}, "a"};
    C2Presentation b{ry, {parse_polynomial(ry, "y^3")}, "b"};
    C2Presentation ab = tensor_c2(a, b);
    GradedQuotient qa = GradedQuotient::build(a.ring, a.generators, 8);
    GradedQuotient qb = GradedQuotient::build(b.ring, b.generators, 8);
    GradedQuotient qab = GradedQuotient::build(ab.ring, ab.generators, 8);
    std::vector<std::size_t> conv =
        oracles::convolve(qa.hilbert().dims, qb.hilbert().dims);
    CHECK(qab.hilbert().dims == conv);
}

TEST_CASE("build rejects bad inputs") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    CHECK_THROWS_AS(GradedQuotient::build(ring, {parse_polynomial(ring, "x^2 + y")}, 6),
                    std::invalid_argument);  // not homogeneous
    CHECK_THROWS_AS(GradedQuotient::build(ring, {parse_polynomial(ring, "x^4")}, 3),
                    std::invalid_argument);  // D below generator degree
}
