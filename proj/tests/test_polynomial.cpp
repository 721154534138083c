#include <random>

#include "c2ext/polynomial.hpp"
#include "doctest.h"

using namespace c2ext;

namespace {

Polynomial random_homogeneous(std::mt19937_64& rng, const RingPtr& ring, int degree) {
    std::uniform_int_distribution<int> coeff(-5, 5);
    Polynomial p(ring);
    for (const Monomial& m : monomials_of_degree(*ring, degree)) p.add_term(m, coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("binomial square") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    Polynomial xy = parse_polynomial(ring, "x + y");
    CHECK(xy * xy == parse_polynomial(ring, "x^2 + 2*x*y + y^2"));
}

TEST_CASE("multiplicative identity") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    Polynomial p = parse_polynomial(ring, "3*x^2*y - 1/2*y^3 + 7");
    CHECK(p * Polynomial::constant(ring, 1) == p);
}

TEST_CASE("difference of squares") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    Polynomial a = parse_polynomial(ring, "x^2 - y^2");
    Polynomial b = parse_polynomial(ring, "x^2 + y^2");
    CHECK(a * b == parse_polynomial(ring, "x^4 - y^4"));
}

TEST_CASE("monomials of a degree, standard grading") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    std::vector<Monomial> monos = monomials_of_degree(*ring, 2);
    REQUIRE(monos.size() == 3);
    CHECK(monos[0].exponents == std::vector<int>{2, 0});
    CHECK(monos[1].exponents == std::vector<int>{1, 1});
    CHECK(monos[2].exponents == std::vector<int>{0, 2});
}

TEST_CASE("monomials of a degree, weighted grading") {
    RingPtr ring = make_ring({{"x", 2}, {"y", 1}});
    std::vector<Monomial> monos = monomials_of_degree(*ring, 4);
    REQUIRE(monos.size() == 3);
    CHECK(monos[0].exponents == std::vector<int>{2, 0});
    CHECK(monos[1].exponents == std::vector<int>{1, 2});
    CHECK(monos[2].exponents == std::vector<int>{0, 4});
}

TEST_CASE("monomial counts match the stars-and-bars formula") {
    RingPtr r3 = make_ring({{"x", 1}, {"y", 1}, {"z", 1}});
    CHECK(monomials_of_degree(*r3, 3).size() == 10);
    // C(d + n - 1, d) for a few more degrees
    CHECK(monomials_of_degree(*r3, 5).size() == 21);
    RingPtr r4 = make_ring({{"a", 1}, {"b", 1}, {"c", 1}, {"d", 1}});
    CHECK(monomials_of_degree(*r4, 2).size() == 10);
}

TEST_CASE("parsing a two-term polynomial") {
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}});
    Polynomial p = parse_polynomial(ring, "3*x^2*y - 1/2*y^3");
    CHECK(p.term_count() == 2);
    Monomial x2y{{2, 1}};
    CHECK(p.coefficient(x2y) == 3);
    Monomial y3{{0, 3}};
    CHECK(p.coefficient(y3) == Rational(-1, 2));
}

TEST_CASE("x^0 parses to the constant 1") {
    RingPtr ring = make_ring({{"x", 1}});
    Polynomial p = parse_polynomial(ring, "x^0");
    CHECK(p == Polynomial::constant(ring, 1));
}

TEST_CASE("parse errors carry positions") {
    RingPtr ring = make_ring({{"x", 1}});
    CHECK_THROWS_AS(parse_polynomial(ring, "x + q"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(ring, "x + "), ParseError);
    CHECK_THROWS_AS(parse_polynomial(ring, "* x"), ParseError);
}

TEST_CASE("format then parse round-trips random polynomials") {
    std::mt19937_64 rng(31337);
    RingPtr ring = make_ring({{"x", 2}, {"y", 1}, {"z", 1}});
    std::uniform_int_distribution<int> coeff_num(-9, 9);
    std::uniform_int_distribution<int> coeff_den(1, 5);
    std::uniform_int_distribution<int> expo(0, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p(ring);
        for (int t = 0; t < 10; ++t) {
            Monomial m{{expo(rng), expo(rng), expo(rng)}};
            p.add_term(m, Rational(coeff_num(rng), coeff_den(rng)));
        }
        CHECK(parse_polynomial(ring, format_polynomial(p)) == p);
    }
    CHECK(parse_polynomial(ring, format_polynomial(Polynomial(ring))).is_zero());
}

TEST_CASE("multiplication is commutative and associative on random homogeneous triples") {
    std::mt19937_64 rng(4242);
    RingPtr ring = make_ring({{"x", 1}, {"y", 1}, {"z", 2}});
    for (int trial = 0; trial < 5; ++trial) {
        Polynomial p = random_homogeneous(rng, ring, 2);
        Polynomial q = random_homogeneous(rng, ring, 3);
        Polynomial r = random_homogeneous(rng, ring, 2);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        if (!p.is_zero() && !q.is_zero()) {
            CHECK((p * q).degree() == p.degree() + q.degree());
            CHECK((p * q).is_homogeneous());
        }
    }
}

TEST_CASE("ring mismatch is rejected") {
    RingPtr a = make_ring({{"x", 1}});
    RingPtr b = make_ring({{"y", 1}});
    CHECK_THROWS_AS(Polynomial::variable(a, 0) * Polynomial::variable(b, 0),
                    std::invalid_argument);
}
