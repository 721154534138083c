#include "c2ext/root_system.hpp"
#include "doctest.h"

using namespace c2ext;

TEST_CASE("positive root counts") {
    CHECK(RootSystem::create(LieType::A, 3).positive_roots().size() == 6);
    CHECK(RootSystem::create(LieType::B, 3).positive_roots().size() == 9);
    CHECK(RootSystem::create(LieType::C, 4).positive_roots().size() == 16);
    CHECK(RootSystem::create(LieType::D, 4).positive_roots().size() == 12);
    CHECK(RootSystem::create(LieType::E, 6).positive_roots().size() == 36);
    CHECK(RootSystem::create(LieType::E, 7).positive_roots().size() == 63);
    CHECK(RootSystem::create(LieType::E, 8).positive_roots().size() == 120);
    CHECK(RootSystem::create(LieType::F, 4).positive_roots().size() == 24);
    CHECK(RootSystem::create(LieType::G, 2).positive_roots().size() == 6);
}

TEST_CASE("N_0 equals the Lie algebra dimension across the supported ranks") {
    std::vector<std::pair<LieType, int>> cases = {
        {LieType::A, 1}, {LieType::A, 2}, {LieType::A, 3}, {LieType::A, 4},
        {LieType::B, 2}, {LieType::B, 3}, {LieType::B, 4},
        {LieType::C, 2}, {LieType::C, 3}, {LieType::C, 4},
        {LieType::D, 4}, {LieType::E, 6}, {LieType::E, 7}, {LieType::E, 8},
        {LieType::F, 4}, {LieType::G, 2}};
    for (auto [type, rank] : cases) {
        RootSystem rs = RootSystem::create(type, rank);
        CHECK(weyl_nk_value(rs, 0) == Rational(rs.dimension()));
    }
}

TEST_CASE("N_k values quoted per type") {
    RootSystem a1 = RootSystem::create(LieType::A, 1);
    CHECK(weyl_nk_value(a1, 2) == 7);  // 2k + 3
    std::vector<Rational> a1poly = weyl_nk_polynomial(a1);
    CHECK(a1poly == std::vector<Rational>{Rational(3), Rational(2)});

    RootSystem a2 = RootSystem::create(LieType::A, 2);
    CHECK(weyl_nk_value(a2, 1) == 27);  // (k+2)^3
    for (int k = 0; k <= 5; ++k)
        CHECK(weyl_nk_value(a2, k) == Rational((k + 2) * (k + 2) * (k + 2)));

    RootSystem g2 = RootSystem::create(LieType::G, 2);
    CHECK(weyl_nk_value(g2, 0) == 14);
}

TEST_CASE("published rank-2 factorizations match the Weyl evaluation") {
    // B2: (2(k+1)+1) (k+2) (2/3 (k+1)+1); G2 has five linear factors.
    RootSystem b2 = RootSystem::create(LieType::B, 2);
    RootSystem g2 = RootSystem::create(LieType::G, 2);
    for (int k = 0; k <= 6; ++k) {
        Rational kk(k);
        Rational b2_printed = (Rational(2) * (kk + 1) + 1) * (kk + 2) *
                              (Rational(2, 3) * (kk + 1) + 1);
        CHECK(weyl_nk_value(b2, k) == b2_printed);
        Rational g2_printed = (kk + 2) * (Rational(3, 4) * (kk + 1) + 1) *
                              (Rational(3, 5) * (kk + 1) + 1) *
                              (Rational(1, 2) * (kk + 1) + 1) *
                              (Rational(2, 3) * (kk + 1) + 1);
        CHECK(weyl_nk_value(g2, k) == g2_printed);
    }
}

TEST_CASE("degree table, root counting and 2h^v - 3 all agree") {
    // nk_degree throws on any internal disagreement, so evaluating it is the test.
    CHECK(nk_degree(RootSystem::create(LieType::A, 1)) == 1);
    CHECK(nk_degree(RootSystem::create(LieType::A, 4)) == 7);
    CHECK(nk_degree(RootSystem::create(LieType::B, 3)) == 7);
    CHECK(nk_degree(RootSystem::create(LieType::C, 3)) == 5);
    CHECK(nk_degree(RootSystem::create(LieType::D, 4)) == 9);
    CHECK(nk_degree(RootSystem::create(LieType::E, 6)) == 21);
    CHECK(nk_degree(RootSystem::create(LieType::E, 7)) == 33);
    CHECK(nk_degree(RootSystem::create(LieType::E, 8)) == 57);
    CHECK(nk_degree(RootSystem::create(LieType::F, 4)) == 15);
    CHECK(nk_degree(RootSystem::create(LieType::G, 2)) == 5);
}

TEST_CASE("the symbolic polynomial has the advertised degree and values") {
    for (auto [type, rank] : std::vector<std::pair<LieType, int>>{
             {LieType::A, 2}, {LieType::B, 2}, {LieType::G, 2}, {LieType::C, 3}}) {
        RootSystem rs = RootSystem::create(type, rank);
        std::vector<Rational> poly = weyl_nk_polynomial(rs);
        CHECK(static_cast<int>(poly.size()) - 1 == nk_degree(rs));
        for (int k = 0; k <= 4; ++k)
            CHECK(evaluate_polynomial(poly, Rational(k)) == weyl_nk_value(rs, k));
    }
}

TEST_CASE("normalization: theta is long and the inner product is symmetric") {
    for (auto [type, rank] : std::vector<std::pair<LieType, int>>{
             {LieType::A, 2}, {LieType::B, 2}, {LieType::C, 2}, {LieType::G, 2},
             {LieType::F, 4}, {LieType::E, 6}}) {
        RootSystem rs = RootSystem::create(type, rank);
        CHECK(rs.inner(rs.highest_root(), rs.highest_root()) == 2);
        // (theta, alpha) >= 0 for all positive roots
        for (const QVector& alpha : rs.positive_roots())
            CHECK(rs.inner(rs.highest_root(), alpha) >= 0);
    }
}
