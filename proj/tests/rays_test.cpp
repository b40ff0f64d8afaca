#include <doctest.h>

#include "hkrays/rays.hpp"

using namespace hkrays;
using namespace hkrays::rays;
using lattice::ContractionType;
using lattice::Vec2;

TEST_CASE("second extremal ray from the minimal Pell solution") {
    auto r3 = second_ray(3);
    CHECK(r3.Hprime == Vec2{2, -3});
    CHECK(r3.tauPrime == Vec2{1, -2});

    auto r7 = second_ray(7);
    CHECK(r7.Hprime == Vec2{8, -21});
    CHECK(r7.tauPrime == Vec2{3, -8});

    auto r13 = second_ray(13);
    CHECK(r13.Hprime == Vec2{649, -2340});
    CHECK(r13.tauPrime == Vec2{180, -649});

    CHECK_THROWS_AS(second_ray(4), lagrangian_case);
    CHECK_THROWS_AS(second_ray(0), domain_error);
}

TEST_CASE("lagrangian ray for square discriminant") {
    CHECK(lagrangian_ray(1) == Vec2{1, -1});
    CHECK(lagrangian_ray(4) == Vec2{1, -2});
    CHECK(lagrangian_ray(16) == Vec2{1, -4});
    CHECK_THROWS_AS(lagrangian_ray(7), domain_error);
}

TEST_CASE("type-pair classification") {
    using CT = ContractionType;
    CHECK(classify_pair(3, CT::H, {}) == std::pair{CT::H, CT::M3});
    CHECK(classify_pair(8, CT::H, {}) == std::pair{CT::H, CT::B1});
    CHECK(classify_pair(2, CT::H, {}) == std::pair{CT::H, CT::H});
    CHECK(classify_pair(5, CT::M1, {true, true}) == std::pair{CT::M1, CT::M1});
    CHECK(classify_pair(7, CT::B0, {false, false}) == std::pair{CT::B0, CT::B0});

    // inconsistent hypothesis flags
    CHECK_THROWS_AS(classify_pair(5, CT::M1, {false, true}), domain_error);
    CHECK_THROWS_AS(classify_pair(5, CT::H, {true, true}), domain_error);
    CHECK_THROWS_AS(classify_pair(7, CT::H, {false, false}), domain_error);
    // congruence violations
    CHECK_THROWS_AS(classify_pair(6, CT::M3, {}), domain_error);
    CHECK_THROWS_AS(classify_pair(6, CT::B1, {}), domain_error);
    // square discriminant has no second divisorial ray
    CHECK_THROWS_AS(classify_pair(9, CT::H, {}), lagrangian_case);
}

TEST_CASE("flopping walls") {
    auto w11 = flopping_walls(11, ContractionType::H);
    REQUIRE(w11.size() == 1);
    CHECK(w11[0].kappa == Vec2{2, -7});
    CHECK(w11[0].orthogonal_ray == Vec2{7, -22});

    CHECK(flopping_walls(3, ContractionType::H).empty());
    CHECK(flopping_walls(8, ContractionType::H).empty());
    CHECK(flopping_walls(13, ContractionType::H).empty());
    CHECK(flopping_walls(5, ContractionType::M1).empty());
    CHECK(flopping_walls(7, ContractionType::B0).empty());

    CHECK_THROWS_AS(flopping_walls(9, ContractionType::H), domain_error);
}

TEST_CASE("flopping walls lie strictly inside the movable cone") {
    for (long d = 2; d <= 60; ++d) {
        if (is_perfect_square(Int(d)))
            continue;
        auto mp = *pell::minimal_pell(d);
        for (const auto& w : flopping_walls(d, ContractionType::H)) {
            // q(kappa) = -10 and divisibility 2 (H-coefficient even)
            CHECK(2 * d * w.kappa.r * w.kappa.r - 2 * w.kappa.s * w.kappa.s == -10);
            CHECK(fmod(w.kappa.r, 2) == 0);
            // wall between the extremal rays: -bd/a < s/r < 0
            CHECK(w.orthogonal_ray.r > 0);
            CHECK(w.orthogonal_ray.s * mp.a > -mp.b * d * w.orthogonal_ray.r);
            CHECK(w.orthogonal_ray.s < 0);
            // and perpendicular to kappa
            CHECK(2 * d * w.orthogonal_ray.r * w.kappa.r -
                      2 * w.orthogonal_ray.s * w.kappa.s == 0);
        }
    }
}

TEST_CASE("conic bundle invariants per type") {
    auto b1 = conic_invariants(ContractionType::B1, 8);
    CHECK(b1.hs_square == 4);
    REQUIRE(b1.brauer.has_value());
    CHECK(b1.brauer->hs_b_halves == 1);
    CHECK(b1.brauer->b_sq_halves == 1);
    CHECK(b1.tx_relation == "T(S,alpha)");

    auto h7 = conic_invariants(ContractionType::H, 7);
    CHECK(h7.hs_square == 14);
    CHECK_FALSE(h7.brauer.has_value());
    CHECK(h7.tx_relation == "T(S)");

    auto b0 = conic_invariants(ContractionType::B0, 1);
    CHECK(b0.hs_square == 2);
    REQUIRE(b0.brauer.has_value());
    CHECK(b0.brauer->hs_b_halves == 0);
    CHECK(b0.brauer->b_sq_halves == 1);
    CHECK(b0.tx_relation == "T(S,alpha)");

    CHECK(conic_invariants(ContractionType::M1, 5).hs_square == 10);
    CHECK(conic_invariants(ContractionType::M3, 7).heegner_label ==
          "D^(2)_{2d,2d,alpha}");

    CHECK_THROWS_AS(conic_invariants(ContractionType::M1, 7), domain_error);
    CHECK_THROWS_AS(conic_invariants(ContractionType::M3, 5), domain_error);
    CHECK_THROWS_AS(conic_invariants(ContractionType::B1, 6), domain_error);
}

TEST_CASE("FM partner count") {
    CHECK(fm_partner_count(7) == 1);
    CHECK(fm_partner_count(15) == 2);
    CHECK(fm_partner_count(2) == 1);
    CHECK(fm_partner_count(30) == 4);
    CHECK_THROWS_AS(fm_partner_count(1), domain_error);
    CHECK_THROWS_AS(fm_partner_count(0), domain_error);
}

TEST_CASE("full analysis") {
    auto r11 = analyze(11, ContractionType::H);
    CHECK(r11.first.type == ContractionType::H);
    REQUIRE(r11.second_is_divisorial());
    CHECK(std::get<RayProfile>(r11.second).type == ContractionType::M3);
    REQUIRE(r11.flopping_walls.size() == 1);
    CHECK(r11.flopping_walls[0].kappa == Vec2{2, -7});
    CHECK(r11.model_count == 2);
    CHECK(r11.det_abs == 44);

    auto r4 = analyze(4, ContractionType::H);
    CHECK_FALSE(r4.second_is_divisorial());
    CHECK(std::get<LagrangianRay>(r4.second).isotropic_class == Vec2{1, -2});
    CHECK_FALSE(r4.pell.has_value());

    auto r13 = analyze(13, ContractionType::H);
    REQUIRE(r13.second_is_divisorial());
    CHECK(std::get<RayProfile>(r13.second).type == ContractionType::H);
    CHECK(r13.model_count == 1);

    // first profile carries the Table-1 data
    CHECK(r11.first.divH == 1);
    CHECK(r11.first.divTau == 2);
    CHECK(r11.first.exceptional_multiplicity == 2);
    CHECK(std::get<RayProfile>(r11.second).exceptional_multiplicity == 1);

    // d = 1: FM partner count is undefined
    auto r1 = analyze(1, ContractionType::H);
    CHECK_FALSE(r1.fm_partners.has_value());
    CHECK(r11.fm_partners == Int(1));

    // M1 coordinates live in the index-two overlattice; refused
    CHECK_THROWS_AS(analyze(5, ContractionType::M1, {true, true}), domain_error);

    // B0 pairs with itself and admits no flops
    auto rb0 = analyze(7, ContractionType::B0, {false, false});
    REQUIRE(rb0.second_is_divisorial());
    CHECK(std::get<RayProfile>(rb0.second).type == ContractionType::B0);
    CHECK(rb0.flopping_walls.empty());
}

TEST_CASE("second-ray contract over a range of d") {
    for (long d = 2; d <= 150; ++d) {
        if (is_perfect_square(Int(d)))
            continue;
        auto sr = second_ray(d);
        auto pic = lattice::picard_rank2(d);
        lattice::LatticeVector hp{sr.Hprime.r, sr.Hprime.s};
        lattice::LatticeVector tp{sr.tauPrime.r, sr.tauPrime.s};
        CHECK(pic.q_value(hp) == 2 * d);
        CHECK(pic.q_value(tp) == -2);
        CHECK(pic.pairing(hp, tp) == 0);
        CHECK(lattice::is_primitive(hp));
        CHECK(lattice::is_primitive(tp));
    }
}

TEST_CASE("parity and ambient classification agree (spot range)") {
    using CT = ContractionType;
    for (long d = 2; d <= 150; ++d) {
        if (is_perfect_square(Int(d)))
            continue;
        auto mp = *pell::minimal_pell(d);
        std::vector<CT> firsts = {CT::H};
        if (d % 4 == 3)
            firsts.push_back(CT::M3);
        if (d % 4 == 0)
            firsts.push_back(CT::B1);
        for (CT first : firsts)
            CHECK(second_type_by_parity(d, first, mp.a, mp.b) ==
                  second_type_by_ambient(d, first, mp.a, mp.b));
    }
}

TEST_CASE("mixed pairs obey the congruence constraints") {
    using CT = ContractionType;
    for (long d = 2; d <= 200; ++d) {
        if (is_perfect_square(Int(d)))
            continue;
        auto pair = classify_pair(d, CT::H, {});
        auto mp = *pell::minimal_pell(d);
        if (pair.second == CT::B1) {
            CHECK(d % 8 == 0);
            CHECK(fmod(mp.b, 2) == 1);
            CHECK(fmod(mp.a, 2) == 1);
        }
        if (pair.second == CT::M3) {
            CHECK(d % 4 == 3);
            CHECK(fmod(mp.a, 2) == 0);
            CHECK(fmod(mp.b, 2) == 1);
        }
    }
}
