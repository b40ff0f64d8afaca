#include <doctest.h>

#include "hkrays/hilbert.hpp"

using namespace hkrays;
using namespace hkrays::hilbert;
using lattice::ContractionType;
using lattice::Vec2;

TEST_CASE("hilbert square rows") {
    auto r14 = analyze_hilbert_square(14);
    CHECK(r14.pell->a == 8);
    CHECK(r14.pell->b == 3);
    CHECK(r14.second == ContractionType::M3);
    CHECK(r14.Hprime == Vec2{8, -21});
    CHECK(r14.tauPrime == Vec2{3, -8});
    CHECK(r14.det_abs == 28);

    auto r30 = analyze_hilbert_square(30);
    CHECK(r30.pell->a == 4);
    CHECK(r30.pell->b == 1);
    CHECK(r30.second == ContractionType::M3);
    CHECK(r30.Hprime == Vec2{4, -15});
    CHECK(r30.tauPrime == Vec2{1, -4});

    auto r16 = analyze_hilbert_square(16);
    CHECK(r16.second == ContractionType::B1);
    CHECK(r16.Hprime == Vec2{3, -8});
    CHECK(r16.tauPrime == Vec2{1, -3});

    auto r8 = analyze_hilbert_square(8);
    CHECK_FALSE(r8.pell.has_value());
    CHECK_FALSE(r8.second.has_value());
    CHECK(r8.lagrangian == Vec2{1, -2});
    CHECK(r8.flopping_walls.empty());

    CHECK_THROWS_AS(analyze_hilbert_square(7), domain_error);
    CHECK_THROWS_AS(analyze_hilbert_square(0), domain_error);
    CHECK_THROWS_AS(analyze_hilbert_square(-4), domain_error);
}

TEST_CASE("flopping walls per row") {
    auto r22 = analyze_hilbert_square(22);
    REQUIRE(r22.flopping_walls.size() == 1);
    CHECK(r22.flopping_walls[0].kappa == Vec2{2, -7});
    CHECK(r22.flopping_walls[0].orthogonal_ray == Vec2{7, -22});
    CHECK(r22.model_count == 2);

    CHECK(analyze_hilbert_square(6).flopping_walls.empty());
    CHECK(analyze_hilbert_square(16).flopping_walls.empty());
    CHECK(analyze_hilbert_square(6).model_count == 1);

    // square discriminant: e = 2 carries one wall, e = 8, 18, 32 none
    auto r2 = analyze_hilbert_square(2);
    REQUIRE(r2.flopping_walls.size() == 1);
    CHECK(r2.flopping_walls[0].kappa == Vec2{2, -3});
    CHECK(r2.flopping_walls[0].orthogonal_ray == Vec2{3, -2});
    CHECK_FALSE(r2.fm_partners.has_value()); // d = 1
    CHECK(analyze_hilbert_square(18).flopping_walls.empty());
    CHECK(analyze_hilbert_square(32).flopping_walls.empty());
}

TEST_CASE("hilbert table ranges") {
    auto rows = hilbert_table(2, 32);
    REQUIRE(rows.size() == 16);
    CHECK(rows.front().e == 2);
    CHECK(rows.back().e == 32);

    auto single = hilbert_table(6, 6);
    REQUIRE(single.size() == 1);
    CHECK(single[0].pell->a == 2);

    CHECK(hilbert_table(4, 2).empty());
}

TEST_CASE("second type by parity equals ambient divisibility for e <= 200") {
    for (long e = 2; e <= 200; e += 2) {
        auto row = analyze_hilbert_square(e);
        if (!row.second)
            continue;
        auto mp = *row.pell;
        CHECK(rays::second_type_by_parity(row.d, ContractionType::H, mp.a, mp.b) ==
              rays::second_type_by_ambient(row.d, ContractionType::H, mp.a, mp.b));
    }
}
