#include <doctest.h>

#include "hkrays/fano.hpp"

using namespace hkrays;
using namespace hkrays::fano;
using lattice::ContractionType;
using lattice::Vec2;

TEST_CASE("fano gram matrices") {
    auto g24 = fano_gram(24);
    CHECK(g24.gram.gram(0, 0) == 6);
    CHECK(g24.gram.gram(0, 1) == 0);
    CHECK(g24.gram.gram(1, 1) == -8);
    CHECK(abs(g24.gram.discriminant()) == 48);

    auto g14 = fano_gram(14);
    CHECK(g14.gram.gram(0, 0) == 6);
    CHECK(g14.gram.gram(0, 1) == 2);
    CHECK(g14.gram.gram(1, 1) == -4);
    CHECK(abs(g14.gram.discriminant()) == 28);

    // e = 12 is a valid lattice input even though no table row uses it
    auto g12 = fano_gram(12);
    CHECK(g12.gram.gram(1, 1) == -4);

    CHECK_THROWS_AS(fano_gram(6), domain_error);
    CHECK_THROWS_AS(fano_gram(15), domain_error);
    CHECK_THROWS_AS(fano_gram(16), domain_error);
}

TEST_CASE("fano divisibility rule") {
    CHECK(fano_divisibility(1, 0) == 2); // g itself
    CHECK(fano_divisibility(1, 2) == 2);
    CHECK(fano_divisibility(3, 5) == 1);
    CHECK(fano_divisibility(0, 1) == 1);
    CHECK_THROWS_AS(fano_divisibility(2, 4), domain_error);
}

TEST_CASE("chamber of the Pluecker class") {
    auto c14 = minus_two_chamber(14);
    CHECK(c14.has_minus_two);
    CHECK(c14.right_wall == Vec2{1, 2}); // g + 2 gamma
    CHECK(c14.left_wall == Vec2{1, -1}); // g - gamma
    CHECK(c14.isotropic_boundaries().empty());

    auto c74 = minus_two_chamber(74);
    CHECK_FALSE(c74.has_minus_two);
    CHECK(c74.walls().empty());
    CHECK(c74.isotropic_boundaries().empty());

    auto c8 = minus_two_chamber(8);
    CHECK(c8.has_minus_two);
    CHECK(c8.right_wall == Vec2{0, 1}); // gamma
    CHECK_FALSE(c8.left_wall.has_value());
    CHECK(c8.left_isotropic == Vec2{1, -1}); // g - gamma

    auto c78 = minus_two_chamber(78);
    CHECK(c78.right_wall == Vec2{2, 1});
    CHECK(c78.left_wall == Vec2{2, -1});
}

TEST_CASE("ray profiles") {
    auto m3 = ray_profile(14, {1, -1});
    CHECK(m3.type == ContractionType::M3);
    CHECK(m3.H == Vec2{3, -2});
    CHECK(m3.scroll_degree == 4);

    auto h26 = ray_profile(26, {3, -2});
    CHECK(h26.type == ContractionType::H);
    CHECK(h26.H == Vec2{11, -7});
    CHECK(h26.scroll_degree == 7);

    auto b56 = ray_profile(56, {10, 7});
    CHECK(b56.type == ContractionType::B1);
    CHECK(b56.H == Vec2{53, 37});
    CHECK(b56.scroll_degree == 74);

    CHECK_THROWS_AS(ray_profile(14, {1, 1}), domain_error); // not a (-2)-class
}

TEST_CASE("admissibility predicates") {
    CHECK(admissible_star(14));
    CHECK_FALSE(admissible_star(16));
    CHECK(admissible_star(74));
    CHECK(admissible_star(2)); // e/2 = 1 has no prime divisors
    CHECK_FALSE(admissible_star(18)); // 9 | 9
    CHECK_FALSE(admissible_star(7)); // odd

    CHECK(admissible_star_prime(8));
    CHECK(admissible_star_prime(24));
    CHECK(admissible_star_prime(56));
    CHECK_FALSE(admissible_star_prime(10)); // 5 has exponent one
    CHECK(admissible_star_prime(18));       // 9 = 3^2, no prime = 2 mod 3
    CHECK(admissible_star_prime(50));       // 25 = 5^2
}

TEST_CASE("existence of a type-H ray") {
    auto w14 = h_ray_witness(14);
    REQUIRE(w14.has_value());
    CHECK(w14->a == 1);
    CHECK(w14->n == 2); // 14 = 2 (4 + 2 + 1) / 1

    auto w38 = h_ray_witness(38);
    REQUIRE(w38.has_value());
    CHECK(w38->a == 7);
    CHECK(w38->n == 30); // 2 (900 + 30 + 1) / 49 = 38

    CHECK_FALSE(has_H_ray(78));
    CHECK_FALSE(has_H_ray(8));
    CHECK_FALSE(has_H_ray(24));
    CHECK(has_H_ray(42));

    // witness identity: e a^2 = 2 (n^2 + n + 1)
    for (long e : {14L, 26L, 38L, 42L}) {
        auto w = h_ray_witness(e);
        REQUIRE(w.has_value());
        CHECK(Int(e) * w->a * w->a == 2 * (w->n * w->n + w->n + 1));
    }
}

TEST_CASE("full fano rows") {
    auto r42 = analyze_fano(42);
    CHECK(r42.admissibility == "(**)");
    CHECK(r42.pell->a == 55);
    CHECK(r42.pell->b == 12);
    REQUIRE(r42.rays.size() == 2);
    CHECK(r42.rays[0].type == ContractionType::H);
    CHECK(r42.rays[1].type == ContractionType::H);
    CHECK(r42.rays[0].H == Vec2{14, 9});
    CHECK(r42.rays[1].H == Vec2{14, -9});
    CHECK(r42.rays[0].tau == Vec2{3, 2});
    CHECK(r42.rays[1].tau == Vec2{3, -2});
    CHECK(r42.rays[0].scroll_degree == 9);
    CHECK(r42.rays[1].scroll_degree == 9);

    auto r8 = analyze_fano(8);
    CHECK(r8.admissibility == "(**)'");
    CHECK_FALSE(r8.pell.has_value());
    REQUIRE(r8.rays.size() == 1);
    CHECK(r8.rays[0].type == ContractionType::B1);
    CHECK(r8.rays[0].H == Vec2{1, 1});
    CHECK(r8.rays[0].tau == Vec2{0, 1});
    CHECK(r8.rays[0].scroll_degree == 2);
    REQUIRE(r8.lagrangians.size() == 1);
    CHECK(r8.lagrangians[0] == Vec2{1, -1});

    auto r74 = analyze_fano(74);
    CHECK(r74.admissibility == "(**)");
    CHECK_FALSE(r74.has_minus_two);
    CHECK(r74.rays.empty());
    CHECK(r74.pell->a == 73);
    CHECK(r74.pell->b == 12);

    // mixed row keeps the H ray first
    auto r38 = analyze_fano(38);
    REQUIRE(r38.rays.size() == 2);
    CHECK(r38.rays[0].type == ContractionType::H);
    CHECK(r38.rays[0].scroll_degree == 61);
    CHECK(r38.rays[1].type == ContractionType::M3);
    CHECK(r38.rays[1].scroll_degree == 8);

    CHECK_THROWS_AS(analyze_fano(15), domain_error);
    CHECK_THROWS_AS(analyze_fano(6), domain_error);
}

TEST_CASE("row invariants over a range") {
    for (long e = 8; e <= 120; ++e) {
        if (e % 6 != 0 && e % 6 != 2)
            continue;
        auto row = analyze_fano(e);
        auto P = fano_gram(e);
        for (const auto& ray : row.rays) {
            CHECK(P.gram.q_value({ray.H.r, ray.H.s}) == e);
            CHECK(P.gram.q_value({ray.tau.r, ray.tau.s}) == -2);
            CHECK(P.gram.pairing({ray.H.r, ray.H.s}, {ray.tau.r, ray.tau.s}) == 0);
            CHECK(ray.scroll_degree > 0);
        }
        if (e % 6 == 0 && row.rays.size() == 2)
            CHECK(row.rays[0].type == row.rays[1].type);
    }
}
