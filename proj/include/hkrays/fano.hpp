#pragma once

#include "hkrays/rays.hpp"

namespace hkrays::fano {

using lattice::ContractionType;
using lattice::IntegralLattice;
using lattice::Vec2;
using rays::PellFundamental;

/*
 * Extremal rays of the Fano variety F of lines on a cubic fourfold with a
 * rank-two lattice of codimension-two cycles of discriminant e (e > 6,
 * e = 0 or 2 mod 6).  Pic(F) has basis (g, gamma) with g the Pluecker
 * class, Gram matrix
 *     [6 0; 0 -e/3]        for e = 0 mod 6,
 *     [6 2; 2 (2-e)/3]     for e = 2 mod 6,
 * and a primitive r g + s gamma has divisibility 2 iff s is even.
 *
 * (-2)-classes x g + y gamma correspond to solutions of z^2 - d y^2 = -3
 * with d = e/2: z = 3x when e = 0 mod 6, z = 3x + y when e = 2 mod 6.
 * The chamber of g is cut out by the nearest wall on each side of the ray
 * of g; a side with no wall is bounded by an isotropic ray (square d).
 */

struct FanoPicard {
    Int e;
    IntegralLattice gram;
};

FanoPicard fano_gram(const Int& e);

// Divisibility of a primitive class r g + s gamma in H^2(F, Z).
int fano_divisibility(const Int& r, const Int& s);

struct Minus2Chamber {
    bool has_minus_two = false;
    // chamber walls, as effective (-2)-classes, at most one per side of g
    std::optional<Vec2> left_wall;  // wall slope < 0
    std::optional<Vec2> right_wall; // wall slope > 0
    // isotropic boundary rays on sides without a wall (square d only)
    std::optional<Vec2> left_isotropic;
    std::optional<Vec2> right_isotropic;

    std::vector<Vec2> walls() const;
    std::vector<Vec2> isotropic_boundaries() const;
};

Minus2Chamber minus_two_chamber(const Int& e);

struct FanoRay {
    ContractionType type;
    Vec2 H;   // primitive generator of tau-perp on the movable side
    Vec2 tau; // effective (-2)-class
    Int scroll_degree;
};

// tau must be a chamber wall of g, normalized to the effective side
// (r > 0 for e = 0 mod 6, 3r + s > 0 for e = 2 mod 6).
FanoRay ray_profile(const Int& e, const Vec2& tau);

// (**): e even and e/2 divisible by neither nine nor any prime p = 2 mod 3.
bool admissible_star(const Int& e);

// (**)': e even and every prime p = 2 mod 3 has even exponent in e/2.
bool admissible_star_prime(const Int& e);

struct HWitness {
    Int a;
    Int n; // e = 2 (n^2 + n + 1) / a^2
};

// A ray of type H exists iff x^2 - 2e y^2 = -3 is solvable
// (x = 2n + 1, y = a).
std::optional<HWitness> h_ray_witness(const Int& e);
bool has_H_ray(const Int& e);

struct FanoRow {
    Int e;
    Int d;
    std::string admissibility; // "(**)", "(**)'" or "neither"
    bool has_minus_two = false;
    std::optional<PellFundamental> pell;
    std::vector<FanoRay> rays;          // 0, 1 or 2, in table order
    std::vector<Vec2> lagrangians;      // isotropic boundary rays, 0-2
};

FanoRow analyze_fano(const Int& e);

} // namespace hkrays::fano
