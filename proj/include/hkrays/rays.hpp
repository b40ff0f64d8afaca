#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hkrays/lattice.hpp"
#include "hkrays/pell.hpp"

namespace hkrays::rays {

using lattice::ContractionType;
using lattice::Vec2;
using pell::PellFundamental;

/*
 * Classification of the two extremal rays of the movable cone for Picard
 * rank two, in the working basis (H, tau) of the first ray: q(H) = 2d,
 * q(tau) = -2, (H, tau) = 0.
 *
 * The second divisorial ray, when the discriminant is not a square, is
 *   H' = a H - b d tau,   tau' = b H - a tau
 * for the minimal Pell solution (a, b) of x^2 - d y^2 = 1.  The type of
 * the second ray is read off the divisibility of tau' (and H') in the
 * ambient lattice, and cross-checked against the parity rules:
 * second type H iff b even (first H), iff a even (first M3), iff b odd
 * (first B1).  First-ray types M1 and B0 always pair with themselves.
 */

struct SecondRay {
    Vec2 Hprime;   // (a, -b d)
    Vec2 tauPrime; // (b, -a)
    PellFundamental pell;
};

// Throws lagrangian_case when d is a perfect square.
SecondRay second_ray(const Int& d);

// Primitive isotropic class bounding the movable cone for square d,
// normalized with positive H-coefficient: (1, -sqrt(d)).
Vec2 lagrangian_ray(const Int& d);

// Facts the classification takes as hypotheses rather than computing from
// rank-21 transcendental lattices: |det(Pic)| odd (type M1) and
// non-cyclic discriminant group (type B0).
struct ClassificationFlags {
    bool det_is_odd_mod4 = false;
    bool disc_group_cyclic = true;
};

std::pair<ContractionType, ContractionType>
classify_pair(const Int& d, ContractionType first, ClassificationFlags flags);

// The two routes for the second-ray type; classify_pair requires them to
// agree.  Both assume the first ray is of type H, M3 or B1.
ContractionType second_type_by_parity(const Int& d, ContractionType first,
                                      const Int& a, const Int& b);
ContractionType second_type_by_ambient(const Int& d, ContractionType first,
                                       const Int& a, const Int& b);

// Divisibility of r H + s tau in the full degree-2 lattice, under the
// embedding determined by the first-ray type (1 or 2).
Int div_in_ambient(const Int& d, ContractionType first, const Vec2& v);

struct FloppingWall {
    Vec2 kappa;          // q(kappa) = -10, divisibility 2
    Vec2 orthogonal_ray; // primitive generator of kappa-perp in the movable cone
};

// All flopping walls strictly inside the movable cone.  The first-ray
// type selects the divisibility rule; types M1 and B0 admit none since
// their Picard lattice embeds in the unimodular K3 lattice.
std::vector<FloppingWall> flopping_walls(const Int& d, ContractionType first);

// Finite analogue for square d (no fundamental unit): walls from the
// divisor-pair solutions of s^2 - d r^2 = 5.
std::vector<FloppingWall> flopping_walls_square_disc(const Int& d,
                                                     ContractionType first);

struct BrauerInvariants {
    int hs_b_halves; // h_S . B = hs_b_halves / 2 mod Z
    int b_sq_halves; // B^2    = b_sq_halves / 2 mod Z
};

struct ConicBundleInvariants {
    ContractionType type;
    Int hs_square;                          // 2d, or d/2 for type B1
    std::optional<BrauerInvariants> brauer; // present iff type B0 or B1
    std::string tx_relation;                // "T(S)" or "T(S,alpha)"
    std::string heegner_label;              // opaque
};

ConicBundleInvariants conic_invariants(ContractionType type, const Int& d);

// 2^(number of distinct primes dividing d - 1); requires d >= 2.
Int fm_partner_count(const Int& d);

struct RayProfile {
    Vec2 Hclass;
    Vec2 tauClass;
    ContractionType type;
    int divH;
    int divTau;
    int exceptional_multiplicity; // class of E is tau or 2 tau
};

struct LagrangianRay {
    Vec2 isotropic_class;
};

using RayKind = std::variant<RayProfile, LagrangianRay>;

struct RayPairReport {
    Int d;
    Int det_abs;
    std::optional<PellFundamental> pell; // absent for square d
    RayProfile first;
    RayKind second;
    std::vector<FloppingWall> flopping_walls;
    Int model_count; // walls + 1
    std::optional<Int> fm_partners; // absent for d = 1
    std::vector<ConicBundleInvariants> conic_bundles; // one per divisorial ray

    bool second_is_divisorial() const {
        return std::holds_alternative<RayProfile>(second);
    }
};

RayPairReport analyze(const Int& d, ContractionType first,
                      ClassificationFlags flags = {});

// Table-1 divisibility pattern (div H, div tau) for a type.
std::pair<int, int> type_divisibilities(ContractionType t);

} // namespace hkrays::rays
