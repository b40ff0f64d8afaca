#pragma once

#include "hkrays/rays.hpp"

namespace hkrays::hilbert {

using lattice::ContractionType;
using lattice::Vec2;
using rays::FloppingWall;
using rays::PellFundamental;

// One row of the Hilbert-square table: the extremal rays of S^[2] for a
// K3 surface S of degree e with Picard rank one.  d = e/2, |det(Pic)| = 2e,
// the first ray always has type H, and r H + s tau has divisibility two
// exactly when r is even.
struct HilbertRow {
    Int e;
    Int d;
    Int det_abs;
    std::optional<PellFundamental> pell;     // blank cell when d is a square
    ContractionType first = ContractionType::H;
    std::optional<ContractionType> second;   // absent when Lagrangian
    std::optional<Vec2> Hprime;
    std::optional<Vec2> tauPrime;
    std::optional<Vec2> lagrangian;
    std::vector<FloppingWall> flopping_walls;
    Int model_count;
    std::optional<Int> fm_partners;
    std::vector<rays::ConicBundleInvariants> conic_bundles;
};

HilbertRow analyze_hilbert_square(const Int& e);

// Rows for every even e in [lo, hi], ascending; empty when lo > hi.
std::vector<HilbertRow> hilbert_table(const Int& lo, const Int& hi);

} // namespace hkrays::hilbert
