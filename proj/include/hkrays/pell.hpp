#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hkrays/bigint.hpp"

namespace hkrays::pell {

using Solution = std::pair<Int, Int>; // (x, y) with x^2 - d y^2 = N

/*
 * Exact solvers for the classical Pell equation x^2 - d y^2 = 1 and the
 * generalized equation x^2 - d y^2 = N.
 *
 * minimal_pell expands the continued fraction of sqrt(d) and returns the
 * first convergent of norm 1, which is the minimal positive solution.
 *
 * pell_general runs the PQa recurrence on every residue class z with
 * z^2 = d mod |N/f^2| (one branch per square divisor f^2 of N), checks
 * every convergent pair against the equation exactly, and reduces the
 * hits to one canonical representative per class.  Two solutions are in
 * the same class when they differ by a power of the fundamental unit or
 * by a global sign change.
 */

struct PellFundamental {
    Int d; // positive, not a perfect square
    Int a; // a^2 - d b^2 = 1, a,b > 0, a minimal
    Int b;
};

// Minimal positive solution of x^2 - d y^2 = 1, absent when d is a
// perfect square (then y = 0 is forced and there is no positive solution).
std::optional<PellFundamental> minimal_pell(const Int& d);

struct GeneralPellClassSet {
    Int d;
    Int n;
    // One canonical representative per class, sorted by (y, x).  The
    // canonical representative is the class element with x >= 0, y >= 0
    // that minimizes (y, x) lexicographically.  Empty iff the equation
    // has no integer solutions.
    std::vector<Solution> reps;

    bool empty() const { return reps.empty(); }
};

GeneralPellClassSet pell_general(const Int& d, const Int& n);

// count successive compositions of sol with the unit:
// (x', y') = (a x + d b y, b x + a y).
std::vector<Solution> pell_orbit(const Solution& sol,
                                 const PellFundamental& unit,
                                 std::size_t count);

// Single composition with the unit (or its inverse).
Solution unit_step(const Solution& sol, const PellFundamental& unit);
Solution unit_step_back(const Solution& sol, const PellFundamental& unit);

bool is_solvable(const Int& d, const Int& n);

// Complete solution list, up to sign, of x^2 - (m^2) y^2 = n for a square
// discriminant (the equation factors as (x-my)(x+my) = n, so the list is
// finite).  Representatives are normalized to y > 0, or y = 0 and x > 0.
std::vector<Solution> square_pell_solutions(const Int& m, const Int& n);

} // namespace hkrays::pell
