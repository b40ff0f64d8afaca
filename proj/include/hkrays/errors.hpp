#pragma once

#include <stdexcept>
#include <string>

namespace hkrays {

// Invalid input (bad e, bad d, congruence violation, malformed CLI args).
// Maps to process exit status 1.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed (ambient/parity disagreement, Prop-style
// ray reconstruction mismatch, orbit cap exceeded).  Never downgraded;
// maps to process exit status 2.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised where a second divisorial ray was requested but the Picard
// discriminant is a perfect square, so the second extremal ray is
// isotropic (a Lagrangian fibration) instead.
struct lagrangian_case : domain_error {
    using domain_error::domain_error;
};

} // namespace hkrays
