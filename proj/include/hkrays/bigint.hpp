#pragma once

#include <cstdlib>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "hkrays/errors.hpp"

namespace hkrays {

// All lattice and Pell arithmetic is exact and unbounded; Pell units grow
// exponentially in d, so there is no fixed-width fast path anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division (rounds toward -infinity, like mpz_fdiv).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Non-negative remainder.
inline Int fmod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool divides(const Int& b, const Int& a) {
    return b != 0 && mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int exact_div(const Int& a, const Int& b) {
    if (!divides(b, a))
        throw consistency_error("exact_div: " + b.get_str() +
                                " does not divide " + a.get_str());
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Safety cap for unit-orbit expansions.  HKRAYS_MAX_ORBIT overrides the
// default of 10^6 steps; exceeding the cap is a consistency failure.
inline unsigned long max_orbit_steps() {
    if (const char* env = std::getenv("HKRAYS_MAX_ORBIT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0)
            return v;
    }
    return 1000000UL;
}

struct OrbitBudget {
    unsigned long left = max_orbit_steps();
    void spend(const char* where) {
        if (left == 0)
            throw consistency_error(std::string("orbit expansion exceeded "
                                                "HKRAYS_MAX_ORBIT in ") +
                                    where);
        --left;
    }
};

} // namespace hkrays
