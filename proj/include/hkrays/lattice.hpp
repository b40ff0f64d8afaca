#pragma once

#include <string>
#include <vector>

#include "hkrays/bigint.hpp"

namespace hkrays::lattice {

// The five isometry classes of contraction embeddings.
enum class ContractionType { H, M1, M3, B0, B1 };

const char* type_name(ContractionType t);

using LatticeVector = std::vector<Int>;

// Even integral lattice with a fixed basis, given by its Gram matrix.
// Hosts the BBF quadratic form q(v) = v^T G v and the pairing v^T G w.
class IntegralLattice {
  public:
    // gram is row-major, rank x rank; must be symmetric with even diagonal.
    IntegralLattice(int rank, std::vector<Int> gram);

    int rank() const { return rank_; }
    const Int& gram(int i, int j) const { return gram_[i * rank_ + j]; }

    Int q_value(const LatticeVector& v) const;
    Int pairing(const LatticeVector& v, const LatticeVector& w) const;

    // Positive generator of { (v, w) : w in the lattice }, i.e. the gcd of
    // the entries of G v.  v must be nonzero.
    Int divisibility(const LatticeVector& v) const;

    // det(G); the lattice discriminant up to the sign convention.
    Int discriminant() const;

  private:
    void require_dim(const LatticeVector& v, const char* op) const;

    int rank_;
    std::vector<Int> gram_;
};

bool is_primitive(const LatticeVector& v);

// Primitive isotropic vectors of a rank-2 indefinite lattice, one per ray
// (up to sign, first nonzero coordinate positive).  Empty iff |det| is not
// a perfect square; otherwise exactly two rays.
std::vector<LatticeVector> primitive_isotropic_rays(const IntegralLattice& L);

// <2d> + <-2>: the Picard lattice of a fourfold with a divisorial
// contraction, basis (H, tau).
IntegralLattice picard_rank2(const Int& d);

IntegralLattice hyperbolic_plane();

/*
 * Ambient receiver for the explicit contraction embeddings: U + U + <-2>,
 * basis (u1+, u1-, u2+, u2-, delta), |det| = 2.
 *
 * The full degree-2 cohomology lattice is U^3 + E8(-1)^2 + <-2>; every
 * embedding below is supported on two hyperbolic summands and delta, and
 * the omitted summands pair to zero with everything here, so divisibility
 * gcds computed in this rank-5 model agree with those in the full lattice.
 */
struct AmbientModel {
    static const IntegralLattice& the_lattice();
    static LatticeVector delta();
    static const std::vector<std::string>& basis_labels();
};

struct EmbeddedPair {
    LatticeVector H;
    LatticeVector tau;
};

// The explicit ambient embeddings, by first-ray type:
//   H  (any d):          H = (1, d)_1,                tau = delta
//   B1 (d = 0 mod 4):    H = (1, d)_1,                tau = (1,-d)_1 + 2(1,d/4)_2 + delta
//   M3 (d = 3 mod 4):    H = 2(1,(d+1)/4)_1 + delta,  tau = (1,-1)_2
// where (r, s)_i lies in the i-th hyperbolic summand.
EmbeddedPair embed_pair(ContractionType type, const Int& d);

// Coordinates in a fixed rank-2 basis: r on the big-and-nef generator
// (H or g), s on the complementary generator (tau or gamma).
struct Vec2 {
    Int r;
    Int s;

    bool operator==(const Vec2&) const = default;
    bool operator<(const Vec2& o) const {
        return r != o.r ? r < o.r : s < o.s;
    }
    Vec2 operator-() const { return {-r, -s}; }
};

// First nonzero coordinate made positive.
Vec2 sign_normalized(Vec2 v);

// Divide out the content; v must be nonzero.
Vec2 primitive_part(const Vec2& v);

} // namespace hkrays::lattice
