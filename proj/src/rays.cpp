#include "hkrays/rays.hpp"

#include <algorithm>
#include <set>

namespace hkrays::rays {

using lattice::embed_pair;
using lattice::EmbeddedPair;
using lattice::LatticeVector;

namespace {

void require_positive(const Int& d) {
    if (d <= 0)
        throw domain_error("d must be positive, got " + d.get_str());
}

// first-ray congruences of the type table
void require_type_congruence(const Int& d, ContractionType t) {
    if (t == ContractionType::M1 && fmod(d, 4) != 1)
        throw domain_error("type M1 requires d = 1 mod 4");
    if (t == ContractionType::M3 && fmod(d, 4) != 3)
        throw domain_error("type M3 requires d = 3 mod 4");
    if (t == ContractionType::B1 && fmod(d, 4) != 0)
        throw domain_error("type B1 requires d = 0 mod 4");
}

void require_flags(ContractionType first, ClassificationFlags f) {
    if ((first == ContractionType::M1) != f.det_is_odd_mod4)
        throw domain_error("first type is M1 iff |det(Pic)| is odd (= d = 1 mod 4)");
    if ((first == ContractionType::B0) != !f.disc_group_cyclic)
        throw domain_error("first type is B0 iff the discriminant group of T(X) "
                           "is not cyclic");
}

} // namespace

std::pair<int, int> type_divisibilities(ContractionType t) {
    switch (t) {
    case ContractionType::H: return {1, 2};
    case ContractionType::M3: return {2, 1};
    default: return {1, 1};
    }
}

SecondRay second_ray(const Int& d) {
    require_positive(d);
    auto mp = pell::minimal_pell(d);
    if (!mp)
        throw lagrangian_case("second_ray: d = " + d.get_str() +
                              " is a perfect square; the second extremal ray "
                              "is Lagrangian");
    return {{mp->a, -mp->b * d}, {mp->b, -mp->a}, *mp};
}

Vec2 lagrangian_ray(const Int& d) {
    require_positive(d);
    if (!is_perfect_square(d))
        throw domain_error("lagrangian_ray: d must be a perfect square");
    return {1, -isqrt(d)};
}

Int div_in_ambient(const Int& d, ContractionType first, const Vec2& v) {
    EmbeddedPair emb = embed_pair(first, d);
    LatticeVector w(5);
    for (int i = 0; i < 5; ++i)
        w[i] = v.r * emb.H[i] + v.s * emb.tau[i];
    return lattice::AmbientModel::the_lattice().divisibility(w);
}

ContractionType second_type_by_parity(const Int& d, ContractionType first,
                                      const Int& a, const Int& b) {
    const bool a_even = fmod(a, 2) == 0;
    const bool b_even = fmod(b, 2) == 0;
    ContractionType second;
    switch (first) {
    case ContractionType::H:
        if (b_even)
            second = ContractionType::H;
        else if (fmod(d, 4) == 3)
            second = ContractionType::M3;
        else if (fmod(d, 4) == 0)
            second = ContractionType::B1;
        else
            throw consistency_error("b odd with d = 1,2 mod 4 is impossible "
                                    "for x^2 - d y^2 = 1");
        break;
    case ContractionType::M3:
        second = a_even ? ContractionType::H : ContractionType::M3;
        break;
    case ContractionType::B1:
        second = b_even ? ContractionType::B1 : ContractionType::H;
        break;
    default:
        throw domain_error("parity rule applies to first-ray types H, M3, B1");
    }

    // mixed-pair arithmetic: H+M3 forces a even and b odd (d = 3 mod 4);
    // H+B1 forces d = 0 mod 8 and a, b odd
    const bool mixed_m3 =
        (first == ContractionType::H && second == ContractionType::M3) ||
        (first == ContractionType::M3 && second == ContractionType::H);
    const bool mixed_b1 =
        (first == ContractionType::H && second == ContractionType::B1) ||
        (first == ContractionType::B1 && second == ContractionType::H);
    if (mixed_m3 && (fmod(d, 4) != 3 || a_even == false || b_even == true))
        throw consistency_error("H+M3 pair with inconsistent parities");
    if (mixed_b1 && (fmod(d, 8) != 0 || a_even || b_even))
        throw consistency_error("H+B1 pair requires d = 0 mod 8 and a, b odd");
    return second;
}

ContractionType second_type_by_ambient(const Int& d, ContractionType first,
                                       const Int& a, const Int& b) {
    const Int div_tau = div_in_ambient(d, first, {b, -a});
    const Int div_H = div_in_ambient(d, first, {a, -b * d});

    ContractionType second;
    if (div_tau == 2)
        second = ContractionType::H;
    else if (fmod(d, 4) == 3)
        second = ContractionType::M3;
    else if (fmod(d, 4) == 0)
        second = ContractionType::B1;
    else
        throw consistency_error("divisibility-one second ray with d = 1,2 mod 4");

    auto [want_H, want_tau] = type_divisibilities(second);
    if (div_H != want_H || div_tau != want_tau)
        throw consistency_error(
            "ambient divisibilities (" + div_H.get_str() + "," +
            div_tau.get_str() + ") do not match type " +
            lattice::type_name(second));
    return second;
}

std::pair<ContractionType, ContractionType>
classify_pair(const Int& d, ContractionType first, ClassificationFlags flags) {
    require_positive(d);
    require_type_congruence(d, first);
    require_flags(first, flags);

    if (is_perfect_square(d))
        throw lagrangian_case("classify_pair: |det(Pic)| is a square; the "
                              "second extremal ray is Lagrangian");

    if (first == ContractionType::M1)
        return {first, ContractionType::M1};
    if (first == ContractionType::B0)
        return {first, ContractionType::B0};

    const auto mp = *pell::minimal_pell(d);
    const ContractionType by_ambient =
        second_type_by_ambient(d, first, mp.a, mp.b);
    const ContractionType by_parity =
        second_type_by_parity(d, first, mp.a, mp.b);
    if (by_ambient != by_parity)
        throw consistency_error("ambient and parity classifications disagree");
    return {first, by_ambient};
}

namespace {

// Movable-cone interior: slopes s/r strictly between -b d / a and 0
// (between -sqrt(d) and 0 when d is a square).  Exact rationals only.
struct MovableCone {
    Rat lower; // slope of the second boundary ray
    bool inside(const Rat& slope) const { return lower < slope && slope < 0; }
};

MovableCone movable_cone(const Int& d) {
    if (is_perfect_square(d))
        return {Rat(-isqrt(d))};
    auto mp = *pell::minimal_pell(d);
    Rat lo(-mp.b * d, mp.a);
    lo.canonicalize();
    return {lo};
}

std::optional<FloppingWall> wall_from_solution(const Int& d,
                                               ContractionType first,
                                               const pell::Solution& sol,
                                               const MovableCone& cone) {
    // kappa = r H + s tau with (s, r) = sol solving s^2 - d r^2 = 5
    Vec2 kappa = lattice::sign_normalized({sol.second, sol.first});
    if (div_in_ambient(d, first, kappa) != 2)
        return std::nullopt;
    // wall of kappa: s_w / r_w = d r / s
    Rat slope(d * kappa.r, kappa.s);
    slope.canonicalize();
    if (!cone.inside(slope))
        return std::nullopt;
    Vec2 ray = lattice::sign_normalized(
        lattice::primitive_part({kappa.s, d * kappa.r}));
    return FloppingWall{kappa, ray};
}

std::vector<FloppingWall> sort_walls(std::set<Vec2>&& kappas, const Int& d,
                                     ContractionType first,
                                     const MovableCone& cone) {
    std::vector<FloppingWall> walls;
    for (const Vec2& k : kappas)
        walls.push_back(*wall_from_solution(d, first, {k.s, k.r}, cone));
    std::sort(walls.begin(), walls.end(),
              [&](const FloppingWall& l, const FloppingWall& r) {
                  Rat sl(d * l.kappa.r, l.kappa.s), sr(d * r.kappa.r, r.kappa.s);
                  sl.canonicalize();
                  sr.canonicalize();
                  return sl < sr;
              });
    return walls;
}

} // namespace

std::vector<FloppingWall> flopping_walls(const Int& d, ContractionType first) {
    require_positive(d);
    if (is_perfect_square(d))
        throw domain_error("flopping_walls: d must not be a perfect square");
    require_type_congruence(d, first);
    if (first == ContractionType::M1 || first == ContractionType::B0)
        return {}; // Pic embeds in the unimodular K3 lattice

    const auto unit = *pell::minimal_pell(d);
    const auto classes = pell::pell_general(d, 5);
    const MovableCone cone = movable_cone(d);

    // In-cone walls satisfy |r| < b sqrt(5): the y-coordinate of any
    // relevant solution is bounded, so orbit expansion terminates.
    const Int r_bound = 3 * unit.b + 5;

    std::set<Vec2> kappas;
    OrbitBudget budget;
    for (const auto& rep : classes.reps) {
        for (int dir = 0; dir < 2; ++dir) {
            pell::Solution cur = rep;
            while (abs(cur.second) <= r_bound) {
                budget.spend("flopping_walls");
                if (auto w = wall_from_solution(d, first, cur, cone))
                    kappas.insert(w->kappa);
                cur = dir == 0 ? pell::unit_step(cur, unit)
                               : pell::unit_step_back(cur, unit);
            }
        }
    }
    return sort_walls(std::move(kappas), d, first, cone);
}

std::vector<FloppingWall> flopping_walls_square_disc(const Int& d,
                                                     ContractionType first) {
    require_positive(d);
    if (!is_perfect_square(d))
        throw domain_error("flopping_walls_square_disc: d must be a square");
    require_type_congruence(d, first);
    if (first == ContractionType::M1 || first == ContractionType::B0)
        return {};

    const MovableCone cone = movable_cone(d);
    std::set<Vec2> kappas;
    for (const auto& sol : pell::square_pell_solutions(isqrt(d), 5))
        if (auto w = wall_from_solution(d, first, sol, cone))
            kappas.insert(w->kappa);
    return sort_walls(std::move(kappas), d, first, cone);
}

ConicBundleInvariants conic_invariants(ContractionType type, const Int& d) {
    require_positive(d);
    require_type_congruence(d, type);
    ConicBundleInvariants ci;
    ci.type = type;
    switch (type) {
    case ContractionType::H:
        ci.hs_square = 2 * d;
        ci.tx_relation = "T(S)";
        ci.heegner_label = "D^(1)_{2d,2d,alpha}";
        break;
    case ContractionType::M1:
        ci.hs_square = 2 * d;
        ci.tx_relation = "T(S)";
        ci.heegner_label = "D^(1)_{2d,2d,beta}";
        break;
    case ContractionType::M3:
        ci.hs_square = 2 * d;
        ci.tx_relation = "T(S)";
        ci.heegner_label = "D^(2)_{2d,2d,alpha}";
        break;
    case ContractionType::B1:
        ci.hs_square = exact_div(d, 2);
        ci.brauer = BrauerInvariants{1, 1};
        ci.tx_relation = "T(S,alpha)";
        ci.heegner_label = "D^(1)_{2d,2d,beta}";
        break;
    case ContractionType::B0:
        ci.hs_square = 2 * d;
        ci.brauer = BrauerInvariants{0, 1};
        ci.tx_relation = "T(S,alpha)";
        ci.heegner_label = "D^(1)_{2d,8d,alpha}";
        break;
    }
    return ci;
}

Int fm_partner_count(const Int& d) {
    if (d <= 0)
        throw domain_error("fm_partner_count: d must be positive");
    if (d == 1)
        throw domain_error("fm_partner_count: undefined for d = 1");
    Int n = d;
    int primes = 0;
    for (Int p = 2; p * p <= n; ++p) {
        if (divides(p, n)) {
            ++primes;
            while (divides(p, n))
                n = exact_div(n, p);
        }
    }
    if (n > 1)
        ++primes;
    Int out = 1;
    mpz_mul_2exp(out.get_mpz_t(), out.get_mpz_t(),
                 static_cast<mp_bitcnt_t>(primes - 1));
    return out;
}

namespace {

RayProfile profile_for(ContractionType t, Vec2 H, Vec2 tau) {
    auto [dH, dTau] = type_divisibilities(t);
    return {H, tau, t, dH, dTau, t == ContractionType::H ? 2 : 1};
}

} // namespace

RayPairReport analyze(const Int& d, ContractionType first,
                      ClassificationFlags flags) {
    require_positive(d);
    require_type_congruence(d, first);
    require_flags(first, flags);
    if (first == ContractionType::M1)
        throw domain_error(
            "analyze: type M1 has Picard lattice of odd determinant d, an "
            "index-two overlattice of <2d>+<-2>; its second-ray classes are "
            "half-integral in the (H, tau) basis and are not reported here. "
            "classify_pair still yields the type pair M1+M1.");

    RayPairReport rep;
    rep.d = d;
    rep.det_abs = 4 * d;
    rep.first = profile_for(first, {1, 0}, {0, 1});

    if (is_perfect_square(d)) {
        rep.second = LagrangianRay{lagrangian_ray(d)};
        rep.flopping_walls = flopping_walls_square_disc(d, first);
        rep.conic_bundles = {conic_invariants(first, d)};
    } else {
        SecondRay sr = second_ray(d);
        rep.pell = sr.pell;
        const auto types = classify_pair(d, first, flags);
        rep.second = profile_for(types.second, sr.Hprime, sr.tauPrime);

        const auto& pic = lattice::picard_rank2(d);
        LatticeVector hp = {sr.Hprime.r, sr.Hprime.s};
        LatticeVector tp = {sr.tauPrime.r, sr.tauPrime.s};
        if (pic.q_value(hp) != 2 * d || pic.q_value(tp) != -2 ||
            pic.pairing(hp, tp) != 0 || !lattice::is_primitive(hp) ||
            !lattice::is_primitive(tp))
            throw consistency_error("second ray fails its quadratic contract");

        rep.flopping_walls = flopping_walls(d, first);
        rep.conic_bundles = {conic_invariants(first, d),
                             conic_invariants(types.second, d)};
    }
    rep.model_count = Int(rep.flopping_walls.size()) + 1;
    if (d >= 2)
        rep.fm_partners = fm_partner_count(d);
    return rep;
}

} // namespace hkrays::rays
