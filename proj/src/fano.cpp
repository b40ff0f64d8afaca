#include "hkrays/fano.hpp"

#include <algorithm>

namespace hkrays::fano {

using lattice::LatticeVector;

namespace {

void require_valid_e(const Int& e) {
    if (e <= 6)
        throw domain_error("fano: e must exceed 6, got " + e.get_str());
    const Int m = fmod(e, 6);
    if (m != 0 && m != 2)
        throw domain_error("fano: e must be 0 or 2 mod 6, got " + e.get_str());
}

bool effective(const Int& e, const Vec2& v) {
    return fmod(e, 6) == 0 ? v.r > 0 : 3 * v.r + v.s > 0;
}

Vec2 effective_normalized(const Int& e, const Vec2& v) {
    const bool plus = effective(e, v), minus = effective(e, -v);
    if (plus == minus)
        throw consistency_error("effectivity criterion failed to pick a sign");
    return plus ? v : -v;
}

LatticeVector vec(const Vec2& v) { return {v.r, v.s}; }

// Wall of the (-2)-class n: primitive generator w of n-perp with
// (w, g) > 0, and its exact slope s/r relative to the ray of g.
struct Wall {
    Vec2 w;
    Rat slope;
};

Wall wall_of(const FanoPicard& P, const Vec2& n) {
    const Int gn_r = P.gram.gram(0, 0) * n.r + P.gram.gram(0, 1) * n.s;
    const Int gn_s = P.gram.gram(0, 1) * n.r + P.gram.gram(1, 1) * n.s;
    Vec2 w = lattice::primitive_part({-gn_s, gn_r});
    const Int wg = P.gram.pairing(vec(w), {1, 0});
    if (wg == 0)
        throw consistency_error("wall through the ample class");
    if (wg < 0)
        w = -w;
    if (w.r <= 0)
        throw consistency_error("wall outside the positive cone of g");
    Rat slope(w.s, w.r);
    slope.canonicalize();
    return {w, slope};
}

// Solutions (z, y) of z^2 - d y^2 = -3 map to (-2)-classes x g + y gamma:
// e = 0 mod 6: x = z/3 (z is always divisible by 3);
// e = 2 mod 6: x = (z - y)/3, flipping the sign of z when z != y mod 3
// (exactly one sign works, never neither).
Vec2 class_of_solution(const Int& e, pell::Solution sol) {
    if (fmod(e, 6) == 0) {
        if (fmod(sol.first, 3) != 0)
            throw consistency_error("z^2 = -3 mod 9 is impossible");
        return {exact_div(sol.first, 3), sol.second};
    }
    if (fmod(sol.first - sol.second, 3) != 0) {
        sol.first = -sol.first;
        if (fmod(sol.first - sol.second, 3) != 0)
            throw consistency_error("neither sign of z matches y mod 3");
    }
    return {exact_div(sol.first - sol.second, 3), sol.second};
}

struct SideCandidates {
    std::optional<std::pair<Rat, Vec2>> left;  // largest negative slope
    std::optional<std::pair<Rat, Vec2>> right; // smallest positive slope

    void offer(const Wall& wall, const Vec2& n) {
        if (wall.slope < 0) {
            if (!left || wall.slope > left->first)
                left = {wall.slope, n};
        } else {
            if (!right || wall.slope < right->first)
                right = {wall.slope, n};
        }
    }
};

// Walk one unit orbit of solutions until the wall slope crosses the ray
// of g; along an orbit the slope is strictly monotone, so the elements
// adjacent to the crossing are the orbit's nearest walls on each side.
void walk_orbit(const FanoPicard& P, const pell::PellFundamental& unit,
                const pell::Solution& rep, SideCandidates& cand) {
    auto slope_of = [&](const pell::Solution& s) {
        Vec2 n = class_of_solution(P.e, s);
        return std::pair<Wall, Vec2>(wall_of(P, n), n);
    };

    pell::Solution cur = rep;
    auto [wall, n] = slope_of(cur);
    cand.offer(wall, n);

    const bool start_positive = wall.slope > 0;
    // step in the direction that moves the slope toward zero
    pell::Solution next = pell::unit_step(cur, unit);
    auto [nwall, nn] = slope_of(next);
    const bool forward_converges =
        start_positive ? nwall.slope < wall.slope : nwall.slope > wall.slope;

    OrbitBudget budget;
    for (;;) {
        budget.spend("minus_two_chamber");
        cur = forward_converges ? pell::unit_step(cur, unit)
                                : pell::unit_step_back(cur, unit);
        auto [w, cls] = slope_of(cur);
        cand.offer(w, cls);
        if ((w.slope > 0) != start_positive)
            break; // crossed the ray of g; both sides now seen
    }
}

} // namespace

FanoPicard fano_gram(const Int& e) {
    require_valid_e(e);
    if (fmod(e, 6) == 0)
        return {e, IntegralLattice(2, {6, 0, 0, -exact_div(e, 3)})};
    return {e, IntegralLattice(2, {6, 2, 2, exact_div(2 - e, 3)})};
}

int fano_divisibility(const Int& r, const Int& s) {
    if (gcd(r, s) != 1)
        throw domain_error("fano_divisibility: class must be primitive");
    return fmod(s, 2) == 0 ? 2 : 1;
}

std::vector<Vec2> Minus2Chamber::walls() const {
    std::vector<Vec2> out;
    if (left_wall)
        out.push_back(*left_wall);
    if (right_wall)
        out.push_back(*right_wall);
    return out;
}

std::vector<Vec2> Minus2Chamber::isotropic_boundaries() const {
    std::vector<Vec2> out;
    if (left_isotropic)
        out.push_back(*left_isotropic);
    if (right_isotropic)
        out.push_back(*right_isotropic);
    return out;
}

Minus2Chamber minus_two_chamber(const Int& e) {
    const FanoPicard P = fano_gram(e);
    const Int d = exact_div(e, 2);
    Minus2Chamber ch;

    SideCandidates cand;
    if (is_perfect_square(d)) {
        // finitely many (-2)-classes; every one is a candidate wall
        for (const auto& sol : pell::square_pell_solutions(isqrt(d), -3)) {
            Vec2 n = class_of_solution(e, sol);
            cand.offer(wall_of(P, n), n);
            ch.has_minus_two = true;
        }
    } else {
        const auto unit = *pell::minimal_pell(d);
        const auto classes = pell::pell_general(d, -3);
        ch.has_minus_two = !classes.empty();
        for (const auto& rep : classes.reps)
            walk_orbit(P, unit, rep, cand);
    }

    if (cand.left)
        ch.left_wall = effective_normalized(e, cand.left->second);
    if (cand.right)
        ch.right_wall = effective_normalized(e, cand.right->second);

    if (!cand.left || !cand.right) {
        if (ch.has_minus_two && !is_perfect_square(d))
            throw consistency_error("unit orbits must produce walls on both "
                                    "sides of g for non-square d");
        if (is_perfect_square(d)) {
            for (const auto& ray : primitive_isotropic_rays(P.gram)) {
                Vec2 v{ray[0], ray[1]};
                const Int wg = P.gram.pairing(vec(v), {1, 0});
                Vec2 oriented = wg < 0 ? -v : v;
                Rat slope(oriented.s, oriented.r);
                slope.canonicalize();
                if (slope < 0 && !cand.left)
                    ch.left_isotropic = oriented;
                if (slope > 0 && !cand.right)
                    ch.right_isotropic = oriented;
            }
        }
    }
    return ch;
}

FanoRay ray_profile(const Int& e, const Vec2& tau) {
    const FanoPicard P = fano_gram(e);
    const Int d = exact_div(e, 2);
    if (P.gram.q_value(vec(tau)) != -2)
        throw domain_error("ray_profile: tau must be a (-2)-class");
    if (!effective(e, tau))
        throw domain_error("ray_profile: tau must be on the effective side");

    const Wall wall = wall_of(P, tau);
    const Vec2 H = effective_normalized(e, wall.w);
    if (P.gram.pairing(vec(H), {1, 0}) <= 0)
        throw consistency_error("H must pair positively with g");

    const int div_tau = fano_divisibility(tau.r, tau.s);
    const int div_H = fano_divisibility(H.r, H.s);
    ContractionType type;
    if (div_tau == 2 && div_H == 2)
        throw consistency_error("divisibilities (2,2) match no type");
    if (div_tau == 2)
        type = ContractionType::H;
    else if (div_H == 2)
        type = ContractionType::M3;
    else
        type = ContractionType::B1;
    if (type == ContractionType::M3 && fmod(d, 4) != 3)
        throw consistency_error("M3 ray with d != 3 mod 4");
    if (type == ContractionType::B1 && fmod(d, 4) != 0)
        throw consistency_error("B1 ray with d != 0 mod 4");

    // g = r H + s tau, solved exactly; deg = -s for E = 2 tau (type H),
    // -2s otherwise
    const Int det = H.r * tau.s - H.s * tau.r;
    if (det == 0 || !divides(det, tau.s) || !divides(det, -H.s))
        throw consistency_error("g is not integral in the (H, tau) basis");
    const Int r = exact_div(tau.s, det);
    const Int s = exact_div(-H.s, det);
    if (Vec2{r * H.r + s * tau.r, r * H.s + s * tau.s} != Vec2{1, 0})
        throw consistency_error("(H, tau) do not span g integrally");
    const Int deg = type == ContractionType::H ? -s : -2 * s;
    if (deg <= 0)
        throw consistency_error("scroll degree must be positive");
    return {type, H, tau, deg};
}

namespace {

bool star_predicate(const Int& e, bool even_exponents_suffice) {
    if (e < 2 || fmod(e, 2) != 0)
        return false;
    Int h = exact_div(e, 2);
    if (!even_exponents_suffice && divides(Int(9), h))
        return false;
    for (Int p = 2; p * p <= h; ++p) {
        if (!divides(p, h))
            continue;
        int exp = 0;
        while (divides(p, h)) {
            h = exact_div(h, p);
            ++exp;
        }
        if (fmod(p, 3) == 2 && (!even_exponents_suffice || exp % 2 != 0))
            return false;
    }
    if (h > 1 && fmod(h, 3) == 2)
        return false; // leftover prime, exponent one
    return true;
}

} // namespace

bool admissible_star(const Int& e) {
    if (e < 2)
        return false;
    return star_predicate(e, false);
}

bool admissible_star_prime(const Int& e) {
    if (e < 2)
        return false;
    return star_predicate(e, true);
}

std::optional<HWitness> h_ray_witness(const Int& e) {
    require_valid_e(e);
    const Int D = 2 * e;
    std::vector<pell::Solution> sols;
    if (is_perfect_square(D))
        sols = pell::square_pell_solutions(isqrt(D), -3);
    else
        sols = pell::pell_general(D, -3).reps;
    if (sols.empty())
        return std::nullopt;
    auto best = *std::min_element(
        sols.begin(), sols.end(),
        [](const pell::Solution& l, const pell::Solution& r) {
            return l.second != r.second ? l.second < r.second
                                        : l.first < r.first;
        });
    if (fmod(best.first, 2) != 1)
        throw consistency_error("x^2 - 2e y^2 = -3 forces x odd");
    return HWitness{best.second, exact_div(best.first - 1, 2)};
}

bool has_H_ray(const Int& e) {
    return h_ray_witness(e).has_value();
}

namespace {

// table order: rays of type H first, then ascending g-coefficient of tau,
// ties broken by the positive gamma-coefficient
void sort_rays(std::vector<FanoRay>& rays) {
    std::sort(rays.begin(), rays.end(), [](const FanoRay& l, const FanoRay& r) {
        const int lh = l.type == ContractionType::H ? 0 : 1;
        const int rh = r.type == ContractionType::H ? 0 : 1;
        if (lh != rh)
            return lh < rh;
        if (l.tau.r != r.tau.r)
            return l.tau.r < r.tau.r;
        return l.tau.s > r.tau.s;
    });
}

void cross_check_second_ray(const FanoRow& row) {
    if (row.rays.size() != 2 || !row.pell)
        return;
    const Int a = row.pell->a, b = row.pell->b, d = row.d;
    for (int i = 0; i < 2; ++i) {
        const FanoRay& base = row.rays[i];
        const FanoRay& other = row.rays[1 - i];
        const Vec2 hp{a * base.H.r - b * d * base.tau.r,
                      a * base.H.s - b * d * base.tau.s};
        const Vec2 tp{b * base.H.r - a * base.tau.r,
                      b * base.H.s - a * base.tau.s};
        if (hp != other.H || tp != other.tau)
            throw consistency_error("second extremal ray does not match the "
                                    "Pell reconstruction H' = aH - bd tau, "
                                    "tau' = bH - a tau");
    }
}

} // namespace

FanoRow analyze_fano(const Int& e) {
    require_valid_e(e);
    FanoRow row;
    row.e = e;
    row.d = exact_div(e, 2);
    row.admissibility = admissible_star(e)         ? "(**)"
                        : admissible_star_prime(e) ? "(**)'"
                                                   : "neither";
    if (!is_perfect_square(row.d))
        row.pell = *pell::minimal_pell(row.d);

    const Minus2Chamber ch = minus_two_chamber(e);
    row.has_minus_two = ch.has_minus_two;
    for (const Vec2& tau : ch.walls())
        row.rays.push_back(ray_profile(e, tau));
    sort_rays(row.rays);
    row.lagrangians = ch.isotropic_boundaries();

    const FanoPicard P = fano_gram(e);
    for (const FanoRay& ray : row.rays) {
        if (P.gram.q_value({ray.H.r, ray.H.s}) != e)
            throw consistency_error("q(H) must equal e");
        if (P.gram.pairing({ray.H.r, ray.H.s}, {ray.tau.r, ray.tau.s}) != 0)
            throw consistency_error("(H, tau) must vanish");
    }
    cross_check_second_ray(row);

    if (fmod(e, 6) == 0 && row.rays.size() == 2 &&
        row.rays[0].type != row.rays[1].type)
        throw consistency_error("e = 0 mod 6 forces equal ray types");

    const bool h_present =
        std::any_of(row.rays.begin(), row.rays.end(), [](const FanoRay& r) {
            return r.type == ContractionType::H;
        });
    if (h_present != has_H_ray(e))
        throw consistency_error("chamber H-ray disagrees with the "
                                "x^2 - 2e y^2 = -3 criterion");

    for (const FanoRay& ray : row.rays) {
        if (ray.type == ContractionType::B1) {
            if (admissible_star(e) || !admissible_star_prime(e) ||
                !divides(Int(4), e) || !admissible_star(exact_div(e, 4)))
                throw consistency_error("a B1 ray forces (**)' without (**) "
                                        "and e/4 satisfying (**)");
        }
    }
    return row;
}

} // namespace hkrays::fano
