#include "hkrays/pell.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hkrays::pell {

namespace {

void require_valid_d(const Int& d) {
    if (d <= 0)
        throw domain_error("pell: d must be positive, got " + d.get_str());
}

// floor((p + sqrt(dd)) / q) for non-square dd > 0, q != 0, computed
// exactly from s = floor(sqrt(dd)):
//   q > 0: floor((p + s) / q)
//   q < 0: floor((p + s + 1) / q)
// (an integer t satisfies t <= sqrt(dd) iff t <= s, and t >= sqrt(dd)
// iff t >= s + 1, since sqrt(dd) is irrational).
Int surd_floor(const Int& p, const Int& q, const Int& s) {
    Int num = p + s;
    if (q < 0)
        num += 1;
    return fdiv(num, q);
}

} // namespace

std::optional<PellFundamental> minimal_pell(const Int& d) {
    require_valid_d(d);
    if (is_perfect_square(d))
        return std::nullopt;

    // Continued fraction of sqrt(d); the first convergent p/q with
    // p^2 - d q^2 = 1 is the minimal positive solution.
    const Int a0 = isqrt(d);
    Int m = 0, q = 1, a = a0;
    Int p_prev = 1, p_cur = a0;
    Int q_prev = 0, q_cur = 1;
    OrbitBudget budget;
    while (p_cur * p_cur - d * q_cur * q_cur != 1) {
        budget.spend("minimal_pell");
        m = a * q - m;
        q = exact_div(d - m * m, q);
        a = (a0 + m) / q; // q > 0 throughout the sqrt expansion
        Int pn = a * p_cur + p_prev;
        Int qn = a * q_cur + q_prev;
        p_prev = p_cur;
        p_cur = pn;
        q_prev = q_cur;
        q_cur = qn;
    }
    return PellFundamental{d, p_cur, q_cur};
}

Solution unit_step(const Solution& sol, const PellFundamental& u) {
    return {u.a * sol.first + u.d * u.b * sol.second,
            u.b * sol.first + u.a * sol.second};
}

Solution unit_step_back(const Solution& sol, const PellFundamental& u) {
    return {u.a * sol.first - u.d * u.b * sol.second,
            -u.b * sol.first + u.a * sol.second};
}

std::vector<Solution> pell_orbit(const Solution& sol,
                                 const PellFundamental& unit,
                                 std::size_t count) {
    std::vector<Solution> out;
    out.reserve(count);
    Solution cur = sol;
    for (std::size_t i = 0; i < count; ++i) {
        cur = unit_step(cur, unit);
        out.push_back(cur);
    }
    return out;
}

namespace {

// Canonical class representative: the element with x >= 0, y >= 0 that
// minimizes (y, x).  Existence: for N > 0 the x > 0 branch of the orbit
// has y running monotonically from -inf to +inf, for N < 0 the y > 0
// branch has x doing the same, so the walk below terminates.
Solution canonicalize(Solution v, const PellFundamental& u, const Int& n) {
    OrbitBudget budget;
    if (n > 0) {
        if (v.first < 0) {
            v.first = -v.first;
            v.second = -v.second;
        }
        while (v.second < 0) {
            budget.spend("pell_general");
            v = unit_step(v, u);
        }
        for (;;) {
            budget.spend("pell_general");
            Solution prev = unit_step_back(v, u);
            if (prev.second < 0)
                break;
            v = prev;
        }
    } else {
        if (v.second < 0) {
            v.first = -v.first;
            v.second = -v.second;
        }
        while (v.first < 0) {
            budget.spend("pell_general");
            v = unit_step(v, u);
        }
        for (;;) {
            budget.spend("pell_general");
            Solution prev = unit_step_back(v, u);
            if (prev.first < 0)
                break;
            v = prev;
        }
    }
    return v;
}

// PQa expansion of (z + sqrt(d)) / q0: collects every convergent pair
// (G_i, B_i) over two full periods of the (P, Q) state.  Callers test
// each candidate against the target equation exactly.
void pqa_candidates(const Int& z, const Int& q0, const Int& d,
                    const Int& sqrt_d, std::vector<Solution>& out) {
    Int P = z, Q = q0;
    Int g_prev2 = -z, g_prev = q0; // G_{-2}, G_{-1}
    Int b_prev2 = 1, b_prev = 0;   // B_{-2}, B_{-1}
    out.emplace_back(g_prev2, b_prev2);
    out.emplace_back(g_prev, b_prev);

    std::set<std::pair<Int, Int>> seen;
    long tail = -1;
    OrbitBudget budget;
    for (;;) {
        budget.spend("pell_general");
        if (tail < 0 && !seen.insert({P, Q}).second)
            tail = static_cast<long>(seen.size()); // one more full cycle
        if (tail >= 0 && tail-- == 0)
            break;
        Int a = surd_floor(P, Q, sqrt_d);
        Int g = a * g_prev + g_prev2;
        Int b = a * b_prev + b_prev2;
        out.emplace_back(g, b);
        g_prev2 = g_prev;
        g_prev = g;
        b_prev2 = b_prev;
        b_prev = b;
        P = a * Q - P;
        Q = exact_div(d - P * P, Q);
    }
}

} // namespace

GeneralPellClassSet pell_general(const Int& d, const Int& n) {
    require_valid_d(d);
    if (is_perfect_square(d))
        throw domain_error("pell_general: d must not be a perfect square");
    if (n == 0)
        throw domain_error("pell_general: N must be nonzero");

    const PellFundamental unit = *minimal_pell(d);
    const Int sqrt_d = isqrt(d);
    const Int abs_n = abs(n);

    std::vector<Solution> candidates;
    for (Int f = 1; f * f <= abs_n; ++f) {
        if (!divides(f * f, n))
            continue;
        const Int m = exact_div(n, f * f);
        const Int abs_m = abs(m);
        // residues z in (-|m|/2, |m|/2] with z^2 = d mod |m|
        for (Int z = -fdiv(abs_m, 2) + (fmod(abs_m, 2) == 0 ? 1 : 0);
             z * 2 <= abs_m; ++z) {
            if (fmod(z * z - d, abs_m) != 0)
                continue;
            std::vector<Solution> raw;
            pqa_candidates(z, abs_m, d, sqrt_d, raw);
            for (const auto& [x, y] : raw)
                if (x * x - d * y * y == m)
                    candidates.emplace_back(f * x, f * y);
        }
    }

    std::set<Solution> reps;
    for (const auto& c : candidates)
        reps.insert(canonicalize(c, unit, n));

    GeneralPellClassSet out{d, n, {reps.begin(), reps.end()}};
    std::sort(out.reps.begin(), out.reps.end(),
              [](const Solution& l, const Solution& r) {
                  return l.second != r.second ? l.second < r.second
                                              : l.first < r.first;
              });
    return out;
}

bool is_solvable(const Int& d, const Int& n) {
    return !pell_general(d, n).empty();
}

std::vector<Solution> square_pell_solutions(const Int& m, const Int& n) {
    if (m <= 0)
        throw domain_error("square_pell_solutions: m must be positive");
    if (n == 0)
        throw domain_error("square_pell_solutions: N must be nonzero");
    // (x - m y)(x + m y) = n over divisor pairs u v = n.
    std::set<Solution> sols;
    const Int abs_n = abs(n);
    for (Int u = 1; u <= abs_n; ++u) {
        if (!divides(u, n))
            continue;
        for (const Int& su : {u, Int(-u)}) {
            Int v = exact_div(n, su);
            if (fmod(su + v, 2) != 0 || !divides(2 * m, v - su))
                continue;
            Int x = exact_div(su + v, 2);
            Int y = exact_div(v - su, 2 * m);
            if (y < 0 || (y == 0 && x < 0)) {
                x = -x;
                y = -y;
            }
            sols.insert({x, y});
        }
    }
    return {sols.begin(), sols.end()};
}

} // namespace hkrays::pell
