#include "hkrays/hilbert.hpp"

namespace hkrays::hilbert {

HilbertRow analyze_hilbert_square(const Int& e) {
    if (e <= 0 || fmod(e, 2) != 0)
        throw domain_error("e must be even and positive, got " + e.get_str());

    const Int d = exact_div(e, 2);
    const rays::RayPairReport rep = rays::analyze(d, ContractionType::H);

    HilbertRow row;
    row.e = e;
    row.d = d;
    row.det_abs = rep.det_abs;
    row.pell = rep.pell;
    row.first = rep.first.type;
    if (rep.second_is_divisorial()) {
        const auto& p = std::get<rays::RayProfile>(rep.second);
        row.second = p.type;
        row.Hprime = p.Hclass;
        row.tauPrime = p.tauClass;
    } else {
        row.lagrangian = std::get<rays::LagrangianRay>(rep.second).isotropic_class;
    }
    row.flopping_walls = rep.flopping_walls;
    row.model_count = rep.model_count;
    row.fm_partners = rep.fm_partners;
    row.conic_bundles = rep.conic_bundles;
    return row;
}

std::vector<HilbertRow> hilbert_table(const Int& lo, const Int& hi) {
    std::vector<HilbertRow> rows;
    Int e = lo;
    if (fmod(e, 2) != 0)
        ++e;
    for (; e <= hi; e += 2)
        rows.push_back(analyze_hilbert_square(e));
    return rows;
}

} // namespace hkrays::hilbert
