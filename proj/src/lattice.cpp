#include "hkrays/lattice.hpp"

#include <algorithm>

namespace hkrays::lattice {

const char* type_name(ContractionType t) {
    switch (t) {
    case ContractionType::H: return "H";
    case ContractionType::M1: return "M1";
    case ContractionType::M3: return "M3";
    case ContractionType::B0: return "B0";
    case ContractionType::B1: return "B1";
    }
    throw consistency_error("unknown contraction type");
}

IntegralLattice::IntegralLattice(int rank, std::vector<Int> gram)
    : rank_(rank), gram_(std::move(gram)) {
    if (rank <= 0 || gram_.size() != static_cast<std::size_t>(rank) * rank)
        throw domain_error("IntegralLattice: gram must be rank x rank");
    for (int i = 0; i < rank_; ++i) {
        if (fmod(gram(i, i), 2) != 0)
            throw domain_error("IntegralLattice: diagonal must be even");
        for (int j = i + 1; j < rank_; ++j)
            if (gram(i, j) != gram(j, i))
                throw domain_error("IntegralLattice: gram must be symmetric");
    }
}

void IntegralLattice::require_dim(const LatticeVector& v, const char* op) const {
    if (v.size() != static_cast<std::size_t>(rank_))
        throw domain_error(std::string(op) + ": vector length does not match rank");
}

Int IntegralLattice::q_value(const LatticeVector& v) const {
    return pairing(v, v);
}

Int IntegralLattice::pairing(const LatticeVector& v, const LatticeVector& w) const {
    require_dim(v, "pairing");
    require_dim(w, "pairing");
    Int acc = 0;
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            acc += v[i] * gram(i, j) * w[j];
    return acc;
}

Int IntegralLattice::divisibility(const LatticeVector& v) const {
    require_dim(v, "divisibility");
    if (std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; }))
        throw domain_error("divisibility: vector must be nonzero");
    Int g = 0;
    for (int i = 0; i < rank_; ++i) {
        Int row = 0;
        for (int j = 0; j < rank_; ++j)
            row += gram(i, j) * v[j];
        g = gcd(g, row);
    }
    return g;
}

Int IntegralLattice::discriminant() const {
    // cofactor expansion; rank <= 5 here
    std::vector<Int> m = gram_;
    int n = rank_;
    std::vector<int> cols(n);
    for (int i = 0; i < n; ++i)
        cols[i] = i;

    struct Det {
        int n;
        const std::vector<Int>& m;
        Int run(int row, std::vector<int>& cols) const {
            if (cols.empty())
                return 1;
            Int acc = 0;
            for (std::size_t k = 0; k < cols.size(); ++k) {
                int c = cols[k];
                std::vector<int> rest = cols;
                rest.erase(rest.begin() + static_cast<long>(k));
                Int term = m[row * n + c] * run(row + 1, rest);
                acc += (k % 2 == 0) ? term : -term;
            }
            return acc;
        }
    };
    return Det{n, m}.run(0, cols);
}

bool is_primitive(const LatticeVector& v) {
    if (std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; }))
        throw domain_error("is_primitive: vector must be nonzero");
    Int g = 0;
    for (const Int& c : v)
        g = gcd(g, c);
    return g == 1;
}

std::vector<LatticeVector> primitive_isotropic_rays(const IntegralLattice& L) {
    if (L.rank() != 2)
        throw domain_error("primitive_isotropic_rays: rank-2 lattice required");
    const Int A = L.gram(0, 0), B = L.gram(0, 1), C = L.gram(1, 1);
    const Int disc = B * B - A * C;
    if (disc <= 0)
        throw domain_error("primitive_isotropic_rays: lattice must be indefinite");
    if (!is_perfect_square(disc))
        return {};
    const Int s = isqrt(disc);

    auto normalize = [](Vec2 v) {
        return sign_normalized(primitive_part(v));
    };
    std::vector<Vec2> rays;
    if (A != 0) {
        // A x^2 + 2 B x y + C y^2 = 0, roots x/y = (-B +- s)/A
        rays.push_back(normalize({-B + s, A}));
        rays.push_back(normalize({-B - s, A}));
    } else {
        // y (2 B x + C y) = 0
        rays.push_back(normalize({1, 0}));
        rays.push_back(normalize({C, -2 * B}));
    }
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

    std::vector<LatticeVector> out;
    for (const Vec2& v : rays)
        out.push_back({v.r, v.s});
    return out;
}

IntegralLattice picard_rank2(const Int& d) {
    if (d <= 0)
        throw domain_error("picard_rank2: d must be positive");
    return IntegralLattice(2, {2 * d, 0, 0, -2});
}

IntegralLattice hyperbolic_plane() {
    return IntegralLattice(2, {0, 1, 1, 0});
}

const IntegralLattice& AmbientModel::the_lattice() {
    static const IntegralLattice L(5, {
        0, 1, 0, 0, 0,
        1, 0, 0, 0, 0,
        0, 0, 0, 1, 0,
        0, 0, 1, 0, 0,
        0, 0, 0, 0, -2,
    });
    return L;
}

LatticeVector AmbientModel::delta() {
    return {0, 0, 0, 0, 1};
}

const std::vector<std::string>& AmbientModel::basis_labels() {
    static const std::vector<std::string> labels = {"u1+", "u1-", "u2+",
                                                    "u2-", "delta"};
    return labels;
}

EmbeddedPair embed_pair(ContractionType type, const Int& d) {
    if (d <= 0)
        throw domain_error("embed_pair: d must be positive");
    switch (type) {
    case ContractionType::H:
        return {{1, d, 0, 0, 0}, AmbientModel::delta()};
    case ContractionType::B1: {
        if (fmod(d, 4) != 0)
            throw domain_error("embed_pair: type B1 requires d = 0 mod 4");
        const Int q = exact_div(d, 4);
        return {{1, d, 0, 0, 0}, {1, -d, 2, 2 * q, 1}};
    }
    case ContractionType::M3: {
        if (fmod(d, 4) != 3)
            throw domain_error("embed_pair: type M3 requires d = 3 mod 4");
        const Int q = exact_div(d + 1, 4);
        return {{2, 2 * q, 0, 0, 1}, {0, 0, 1, -1, 0}};
    }
    default:
        throw domain_error("embed_pair: only types H, M3, B1 embed here");
    }
}

Vec2 sign_normalized(Vec2 v) {
    if (v.r < 0 || (v.r == 0 && v.s < 0))
        return -v;
    return v;
}

Vec2 primitive_part(const Vec2& v) {
    if (v.r == 0 && v.s == 0)
        throw domain_error("primitive_part: zero vector");
    Int g = gcd(v.r, v.s);
    return {exact_div(v.r, g), exact_div(v.s, g)};
}

} // namespace hkrays::lattice
