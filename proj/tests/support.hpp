#pragma once

#include <random>
#include <string>
#include <vector>

#include "strathom/verification.hpp"

namespace strathom::testing {

inline SimplicialComplex circle() { return build_complex(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline SimplicialComplex sphere2() {
    return build_complex(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline SimplicialComplex triangle_disk() { return build_complex(3, {{0, 1, 2}}); }

inline SimplicialComplex point() { return build_complex(1, {{0}}); }

inline SimplicialComplex edge() { return build_complex(2, {{0, 1}}); }

inline SimplicialComplex hexagon() {
    return build_complex(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

/// The 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus7() {
    std::vector<Simplex> faces;
    for (int i = 0; i < 7; ++i) {
        faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
        faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return build_complex(7, faces);
}

/// The 6-vertex projective plane (every pair of vertices an edge).
inline SimplicialComplex projective_plane6() {
    return build_complex(6, {{0, 1, 2},
                             {0, 2, 3},
                             {0, 3, 4},
                             {0, 4, 5},
                             {0, 1, 5},
                             {1, 2, 4},
                             {2, 3, 5},
                             {1, 3, 4},
                             {2, 4, 5},
                             {1, 3, 5}});
}

struct NamedSpace {
    std::string name;
    StratifiedComplex space;
};

/// The stratified fixtures the perversity-level suites run over.
inline const std::vector<NamedSpace>& stratified_fixtures() {
    static const std::vector<NamedSpace> fixtures = [] {
        std::vector<NamedSpace> out;
        out.push_back({"cone(circle)", stratify_cone(stratify_trivially(circle()))});
        out.push_back({"cone(sphere2)", stratify_cone(stratify_trivially(sphere2()))});
        out.push_back({"cone(torus7)", stratify_cone(stratify_trivially(torus7()))});
        out.push_back({"cone(rp2)", stratify_cone(stratify_trivially(projective_plane6()))});
        out.push_back({"cone(cone(circle))", stratify_cone(stratify_cone(stratify_trivially(circle())))});
        out.push_back({"suspension(circle)", suspension(circle())});
        out.push_back({"bundle(circle,circle)", trivial_bundle_build(circle(), circle())});
        return out;
    }();
    return fixtures;
}

/// Random finite perversity with values in [-3, codim + 1] per stratum.
inline Perversity random_perversity(const StratifiedComplex& x, std::mt19937_64& rng) {
    Perversity p;
    for (const Stratum& s : x.strata) {
        if (s.regular) continue;
        std::uniform_int_distribution<long long> dist(-3, s.codim + 1);
        p.values[s.id] = ExtendedInt(dist(rng));
    }
    return p;
}

/// Random pair p <= q, mostly finite with occasional infinities.
inline std::pair<Perversity, Perversity> random_perversity_pair(const StratifiedComplex& x, std::mt19937_64& rng) {
    Perversity p, q;
    for (const Stratum& s : x.strata) {
        if (s.regular) continue;
        std::uniform_int_distribution<int> kind(0, 9);
        const int k = kind(rng);
        std::uniform_int_distribution<long long> dist(-3, s.codim + 1);
        std::uniform_int_distribution<long long> bump(0, 3);
        if (k == 0) {
            p.values[s.id] = ExtendedInt::minus_infinity();
            q.values[s.id] = ExtendedInt(dist(rng));
        } else if (k == 1) {
            p.values[s.id] = ExtendedInt(dist(rng));
            q.values[s.id] = ExtendedInt::plus_infinity();
        } else {
            const long long base = dist(rng);
            p.values[s.id] = ExtendedInt(base);
            q.values[s.id] = ExtendedInt(base + bump(rng));
        }
    }
    return {p, q};
}

}  // namespace strathom::testing
