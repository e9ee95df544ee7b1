#include "strathom/allowability.hpp"

#include <algorithm>
#include <set>

#include "strathom/errors.hpp"

namespace strathom {

namespace {

/// Faces of s including s itself.
std::vector<Simplex> all_faces(const Simplex& s) {
    std::vector<Simplex> out = proper_faces(s);
    out.push_back(s);
    return out;
}

ExtendedInt allowability_bound(const Simplex& s, const Stratum& stratum, const Perversity& p) {
    return ExtendedInt(simplex_dim(s) - stratum.codim) + p.at(stratum);
}

}  // namespace

ExtendedInt preimage_dimension(const StratifiedComplex& x, const Simplex& s, const Stratum& stratum) {
    if (!x.complex.contains(s)) throw ValidationError("simplex not in the stratified complex");
    ExtendedInt best = ExtendedInt::minus_infinity();
    for (const Simplex& face : all_faces(s)) {
        const Stratum& home = x.strata[static_cast<std::size_t>(x.stratum_of(face))];
        if (home.id == stratum.id) best = std::max(best, ExtendedInt(simplex_dim(face)));
    }
    return best;
}

bool is_allowable(const StratifiedComplex& x, const Perversity& p, const Simplex& s) {
    for (const Stratum& stratum : x.strata) {
        if (stratum.regular) continue;
        if (!(preimage_dimension(x, s, stratum) <= allowability_bound(s, stratum, p))) return false;
    }
    return true;
}

const SimplexVerdict& AllowabilityReport::verdict_for(const StratifiedComplex& x, const Simplex& s) const {
    // entries are stored in the complex's (dimension, lex) enumeration order
    Index offset = 0;
    const int d = simplex_dim(s);
    for (int lower = 0; lower < d; ++lower) offset += x.complex.count(lower);
    return entries[static_cast<std::size_t>(offset + x.complex.index_of(s))];
}

std::vector<Simplex> AllowabilityReport::gap() const {
    std::vector<Simplex> out;
    for (const SimplexVerdict& v : entries)
        if (v.allowable && !v.full) out.push_back(v.simplex);
    return out;
}

AllowabilityReport full_simplexes(const StratifiedComplex& x, const Perversity& p) {
    validate_perversity(x, p);
    AllowabilityReport report;

    // preimage dimensions accumulate along faces, so evaluate by ascending
    // dimension and reuse: dim(s^-1 S) = max over facets and s itself.
    std::vector<std::vector<std::vector<ExtendedInt>>> preimage(static_cast<std::size_t>(x.complex.dim() + 1));
    std::vector<std::vector<bool>> allowable(static_cast<std::size_t>(x.complex.dim() + 1));
    std::vector<std::vector<bool>> full(static_cast<std::size_t>(x.complex.dim() + 1));
    const std::size_t strata_count = x.strata.size();

    for (int d = 0; d <= x.complex.dim(); ++d) {
        const auto& simplices = x.complex.simplices(d);
        auto& pre_d = preimage[static_cast<std::size_t>(d)];
        auto& allow_d = allowable[static_cast<std::size_t>(d)];
        auto& full_d = full[static_cast<std::size_t>(d)];
        pre_d.resize(simplices.size());
        allow_d.assign(simplices.size(), true);
        full_d.assign(simplices.size(), true);
        for (std::size_t i = 0; i < simplices.size(); ++i) {
            const Simplex& s = simplices[i];
            auto& per_stratum = pre_d[i];
            per_stratum.assign(strata_count, ExtendedInt::minus_infinity());
            const std::size_t own = static_cast<std::size_t>(x.stratum_of(s));
            per_stratum[own] = ExtendedInt(d);
            if (d > 0) {
                for (const Simplex& face : facets(s)) {
                    const auto& below = preimage[static_cast<std::size_t>(d - 1)]
                                                [static_cast<std::size_t>(x.complex.index_of(face))];
                    for (std::size_t t = 0; t < strata_count; ++t) per_stratum[t] = std::max(per_stratum[t], below[t]);
                }
            }

            SimplexVerdict verdict;
            verdict.simplex = s;
            for (std::size_t t = 0; t < strata_count; ++t) {
                const Stratum& stratum = x.strata[t];
                if (stratum.regular) continue;
                const ExtendedInt bound = allowability_bound(s, stratum, p);
                if (!(per_stratum[t] <= bound)) {
                    verdict.violations.push_back(StratumViolation{stratum.id, per_stratum[t], bound});
                }
            }
            verdict.allowable = verdict.violations.empty();
            allow_d[i] = verdict.allowable;

            bool faces_full = true;
            if (d > 0) {
                for (const Simplex& face : facets(s)) {
                    if (!full[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(x.complex.index_of(face))]) {
                        faces_full = false;
                        break;
                    }
                }
            }
            verdict.full = verdict.allowable && faces_full;
            full_d[i] = verdict.full;
            if (verdict.allowable && !verdict.full) {
                // first non-allowable proper face in (dimension, lex) order
                std::vector<Simplex> faces = proper_faces(s);
                std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
                    if (a.size() != b.size()) return a.size() < b.size();
                    return a < b;
                });
                for (const Simplex& face : faces) {
                    if (!allowable[face.size() - 1][static_cast<std::size_t>(x.complex.index_of(face))]) {
                        verdict.first_failing_face = face;
                        break;
                    }
                }
            }
            report.entries.push_back(std::move(verdict));
        }
    }
    return report;
}

GajerResult gajer_subcomplex(const StratifiedComplex& x, const Perversity& p) {
    return gajer_subcomplex(x, p, full_simplexes(x, p));
}

GajerResult gajer_subcomplex(const StratifiedComplex& x, const Perversity& p, const AllowabilityReport& report) {
    (void)p;
    std::vector<Simplex> members;
    for (const SimplexVerdict& v : report.entries)
        if (v.full) members.push_back(v.simplex);
    std::set<int> used;
    for (const Simplex& s : members) used.insert(s.begin(), s.end());
    GajerResult out;
    out.vertex_map.assign(used.begin(), used.end());
    std::map<int, int> dense;
    for (std::size_t i = 0; i < out.vertex_map.size(); ++i) dense[out.vertex_map[i]] = static_cast<int>(i);
    std::vector<Simplex> renamed;
    renamed.reserve(members.size());
    for (const Simplex& s : members) {
        Simplex t;
        t.reserve(s.size());
        for (int v : s) t.push_back(dense[v]);
        renamed.push_back(std::move(t));
    }
    out.complex = build_complex(static_cast<int>(out.vertex_map.size()), renamed);
    return out;
}

IntersectionChainComplex intersection_chain_complex(const StratifiedComplex& x, const Perversity& p) {
    return intersection_chain_complex(x, p, full_simplexes(x, p));
}

IntersectionChainComplex intersection_chain_complex(const StratifiedComplex& x, const Perversity& p,
                                                    const AllowabilityReport& report) {
    (void)p;
    const SimplicialComplex& k = x.complex;
    const int top = k.dim();
    IntersectionChainComplex out;
    if (top < 0) return out;

    // allowable flags in complex enumeration order
    std::vector<std::vector<bool>> allowable(static_cast<std::size_t>(top + 1));
    {
        std::size_t cursor = 0;
        for (int d = 0; d <= top; ++d) {
            allowable[static_cast<std::size_t>(d)].resize(static_cast<std::size_t>(k.count(d)));
            for (Index i = 0; i < k.count(d); ++i)
                allowable[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = report.entries[cursor++].allowable;
        }
    }

    out.basis.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        const IntMatrix del = boundary_matrix(k, d);
        std::vector<Index> allowable_cols;
        for (Index i = 0; i < k.count(d); ++i)
            if (allowable[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)]) allowable_cols.push_back(i);
        std::vector<Index> blocked_rows;
        if (d > 0) {
            for (Index i = 0; i < k.count(d - 1); ++i)
                if (!allowable[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(i)]) blocked_rows.push_back(i);
        }
        IntMatrix constraint(static_cast<Index>(blocked_rows.size()), static_cast<Index>(allowable_cols.size()));
        for (Index r = 0; r < constraint.rows(); ++r)
            for (Index c = 0; c < constraint.cols(); ++c)
                constraint(r, c) = del(blocked_rows[static_cast<std::size_t>(r)], allowable_cols[static_cast<std::size_t>(c)]);
        IntMatrix kernel = kernel_basis(constraint);
        IntMatrix embedded = IntMatrix::Zero(k.count(d), kernel.cols());
        for (Index c = 0; c < kernel.cols(); ++c)
            for (Index r = 0; r < kernel.rows(); ++r)
                embedded(allowable_cols[static_cast<std::size_t>(r)], c) = kernel(r, c);
        out.basis[static_cast<std::size_t>(d)] = std::move(embedded);
    }

    // boundaries in the reduced bases; solvability is the containment
    // boundary(IC_d) inside IC_{d-1}
    out.complex.boundaries.resize(static_cast<std::size_t>(top + 1));
    out.complex.boundaries[0] = IntMatrix(0, out.basis[0].cols());
    for (int d = 1; d <= top; ++d) {
        const IntMatrix image = boundary_matrix(k, d) * out.basis[static_cast<std::size_t>(d)];
        out.complex.boundaries[static_cast<std::size_t>(d)] =
            coordinates_in_basis(out.basis[static_cast<std::size_t>(d - 1)], image);
    }
    out.complex.validate();
    return out;
}

}  // namespace strathom
