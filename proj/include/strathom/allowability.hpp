#pragma once

#include <optional>
#include <string>
#include <vector>

#include "strathom/homology.hpp"
#include "strathom/perversity.hpp"

namespace strathom {

/// Polyhedral dimension of the part of s lying in the stratum: the maximal
/// dimension of a face of s belonging to the stratum, or -inf when no face
/// does (the preimage is a union of open faces, so this is exact).
ExtendedInt preimage_dimension(const StratifiedComplex& x, const Simplex& s, const Stratum& stratum);

/// The allowability inequality, over all singular strata:
/// dim(s ^ -1 S) <= dim s - codim S + p(S).
bool is_allowable(const StratifiedComplex& x, const Perversity& p, const Simplex& s);

struct StratumViolation {
    std::string stratum_id;
    ExtendedInt preimage_dim;
    ExtendedInt bound;
};

struct SimplexVerdict {
    Simplex simplex;
    bool allowable = false;
    std::vector<StratumViolation> violations;  // strata whose inequality fails
    bool full = false;                         // allowable with all faces allowable
    std::optional<Simplex> first_failing_face;  // for allowable, non-full simplices
};

struct AllowabilityReport {
    std::vector<SimplexVerdict> entries;  // ascending (dimension, lex)

    const SimplexVerdict& verdict_for(const StratifiedComplex& x, const Simplex& s) const;
    /// Allowable-but-not-full simplices, in report order.
    std::vector<Simplex> gap() const;
};

/// Full classification of every simplex: allowability, violations, fullness
/// with the first failing face.
AllowabilityReport full_simplexes(const StratifiedComplex& x, const Perversity& p);

/// The subcomplex of full simplices (face-closed since fullness is
/// hereditary), densely re-indexed.
struct GajerResult {
    SimplicialComplex complex;
    std::vector<int> vertex_map;  // gajer vertex -> ambient vertex
};
GajerResult gajer_subcomplex(const StratifiedComplex& x, const Perversity& p);
GajerResult gajer_subcomplex(const StratifiedComplex& x, const Perversity& p, const AllowabilityReport& report);

/// The intersection chain complex: in degree d the chains supported on
/// allowable d-simplices whose boundary is supported on allowable
/// (d-1)-simplices, as a saturated subgroup of the simplicial chains.
struct IntersectionChainComplex {
    IntegerChainComplex complex;   // boundaries in the reduced bases
    std::vector<IntMatrix> basis;  // basis[d]: C_d coordinates x rank, canonical form
};

IntersectionChainComplex intersection_chain_complex(const StratifiedComplex& x, const Perversity& p);
IntersectionChainComplex intersection_chain_complex(const StratifiedComplex& x, const Perversity& p,
                                                    const AllowabilityReport& report);

inline HomologySummary intersection_homology(const StratifiedComplex& x, const Perversity& p) {
    return homology(intersection_chain_complex(x, p).complex);
}

}  // namespace strathom
