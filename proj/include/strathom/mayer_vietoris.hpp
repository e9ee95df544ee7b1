#pragma once

#include <optional>
#include <vector>

#include "strathom/allowability.hpp"

namespace strathom {

struct MayerVietorisDegree {
    int degree = 0;
    bool chain_injective = false;      // W -> U (+) V at chain level
    bool chain_middle_exact = false;   // image equals kernel at the middle
    bool chain_surjective = false;     // onto the sum subcomplex
    bool exact_at_intersection = false;  // long sequence at H_k(U cap V)
    bool exact_at_pair = false;          // at H_k(U) (+) H_k(V)
    bool exact_at_union = false;         // at H_k(U + V)

    bool all() const {
        return chain_injective && chain_middle_exact && chain_surjective && exact_at_intersection && exact_at_pair &&
               exact_at_union;
    }
};

struct MayerVietorisPart {
    std::vector<MayerVietorisDegree> degrees;
    HomologySummary intersection_homology;  // of U cap V
    HomologySummary left_homology;          // of U
    HomologySummary right_homology;         // of V
    HomologySummary sum_homology;           // of C(U) + C(V)
    HomologySummary total_homology;         // of the full complex on X
    /// whether C(U) + C(V) -> C(X) induces isomorphic homology
    bool sum_inclusion_quasi_iso = false;

    bool all_exact() const {
        for (const auto& d : degrees)
            if (!d.all()) return false;
        return true;
    }
};

struct MayerVietorisReport {
    MayerVietorisPart ordinary;
    MayerVietorisPart intersection;

    bool pass() const {
        return ordinary.all_exact() && intersection.all_exact() && ordinary.sum_inclusion_quasi_iso;
    }
};

/// Builds the short exact sequence 0 -> C(U cap V) -> C(U) (+) C(V) ->
/// C(U) + C(V) -> 0 for ordinary and for intersection chains (with the
/// induced stratifications and perversities on the pieces), checks the long
/// homology sequence degree by degree, and measures whether the sum of the
/// two chain subgroups computes the homology of the whole space.
MayerVietorisReport mayer_vietoris_check(const StratifiedComplex& x, const SimplicialComplex& u,
                                         const SimplicialComplex& v, const Perversity& p);

}  // namespace strathom
