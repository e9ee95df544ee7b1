#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/complex.hpp"

namespace strathom {

/// A filtration of a complex by closed subcomplexes, stored as the minimal
/// level of each simplex. Levels are kept parallel to the complex's
/// per-dimension simplex tables.
struct Filtration {
    int formal_dim = 0;
    std::vector<std::vector<int>> levels;  // levels[d][i] for simplices(d)[i]

    int level_of(const SimplicialComplex& k, const Simplex& s) const {
        return levels[static_cast<std::size_t>(simplex_dim(s))][static_cast<std::size_t>(k.index_of(s))];
    }
};

/// Everything at the top level; the regular one-stratum filtration.
Filtration uniform_filtration(const SimplicialComplex& k, int formal_dim);

/// Levels from explicit per-simplex values; missing simplices default to
/// formal_dim. Values are clamped nowhere: out-of-range levels are errors.
Filtration filtration_from_levels(const SimplicialComplex& k, int formal_dim, const std::map<Simplex, int>& given);

/// Levels from generator sets: level(s) = least listed level whose
/// generators' face closure contains s, defaulting to formal_dim. This is
/// automatically monotone under faces.
Filtration filtration_from_generators(const SimplicialComplex& k, int formal_dim,
                                      const std::vector<std::pair<int, std::vector<Simplex>>>& generators);

/// Minimal level over the generators containing each simplex; the
/// generators must jointly cover the complex. Monotone by construction.
Filtration filtration_from_covering_generators(const SimplicialComplex& k, int formal_dim,
                                               const std::vector<std::pair<Simplex, int>>& generator_levels);

/// Throws (with a witness pair in the message) when a face has a larger
/// level than a simplex containing it, or a level leaves [0, formal_dim].
void validate_filtration(const SimplicialComplex& k, const Filtration& f);

struct Stratum {
    std::string id;  // "s<level>.<index>", deterministic across runs
    int level = 0;
    int index = 0;
    std::vector<Simplex> simplices;  // ascending (dimension, lex)
    int formal_dim = 0;              // = level
    int codim = 0;                   // = formal_dim(X) - level
    bool regular = false;            // maximal in the closure order
};

struct StratifiedComplex {
    SimplicialComplex complex;
    Filtration filtration;
    std::vector<Stratum> strata;
    /// order(i, j) holds when stratum i lies in the closure of stratum j.
    std::vector<std::vector<bool>> closure_order;
    /// stratum index of each simplex, parallel to the complex tables.
    std::vector<std::vector<int>> stratum_index;
    std::vector<std::string> warnings;

    int formal_dim() const { return filtration.formal_dim; }
    int stratum_of(const Simplex& s) const {
        return stratum_index[static_cast<std::size_t>(simplex_dim(s))][static_cast<std::size_t>(complex.index_of(s))];
    }
    const Stratum& stratum_by_id(const std::string& id) const;
    bool has_singular_strata() const;
};

/// Strata as face-adjacency components of each level set, with
/// deterministic ids and the closure partial order.
StratifiedComplex compute_strata(const SimplicialComplex& k, const Filtration& f);

/// One-stratum-per-component stratification at the given formal dimension.
StratifiedComplex stratify_trivially(const SimplicialComplex& k, int formal_dim);
inline StratifiedComplex stratify_trivially(const SimplicialComplex& k) { return stratify_trivially(k, std::max(k.dim(), 0)); }

struct FrontierVerdict {
    bool pass = true;
    // populated on failure:
    std::string lower_id, upper_id;
    Simplex meeting_simplex;  // simplex of lower stratum inside the closure
    Simplex missing_simplex;  // simplex of lower stratum outside it
};

/// Frontier condition: a stratum that meets the closure of another must be
/// contained in it.
FrontierVerdict check_frontier(const StratifiedComplex& x);

/// Cone stratification: fresh apex at level 0, every other simplex one
/// level above the base simplex that carries it; formal dimension grows by
/// one.
StratifiedComplex stratify_cone(const StratifiedComplex& x);

/// Mapping cylinder stratification: codomain simplices keep their levels,
/// prisms over a domain simplex sit at its level shifted to the top of the
/// cylinder's filtration. Requires formal_dim(codomain) <= formal_dim(domain) + 1.
StratifiedComplex stratify_cylinder(const SimplicialMap& f, const StratifiedComplex& domain_space,
                                    const StratifiedComplex& codomain_space);

struct RestrictionResult {
    StratifiedComplex space;
    /// new stratum id -> id of the ambient stratum it lands in
    std::map<std::string, std::string> stratum_target;
};

/// Induced stratification of a subcomplex (same vertex indexing, same
/// formal dimension), with the stratum translation table.
RestrictionResult restrict_to(const StratifiedComplex& x, const SimplicialComplex& sub);

/// The subcomplex of simplices all of whose faces lie in regular strata.
SimplicialComplex regular_subcomplex(const StratifiedComplex& x);

}  // namespace strathom
