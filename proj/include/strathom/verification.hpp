#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "strathom/mayer_vietoris.hpp"

namespace strathom {

/// Per-stratum truncation levels, the complement of a stored perversity.
struct TruncationProfile {
    std::map<std::string, ExtendedInt> level;  // singular stratum id -> D p(S)
};

TruncationProfile truncation_profile(const StratifiedComplex& x, const Perversity& p);

/// Homology shadow of the truncation stage the cone construction realizes:
/// degrees up to the level survive, everything above vanishes, and stages
/// below zero collapse onto degree zero (where a cone always keeps one
/// class). The level +inf keeps everything.
HomologySummary cone_truncation_oracle(const HomologySummary& base, const ExtendedInt& level);

struct ConeFormulaEntry {
    ExtendedInt apex_value;   // perversity of the apex
    ExtendedInt truncation;   // complementary value = truncation level
    HomologySummary computed;  // intersection homology of the cone
    HomologySummary expected;  // truncation oracle on the base homology
    std::vector<int> disagreeing_degrees;
    bool pass = false;
};

struct ConeFormulaReport {
    std::vector<ConeFormulaEntry> entries;
    std::vector<std::string> warnings;
    bool all_pass = false;
};

/// Two routes to the intersection homology of a cone: direct Smith-form
/// computation on the intersection chains against truncated ordinary
/// homology of the base.
ConeFormulaReport cone_formula_check(const SimplicialComplex& link, const std::vector<ExtendedInt>& apex_values);

struct IteratedConeEntry {
    ExtendedInt outer_value;  // perversity of the top apex
    ExtendedInt inner_value;  // perversity of the cone-line stratum
    ExtendedInt outer_truncation;
    ExtendedInt inner_truncation;
    HomologySummary computed;
    HomologySummary expected;  // twice-applied truncation oracle
    bool pass = false;
};

struct IteratedConeReport {
    std::vector<IteratedConeEntry> entries;
    bool all_pass = false;
};

/// Depth-two cones: the double cone against the twice-truncated oracle.
IteratedConeReport iterated_cone_check(const SimplicialComplex& link, const std::vector<ExtendedInt>& outer_values,
                                       const std::vector<ExtendedInt>& inner_values);

/// Homotopy-pushout presentation of a two-piece stratified space: the
/// double mapping cylinder of a: L -> S and b: L -> R, with S as the bottom
/// stratum at its own dimension and everything else regular (or keeping R's
/// levels when R comes stratified).
StratifiedComplex quinn_pushout_build(const SimplicialMap& a, const SimplicialMap& b,
                                      const std::optional<StratifiedComplex>& r_stratified = std::nullopt);

/// The suspension as the double mapping cylinder of two collapses, with the
/// two apexes at level zero.
StratifiedComplex suspension(const SimplicialComplex& k);

/// Product of the base with the cone on the fibre, the base copy under the
/// apex as the singular stratum.
StratifiedComplex trivial_bundle_build(const SimplicialComplex& base, const SimplicialComplex& fibre);

struct BundleEntry {
    ExtendedInt stratum_value;  // perversity of the singular stratum
    ExtendedInt truncation;
    std::vector<long long> computed;  // rational intersection homology of the bundle
    std::vector<long long> expected;  // Kuenneth of the base with the truncated fibre
    bool pass = false;
};

struct BundleReport {
    std::vector<BundleEntry> entries;
    bool all_pass = false;
};

/// Rational shadow of the fibrewise truncation: intersection homology of
/// base x cone(fibre) against the graded product of the base homology with
/// the truncated fibre homology.
BundleReport bundle_truncation_check(const SimplicialComplex& base, const SimplicialComplex& fibre,
                                     const std::vector<ExtendedInt>& stratum_values);

struct FullnessGapReport {
    std::vector<Simplex> gap;  // allowable but not full
    HomologySummary gajer_homology;
    HomologySummary intersection_homology;
    bool gajer_matches_intersection = false;
    std::optional<HomologySummary> cone_oracle;  // when the space is a cone
    std::optional<bool> intersection_matches_oracle;
    std::optional<bool> gajer_matches_oracle;
};

/// Measures the gap between allowability and fullness, and compares the
/// homology of the full subcomplex with intersection homology (and with the
/// cone oracle when the space is recognized as a cone over its link).
FullnessGapReport fullness_gap_report(const StratifiedComplex& x, const Perversity& p);

struct StratifiedSubdivision {
    StratifiedComplex space;
    SubdivisionResult subdivision;
    std::map<std::string, std::string> stratum_target;  // new stratum -> original stratum
};

/// Barycentric subdivision with the filtration transported through the
/// carrier assignment.
StratifiedSubdivision subdivide_stratified(const StratifiedComplex& x);

/// Perversity on the subdivision pulled through the stratum translation.
Perversity transported_perversity(const StratifiedSubdivision& sd, const StratifiedComplex& original,
                                  const Perversity& p);

struct SubdivisionReport {
    HomologySummary ordinary_before, ordinary_after;
    HomologySummary intersection_before, intersection_after;
    HomologySummary gajer_before, gajer_after;
    bool ordinary_unchanged = false;
    bool intersection_unchanged = false;
    bool gajer_unchanged = false;
};

/// Recomputes intersection and full-subcomplex homology after one
/// barycentric subdivision and reports per-degree changes.
SubdivisionReport subdivision_sensitivity_report(const StratifiedComplex& x, const Perversity& p);

/// Sweep values min..max plus both infinities, in ascending order.
std::vector<ExtendedInt> perversity_sweep(long long min_value, long long max_value, bool with_infinities = true);

}  // namespace strathom
