#include "strathom/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>

#include "strathom/errors.hpp"

namespace strathom {

namespace {

unsigned thread_count() {
    const char* env = std::getenv("STRATHOM_THREADS");
    if (env == nullptr) return 1;
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed < 1) return 1;
    return static_cast<unsigned>(parsed);
}

/// Evaluates fn over 0..count-1, possibly concurrently, with results
/// aggregated in index order.
template <typename Result, typename Fn>
std::vector<Result> indexed_map(std::size_t count, Fn&& fn) {
    std::vector<Result> out(count);
    const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = w; i < count; i += workers) out[i] = fn(i);
        }));
    }
    for (auto& f : futures) f.get();
    return out;
}

std::vector<int> summary_disagreements(const HomologySummary& a, const HomologySummary& b) {
    std::vector<int> out;
    const int top = std::max(a.size(), b.size());
    for (int d = 0; d < top; ++d)
        if (!(a.at(d) == b.at(d))) out.push_back(d);
    return out;
}

bool is_connected(const SimplicialComplex& k) {
    const HomologySummary h = homology(k);
    return h.at(0).betti == 1;
}

}  // namespace

TruncationProfile truncation_profile(const StratifiedComplex& x, const Perversity& p) {
    TruncationProfile out;
    const Perversity d = complement(x, p);
    out.level = d.values;
    return out;
}

HomologySummary cone_truncation_oracle(const HomologySummary& base, const ExtendedInt& level) {
    if (level.is_plus_infinity()) return base;
    if (level.is_minus_infinity() || level < ExtendedInt(0)) {
        // stages below zero collapse to a point
        HomologySummary point;
        point.degrees.push_back(HomologySummary::Entry{1, {}});
        return point;
    }
    return truncate(base, level.finite_value());
}

ConeFormulaReport cone_formula_check(const SimplicialComplex& link, const std::vector<ExtendedInt>& apex_values) {
    if (link.simplex_count() == 0) throw ValidationError("cone formula needs a nonempty link");
    ConeFormulaReport report;
    if (!is_connected(link)) report.warnings.push_back("link is not connected; the truncation oracle assumes connected links");

    const StratifiedComplex x = stratify_cone(stratify_trivially(link));
    const int apex = link.vertex_count();
    const std::string apex_id = x.strata[static_cast<std::size_t>(x.stratum_of({apex}))].id;
    const long long top_value = x.strata[static_cast<std::size_t>(x.stratum_of({apex}))].codim - 2;
    const HomologySummary base_homology = homology(link);

    report.entries = indexed_map<ConeFormulaEntry>(apex_values.size(), [&](std::size_t i) {
        ConeFormulaEntry entry;
        entry.apex_value = apex_values[i];
        entry.truncation = ExtendedInt(top_value) - entry.apex_value;
        Perversity p;
        p.values[apex_id] = entry.apex_value;
        entry.computed = intersection_homology(x, p);
        entry.expected = cone_truncation_oracle(base_homology, entry.truncation);
        entry.disagreeing_degrees = summary_disagreements(entry.computed, entry.expected);
        entry.pass = entry.disagreeing_degrees.empty();
        return entry;
    });
    report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                  [](const ConeFormulaEntry& e) { return e.pass; });
    return report;
}

IteratedConeReport iterated_cone_check(const SimplicialComplex& link, const std::vector<ExtendedInt>& outer_values,
                                       const std::vector<ExtendedInt>& inner_values) {
    if (link.simplex_count() == 0) throw ValidationError("iterated cone needs a nonempty link");
    IteratedConeReport report;
    const StratifiedComplex once = stratify_cone(stratify_trivially(link));
    const StratifiedComplex twice = stratify_cone(once);
    const int inner_apex = link.vertex_count();
    const int outer_apex = link.vertex_count() + 1;
    const Stratum& inner_stratum = twice.strata[static_cast<std::size_t>(twice.stratum_of({inner_apex}))];
    const Stratum& outer_stratum = twice.strata[static_cast<std::size_t>(twice.stratum_of({outer_apex}))];
    const HomologySummary base_homology = homology(link);

    std::vector<std::pair<ExtendedInt, ExtendedInt>> grid;
    for (const ExtendedInt& outer : outer_values)
        for (const ExtendedInt& inner : inner_values) grid.emplace_back(outer, inner);

    report.entries = indexed_map<IteratedConeEntry>(grid.size(), [&](std::size_t i) {
        IteratedConeEntry entry;
        entry.outer_value = grid[i].first;
        entry.inner_value = grid[i].second;
        entry.outer_truncation = ExtendedInt(outer_stratum.codim - 2) - entry.outer_value;
        entry.inner_truncation = ExtendedInt(inner_stratum.codim - 2) - entry.inner_value;
        Perversity p;
        p.values[outer_stratum.id] = entry.outer_value;
        p.values[inner_stratum.id] = entry.inner_value;
        entry.computed = intersection_homology(twice, p);
        entry.expected =
            cone_truncation_oracle(cone_truncation_oracle(base_homology, entry.inner_truncation), entry.outer_truncation);
        entry.pass = summary_disagreements(entry.computed, entry.expected).empty();
        return entry;
    });
    report.all_pass = std::all_of(report.entries.begin(), report.entries.end(),
                                  [](const IteratedConeEntry& e) { return e.pass; });
    return report;
}

StratifiedComplex quinn_pushout_build(const SimplicialMap& a, const SimplicialMap& b,
                                      const std::optional<StratifiedComplex>& r_stratified) {
    if (!(a.domain == b.domain)) throw ValidationError("pushout legs must share their domain");
    if (r_stratified && !(r_stratified->complex == b.codomain))
        throw ValidationError("stratification given for a different complex than the right codomain");
    const DoubleCylinderResult dmc = double_mapping_cylinder(a, b);

    const int bottom_dim = std::max(a.codomain.dim(), 0);
    int n = std::max(dmc.complex.dim(), bottom_dim + 1);
    if (r_stratified) n = std::max(n, r_stratified->formal_dim());

    const int ln = a.domain.vertex_count();
    const int sn = a.codomain.vertex_count();
    std::vector<std::pair<Simplex, int>> generator_levels;
    // cylinder pieces of both legs are regular
    for (const Simplex& s : dmc.complex.maximal_simplices()) generator_levels.emplace_back(s, n);
    // the bottom stratum sits at its own dimension
    for (int d = 0; d <= a.codomain.dim(); ++d)
        for (const Simplex& s : a.codomain.simplices(d)) {
            Simplex shifted = s;
            for (int& v : shifted) v += ln;
            generator_levels.emplace_back(std::move(shifted), bottom_dim);
        }
    // the right leg keeps its levels when stratified
    if (r_stratified) {
        for (int d = 0; d <= b.codomain.dim(); ++d) {
            const auto& simplices = b.codomain.simplices(d);
            for (std::size_t i = 0; i < simplices.size(); ++i) {
                Simplex shifted = simplices[i];
                for (int& v : shifted) v += ln + sn;
                generator_levels.emplace_back(std::move(shifted),
                                              r_stratified->filtration.levels[static_cast<std::size_t>(d)][i]);
            }
        }
    }
    Filtration f = filtration_from_covering_generators(dmc.complex, n, generator_levels);
    return compute_strata(dmc.complex, f);
}

StratifiedComplex suspension(const SimplicialComplex& k) {
    const SimplicialMap north = constant_map(k);
    const SimplicialMap south = constant_map(k);
    const DoubleCylinderResult dmc = double_mapping_cylinder(north, south);
    const int n = std::max(k.dim(), 0) + 1;
    std::vector<std::pair<Simplex, int>> generator_levels;
    for (const Simplex& s : dmc.complex.maximal_simplices()) generator_levels.emplace_back(s, n);
    generator_levels.emplace_back(Simplex{k.vertex_count()}, 0);
    generator_levels.emplace_back(Simplex{k.vertex_count() + 1}, 0);
    Filtration f = filtration_from_covering_generators(dmc.complex, n, generator_levels);
    return compute_strata(dmc.complex, f);
}

StratifiedComplex trivial_bundle_build(const SimplicialComplex& base, const SimplicialComplex& fibre) {
    if (base.simplex_count() == 0 || fibre.simplex_count() == 0)
        throw ValidationError("bundle pieces must be nonempty");
    const ConeResult coned = cone(fibre);
    const ProductResult product = ordered_product(base, coned.complex);
    const int n = std::max(base.dim(), 0) + std::max(fibre.dim(), 0) + 1;
    const int cone_vertices = coned.complex.vertex_count();

    std::map<Simplex, int> levels;
    for (int d = 0; d <= product.complex.dim(); ++d) {
        for (const Simplex& s : product.complex.simplices(d)) {
            const bool under_apex = std::all_of(s.begin(), s.end(), [&](int v) {
                return v % cone_vertices == coned.apex;
            });
            if (under_apex) levels[s] = base.dim();
        }
    }
    Filtration f = filtration_from_levels(product.complex, n, levels);
    return compute_strata(product.complex, f);
}

namespace {

std::vector<long long> rational_dims(const SimplicialComplex& k) {
    return homology_field(chain_complex(k), 0);
}

std::vector<long long> truncated_dims(const std::vector<long long>& dims, const ExtendedInt& level) {
    if (level.is_plus_infinity()) return dims;
    if (level.is_minus_infinity() || level < ExtendedInt(0))
        return dims.empty() ? std::vector<long long>{} : std::vector<long long>{dims.front()};
    const std::size_t keep = std::min<std::size_t>(dims.size(), static_cast<std::size_t>(level.finite_value()) + 1);
    return std::vector<long long>(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(keep));
}

std::vector<long long> convolution(const std::vector<long long>& a, const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

bool dims_equal(const std::vector<long long>& a, const std::vector<long long>& b) {
    const std::size_t top = std::max(a.size(), b.size());
    for (std::size_t d = 0; d < top; ++d) {
        const long long x = d < a.size() ? a[d] : 0;
        const long long y = d < b.size() ? b[d] : 0;
        if (x != y) return false;
    }
    return true;
}

}  // namespace

BundleReport bundle_truncation_check(const SimplicialComplex& base, const SimplicialComplex& fibre,
                                     const std::vector<ExtendedInt>& stratum_values) {
    BundleReport report;
    const StratifiedComplex x = trivial_bundle_build(base, fibre);
    std::string singular_id;
    long long top_value = 0;
    for (const Stratum& s : x.strata) {
        if (s.regular) continue;
        if (!singular_id.empty()) throw ValidationError("bundle build produced several singular strata");
        singular_id = s.id;
        top_value = s.codim - 2;
    }
    if (singular_id.empty()) throw ValidationError("bundle build produced no singular stratum");

    const std::vector<long long> base_dims = rational_dims(base);
    const std::vector<long long> fibre_dims = rational_dims(fibre);

    report.entries = indexed_map<BundleEntry>(stratum_values.size(), [&](std::size_t i) {
        BundleEntry entry;
        entry.stratum_value = stratum_values[i];
        entry.truncation = ExtendedInt(top_value) - entry.stratum_value;
        Perversity p;
        p.values[singular_id] = entry.stratum_value;
        entry.computed = homology_field(intersection_chain_complex(x, p).complex, 0);
        entry.expected = convolution(base_dims, truncated_dims(fibre_dims, entry.truncation));
        entry.pass = dims_equal(entry.computed, entry.expected);
        return entry;
    });
    report.all_pass =
        std::all_of(report.entries.begin(), report.entries.end(), [](const BundleEntry& e) { return e.pass; });
    return report;
}

namespace {

/// A cone apex: a level-0 vertex forming its own stratum and contained in
/// every maximal simplex.
std::optional<int> detect_apex(const StratifiedComplex& x) {
    for (const Stratum& s : x.strata) {
        if (s.level != 0 || s.simplices.size() != 1 || s.simplices.front().size() != 1) continue;
        const int apex = s.simplices.front().front();
        bool in_all = true;
        for (const Simplex& m : x.complex.maximal_simplices()) {
            if (!std::binary_search(m.begin(), m.end(), apex)) {
                in_all = false;
                break;
            }
        }
        if (in_all) return apex;
    }
    return std::nullopt;
}

}  // namespace

FullnessGapReport fullness_gap_report(const StratifiedComplex& x, const Perversity& p) {
    FullnessGapReport report;
    const AllowabilityReport allowability = full_simplexes(x, p);
    report.gap = allowability.gap();
    report.gajer_homology = homology(gajer_subcomplex(x, p, allowability).complex);
    report.intersection_homology = homology(intersection_chain_complex(x, p, allowability).complex);
    report.gajer_matches_intersection = report.gajer_homology == report.intersection_homology;

    if (auto apex = detect_apex(x)) {
        const Stratum& apex_stratum = x.strata[static_cast<std::size_t>(x.stratum_of({*apex}))];
        const ExtendedInt truncation = ExtendedInt(apex_stratum.codim - 2) - p.at(apex_stratum);
        const LinkResult link = combinatorial_link(x.complex, *apex);
        report.cone_oracle = cone_truncation_oracle(homology(link.complex), truncation);
        report.intersection_matches_oracle = report.intersection_homology == *report.cone_oracle;
        report.gajer_matches_oracle = report.gajer_homology == *report.cone_oracle;
    }
    return report;
}

StratifiedSubdivision subdivide_stratified(const StratifiedComplex& x) {
    StratifiedSubdivision out;
    out.subdivision = barycentric_subdivision(x.complex);
    const SimplicialComplex& sd = out.subdivision.complex;
    Filtration f = uniform_filtration(sd, x.formal_dim());
    for (int d = 0; d <= sd.dim(); ++d) {
        const auto& simplices = sd.simplices(d);
        for (std::size_t i = 0; i < simplices.size(); ++i)
            f.levels[static_cast<std::size_t>(d)][i] =
                x.filtration.level_of(x.complex, out.subdivision.carrier(simplices[i]));
    }
    out.space = compute_strata(sd, f);
    for (const Stratum& s : out.space.strata) {
        const int target = x.stratum_of(out.subdivision.carrier(s.simplices.front()));
        for (const Simplex& member : s.simplices) {
            if (x.stratum_of(out.subdivision.carrier(member)) != target)
                throw ValidationError("subdivision stratum crosses several original strata");
        }
        out.stratum_target[s.id] = x.strata[static_cast<std::size_t>(target)].id;
    }
    return out;
}

Perversity transported_perversity(const StratifiedSubdivision& sd, const StratifiedComplex& original,
                                  const Perversity& p) {
    Perversity out;
    for (const Stratum& s : sd.space.strata) {
        if (s.regular) continue;
        out.values[s.id] = p.at(original.stratum_by_id(sd.stratum_target.at(s.id)));
    }
    return out;
}

SubdivisionReport subdivision_sensitivity_report(const StratifiedComplex& x, const Perversity& p) {
    SubdivisionReport report;
    const StratifiedSubdivision sd = subdivide_stratified(x);
    const Perversity q = transported_perversity(sd, x, p);

    report.ordinary_before = homology(x.complex);
    report.ordinary_after = homology(sd.space.complex);
    report.intersection_before = intersection_homology(x, p);
    report.intersection_after = intersection_homology(sd.space, q);
    report.gajer_before = homology(gajer_subcomplex(x, p).complex);
    report.gajer_after = homology(gajer_subcomplex(sd.space, q).complex);
    report.ordinary_unchanged = report.ordinary_before == report.ordinary_after;
    report.intersection_unchanged = report.intersection_before == report.intersection_after;
    report.gajer_unchanged = report.gajer_before == report.gajer_after;
    return report;
}

std::vector<ExtendedInt> perversity_sweep(long long min_value, long long max_value, bool with_infinities) {
    std::vector<ExtendedInt> out;
    if (with_infinities) out.push_back(ExtendedInt::minus_infinity());
    for (long long v = min_value; v <= max_value; ++v) out.push_back(ExtendedInt(v));
    if (with_infinities) out.push_back(ExtendedInt::plus_infinity());
    return out;
}

}  // namespace strathom
