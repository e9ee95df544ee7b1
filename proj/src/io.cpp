#include "strathom/io.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "strathom/errors.hpp"

namespace strathom {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
}

void reject_unknown_fields(const json& object, const std::set<std::string>& known, const std::string& where) {
    for (auto it = object.begin(); it != object.end(); ++it) {
        if (known.find(it.key()) == known.end())
            throw ValidationError("unknown field '" + it.key() + "' in " + where);
    }
}

int require_int(const json& object, const std::string& key, const std::string& where) {
    auto it = object.find(key);
    if (it == object.end()) throw ValidationError("missing field '" + key + "' in " + where);
    if (!it->is_number_integer()) throw ValidationError("field '" + key + "' in " + where + " must be an integer");
    return it->get<int>();
}

Simplex read_simplex(const json& value, const std::string& where) {
    if (!value.is_array()) throw ValidationError("simplex in " + where + " must be an array of vertex indices");
    Simplex s;
    for (const json& entry : value) {
        if (!entry.is_number_integer()) throw ValidationError("simplex entries in " + where + " must be integers");
        s.push_back(entry.get<int>());
    }
    return s;
}

std::vector<Simplex> read_simplex_list(const json& value, const std::string& where) {
    if (!value.is_array()) throw ValidationError(where + " must be an array");
    std::vector<Simplex> out;
    for (const json& entry : value) out.push_back(read_simplex(entry, where));
    return out;
}

json simplex_to_json(const Simplex& s) {
    json out = json::array();
    for (int v : s) out.push_back(v);
    return out;
}

json simplices_to_json(std::vector<Simplex> list) {
    std::sort(list.begin(), list.end());
    json out = json::array();
    for (const Simplex& s : list) out.push_back(simplex_to_json(s));
    return out;
}

}  // namespace

ComplexDocument parse_complex(const std::string& text) {
    const json root = parse_json(text);
    if (!root.is_object()) throw ValidationError("complex document must be an object");
    reject_unknown_fields(root, {"format", "formal_dim", "vertex_count", "maximal_simplices", "filtration"},
                          "complex document");
    auto format = root.find("format");
    if (format == root.end() || !format->is_string() || format->get<std::string>() != kComplexFormat)
        throw ValidationError(std::string("complex document must carry format tag '") + kComplexFormat + "'");

    ComplexDocument doc;
    doc.formal_dim = require_int(root, "formal_dim", "complex document");
    doc.vertex_count = require_int(root, "vertex_count", "complex document");
    if (doc.formal_dim < 0) throw ValidationError("formal_dim must be nonnegative");
    if (doc.vertex_count < 0) throw ValidationError("vertex_count must be nonnegative");
    auto maximal = root.find("maximal_simplices");
    if (maximal == root.end()) throw ValidationError("missing field 'maximal_simplices' in complex document");
    doc.maximal_simplices = read_simplex_list(*maximal, "maximal_simplices");

    auto filtration = root.find("filtration");
    if (filtration != root.end()) {
        if (!filtration->is_array()) throw ValidationError("filtration must be an array");
        int previous_level = -1;
        for (const json& entry : *filtration) {
            if (!entry.is_object()) throw ValidationError("filtration entries must be objects");
            reject_unknown_fields(entry, {"level", "generators"}, "filtration entry");
            const int level = require_int(entry, "level", "filtration entry");
            if (level <= previous_level) throw ValidationError("filtration levels must be strictly increasing");
            if (level > doc.formal_dim)
                throw ValidationError("filtration level " + std::to_string(level) + " exceeds formal_dim");
            if (level < 0) throw ValidationError("filtration levels must be nonnegative");
            previous_level = level;
            auto generators = entry.find("generators");
            if (generators == entry.end()) throw ValidationError("filtration entry has no generators");
            doc.filtration.emplace_back(level, read_simplex_list(*generators, "filtration generators"));
        }
    }
    return doc;
}

StratifiedComplex build_space(const ComplexDocument& doc, std::vector<std::string>* notes) {
    const SimplicialComplex k = build_complex(doc.vertex_count, doc.maximal_simplices);
    for (const auto& [level, generators] : doc.filtration) {
        (void)level;
        for (const Simplex& g : generators) {
            Simplex sorted = g;
            std::sort(sorted.begin(), sorted.end());
            if (!k.contains(sorted))
                throw ValidationError("filtration generator is not a stored simplex of the complex");
        }
    }
    const Filtration f = filtration_from_generators(k, doc.formal_dim, doc.filtration);
    StratifiedComplex x = compute_strata(k, f);
    if (notes != nullptr) {
        const ComplexDocument canonical = document_of(x);
        if (!(canonical.maximal_simplices == doc.maximal_simplices && canonical.filtration == doc.filtration))
            notes->push_back("document normalized: maximal simplices and filtration generators rewritten canonically");
        for (const std::string& w : x.warnings) notes->push_back(w);
    }
    return x;
}

ComplexDocument document_of(const StratifiedComplex& x) {
    ComplexDocument doc;
    doc.formal_dim = x.formal_dim();
    doc.vertex_count = x.complex.vertex_count();
    doc.maximal_simplices = x.complex.maximal_simplices();
    std::sort(doc.maximal_simplices.begin(), doc.maximal_simplices.end());

    std::set<int> attained;
    for (int d = 0; d <= x.complex.dim(); ++d)
        for (int level : x.filtration.levels[static_cast<std::size_t>(d)]) attained.insert(level);
    for (int level : attained) {
        if (level >= doc.formal_dim) continue;  // the top stage is implicit
        std::vector<Simplex> stage;
        for (int d = 0; d <= x.complex.dim(); ++d) {
            const auto& simplices = x.complex.simplices(d);
            for (std::size_t i = 0; i < simplices.size(); ++i)
                if (x.filtration.levels[static_cast<std::size_t>(d)][i] <= level) stage.push_back(simplices[i]);
        }
        const SimplicialComplex sub = build_complex(doc.vertex_count, stage);
        std::vector<Simplex> generators = sub.maximal_simplices();
        std::sort(generators.begin(), generators.end());
        doc.filtration.emplace_back(level, std::move(generators));
    }
    return doc;
}

std::string serialize_complex(const ComplexDocument& doc) {
    // canonicalize through the built space so equal structures print equally
    const ComplexDocument canonical = document_of(build_space(doc));
    json root;
    root["format"] = kComplexFormat;
    root["formal_dim"] = canonical.formal_dim;
    root["vertex_count"] = canonical.vertex_count;
    root["maximal_simplices"] = simplices_to_json(canonical.maximal_simplices);
    json filtration = json::array();
    for (const auto& [level, generators] : canonical.filtration) {
        json entry;
        entry["level"] = level;
        entry["generators"] = simplices_to_json(generators);
        filtration.push_back(entry);
    }
    root["filtration"] = filtration;
    return root.dump(2) + "\n";
}

std::string content_hash(const std::string& canonical_text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : canonical_text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

PerversityDocument parse_perversity(const std::string& text) {
    const json root = parse_json(text);
    if (!root.is_object()) throw ValidationError("perversity document must be an object");
    reject_unknown_fields(root, {"format", "complex_hash", "values"}, "perversity document");
    auto format = root.find("format");
    if (format == root.end() || !format->is_string() || format->get<std::string>() != kPerversityFormat)
        throw ValidationError(std::string("perversity document must carry format tag '") + kPerversityFormat + "'");
    PerversityDocument doc;
    auto hash = root.find("complex_hash");
    if (hash == root.end() || !hash->is_string())
        throw ValidationError("perversity document must carry the complex content hash");
    doc.complex_hash = hash->get<std::string>();
    auto values = root.find("values");
    if (values == root.end() || !values->is_object())
        throw ValidationError("perversity document must carry a 'values' object");
    for (auto it = values->begin(); it != values->end(); ++it) {
        if (it->is_number_integer())
            doc.values[it.key()] = ExtendedInt(it->get<long long>());
        else if (it->is_string())
            doc.values[it.key()] = ExtendedInt::parse(it->get<std::string>());
        else
            throw ValidationError("perversity values must be integers or '+inf'/'-inf'");
    }
    return doc;
}

std::string serialize_perversity(const PerversityDocument& doc) {
    json root;
    root["format"] = kPerversityFormat;
    root["complex_hash"] = doc.complex_hash;
    json values = json::object();
    for (const auto& [id, v] : doc.values) values[id] = to_json(v);
    root["values"] = values;
    return root.dump(2) + "\n";
}

PerversityDocument document_of(const StratifiedComplex& x, const Perversity& p) {
    validate_perversity(x, p);
    PerversityDocument doc;
    doc.complex_hash = content_hash(x);
    for (const Stratum& s : x.strata)
        if (!s.regular) doc.values[s.id] = p.at(s);
    return doc;
}

Perversity bind_perversity(const PerversityDocument& doc, const StratifiedComplex& x) {
    const std::string expected = content_hash(x);
    if (doc.complex_hash != expected)
        throw ValidationError("perversity document was written for a different complex (content hash " +
                              doc.complex_hash + ", expected " + expected + ")");
    Perversity p;
    for (const auto& [id, v] : doc.values) {
        (void)x.stratum_by_id(id);  // throws for unknown ids
        p.values[id] = v;
    }
    validate_perversity(x, p);
    return p;
}

json to_json(const ExtendedInt& v) {
    if (v.is_finite()) return json(v.finite_value());
    return json(v.str());
}

json to_json(const Integer& v) {
    static const Integer max64 = Integer(std::numeric_limits<std::int64_t>::max());
    static const Integer min64 = Integer(std::numeric_limits<std::int64_t>::min());
    if (v <= max64 && v >= min64) return json(static_cast<std::int64_t>(v));
    return json(v.str());
}

json to_json(const HomologySummary& h) {
    json out = json::array();
    for (int d = 0; d < h.size(); ++d) {
        json entry;
        entry["betti"] = h.at(d).betti;
        json torsion = json::array();
        for (const Integer& t : h.at(d).torsion) torsion.push_back(to_json(t));
        entry["torsion"] = torsion;
        out.push_back(entry);
    }
    return out;
}

json to_json(const FrontierVerdict& v) {
    json out;
    out["pass"] = v.pass;
    if (!v.pass) {
        out["lower_stratum"] = v.lower_id;
        out["upper_stratum"] = v.upper_id;
        out["meeting_simplex"] = simplex_to_json(v.meeting_simplex);
        out["missing_simplex"] = simplex_to_json(v.missing_simplex);
    }
    return out;
}

json to_json(const StratifiedComplex& x) {
    json strata = json::array();
    for (const Stratum& s : x.strata) {
        json entry;
        entry["id"] = s.id;
        entry["level"] = s.level;
        entry["formal_dim"] = s.formal_dim;
        entry["codim"] = s.codim;
        entry["regular"] = s.regular;
        entry["simplex_count"] = static_cast<long long>(s.simplices.size());
        entry["smallest_simplex"] = simplex_to_json(s.simplices.front());
        strata.push_back(entry);
    }
    json order = json::array();
    for (std::size_t i = 0; i < x.strata.size(); ++i)
        for (std::size_t j = 0; j < x.strata.size(); ++j)
            if (i != j && x.closure_order[i][j])
                order.push_back(json::array({x.strata[i].id, x.strata[j].id}));
    json out;
    out["formal_dim"] = x.formal_dim();
    out["strata"] = strata;
    out["closure_order"] = order;
    json warnings = json::array();
    for (const std::string& w : x.warnings) warnings.push_back(w);
    out["warnings"] = warnings;
    return out;
}

json to_json(const AllowabilityReport& r) {
    json entries = json::array();
    for (const SimplexVerdict& v : r.entries) {
        json entry;
        entry["simplex"] = simplex_to_json(v.simplex);
        entry["allowable"] = v.allowable;
        entry["full"] = v.full;
        json violations = json::array();
        for (const StratumViolation& viol : v.violations) {
            json one;
            one["stratum"] = viol.stratum_id;
            one["preimage_dim"] = to_json(viol.preimage_dim);
            one["bound"] = to_json(viol.bound);
            violations.push_back(one);
        }
        entry["violations"] = violations;
        if (v.first_failing_face) entry["first_failing_face"] = simplex_to_json(*v.first_failing_face);
        entries.push_back(entry);
    }
    json out;
    out["simplexes"] = entries;
    return out;
}

json to_json(const ConeFormulaReport& r) {
    json entries = json::array();
    for (const ConeFormulaEntry& e : r.entries) {
        json entry;
        entry["apex_value"] = to_json(e.apex_value);
        entry["truncation"] = to_json(e.truncation);
        entry["computed"] = to_json(e.computed);
        entry["expected"] = to_json(e.expected);
        entry["disagreeing_degrees"] = e.disagreeing_degrees;
        entry["pass"] = e.pass;
        entries.push_back(entry);
    }
    json out;
    out["entries"] = entries;
    out["all_pass"] = r.all_pass;
    out["warnings"] = r.warnings;
    return out;
}

json to_json(const IteratedConeReport& r) {
    json entries = json::array();
    for (const IteratedConeEntry& e : r.entries) {
        json entry;
        entry["outer_value"] = to_json(e.outer_value);
        entry["inner_value"] = to_json(e.inner_value);
        entry["outer_truncation"] = to_json(e.outer_truncation);
        entry["inner_truncation"] = to_json(e.inner_truncation);
        entry["computed"] = to_json(e.computed);
        entry["expected"] = to_json(e.expected);
        entry["pass"] = e.pass;
        entries.push_back(entry);
    }
    json out;
    out["entries"] = entries;
    out["all_pass"] = r.all_pass;
    return out;
}

json to_json(const BundleReport& r) {
    json entries = json::array();
    for (const BundleEntry& e : r.entries) {
        json entry;
        entry["stratum_value"] = to_json(e.stratum_value);
        entry["truncation"] = to_json(e.truncation);
        entry["computed"] = e.computed;
        entry["expected"] = e.expected;
        entry["pass"] = e.pass;
        entries.push_back(entry);
    }
    json out;
    out["entries"] = entries;
    out["all_pass"] = r.all_pass;
    return out;
}

namespace {

json part_to_json(const MayerVietorisPart& part) {
    json degrees = json::array();
    for (const MayerVietorisDegree& d : part.degrees) {
        json row;
        row["degree"] = d.degree;
        row["chain_injective"] = d.chain_injective;
        row["chain_middle_exact"] = d.chain_middle_exact;
        row["chain_surjective"] = d.chain_surjective;
        row["exact_at_intersection"] = d.exact_at_intersection;
        row["exact_at_pair"] = d.exact_at_pair;
        row["exact_at_union"] = d.exact_at_union;
        degrees.push_back(row);
    }
    json out;
    out["degrees"] = degrees;
    out["homology_intersection"] = to_json(part.intersection_homology);
    out["homology_left"] = to_json(part.left_homology);
    out["homology_right"] = to_json(part.right_homology);
    out["homology_sum"] = to_json(part.sum_homology);
    out["homology_total"] = to_json(part.total_homology);
    out["sum_inclusion_quasi_iso"] = part.sum_inclusion_quasi_iso;
    out["all_exact"] = part.all_exact();
    return out;
}

}  // namespace

json to_json(const MayerVietorisReport& r) {
    json out;
    out["ordinary"] = part_to_json(r.ordinary);
    out["intersection"] = part_to_json(r.intersection);
    out["pass"] = r.pass();
    return out;
}

json to_json(const FullnessGapReport& r) {
    json out;
    out["gap"] = simplices_to_json(r.gap);
    out["gajer_homology"] = to_json(r.gajer_homology);
    out["intersection_homology"] = to_json(r.intersection_homology);
    out["gajer_matches_intersection"] = r.gajer_matches_intersection;
    if (r.cone_oracle) {
        out["cone_oracle"] = to_json(*r.cone_oracle);
        out["intersection_matches_oracle"] = *r.intersection_matches_oracle;
        out["gajer_matches_oracle"] = *r.gajer_matches_oracle;
    }
    return out;
}

json to_json(const SubdivisionReport& r) {
    json out;
    out["ordinary_before"] = to_json(r.ordinary_before);
    out["ordinary_after"] = to_json(r.ordinary_after);
    out["intersection_before"] = to_json(r.intersection_before);
    out["intersection_after"] = to_json(r.intersection_after);
    out["gajer_before"] = to_json(r.gajer_before);
    out["gajer_after"] = to_json(r.gajer_after);
    out["ordinary_unchanged"] = r.ordinary_unchanged;
    out["intersection_unchanged"] = r.intersection_unchanged;
    out["gajer_unchanged"] = r.gajer_unchanged;
    return out;
}

std::string serialize_report(const std::string& kind, json payload) {
    json root;
    root["format"] = kReportFormat;
    root["kind"] = kind;
    root["report"] = std::move(payload);
    return root.dump(2) + "\n";
}

}  // namespace strathom
