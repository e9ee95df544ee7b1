#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "strathom/verification.hpp"

namespace strathom {

inline constexpr const char* kComplexFormat = "strathom-complex/1";
inline constexpr const char* kPerversityFormat = "strathom-perversity/1";
inline constexpr const char* kReportFormat = "strathom-report/1";

/// The textual form of a stratified complex: maximal simplices plus
/// filtration generators per level. Parsing is strict; unknown fields are
/// rejected.
struct ComplexDocument {
    int formal_dim = 0;
    int vertex_count = 0;
    std::vector<Simplex> maximal_simplices;
    std::vector<std::pair<int, std::vector<Simplex>>> filtration;  // strictly increasing levels
};

ComplexDocument parse_complex(const std::string& text);

/// Builds the stratified complex a document describes. Filtration
/// generators are implicitly face-closed; a normalization note is recorded
/// when the listed generators were not already the canonical ones.
StratifiedComplex build_space(const ComplexDocument& doc, std::vector<std::string>* notes = nullptr);

/// The canonical document of a space: lexicographic maximal simplices and,
/// per attained level below the formal dimension, the maximal generators of
/// that filtration stage.
ComplexDocument document_of(const StratifiedComplex& x);

/// Canonical text. Structurally equal documents serialize identically;
/// parse followed by serialize is the identity on canonical documents.
std::string serialize_complex(const ComplexDocument& doc);
inline std::string serialize_complex(const StratifiedComplex& x) { return serialize_complex(document_of(x)); }

/// FNV-1a 64-bit hash of canonical text, as fixed-width hex. Perversity
/// documents carry it to detect drift of the complex they were written for.
std::string content_hash(const std::string& canonical_text);
inline std::string content_hash(const StratifiedComplex& x) { return content_hash(serialize_complex(x)); }

struct PerversityDocument {
    std::string complex_hash;  // hash of the canonical complex document
    std::map<std::string, ExtendedInt> values;
};

PerversityDocument parse_perversity(const std::string& text);
std::string serialize_perversity(const PerversityDocument& doc);
PerversityDocument document_of(const StratifiedComplex& x, const Perversity& p);

/// Binds a perversity document to a space, checking the content hash and
/// the stratum ids.
Perversity bind_perversity(const PerversityDocument& doc, const StratifiedComplex& x);

nlohmann::json to_json(const ExtendedInt& v);
nlohmann::json to_json(const Integer& v);
nlohmann::json to_json(const HomologySummary& h);
nlohmann::json to_json(const FrontierVerdict& v);
nlohmann::json to_json(const StratifiedComplex& x);  // strata listing
nlohmann::json to_json(const AllowabilityReport& r);
nlohmann::json to_json(const ConeFormulaReport& r);
nlohmann::json to_json(const IteratedConeReport& r);
nlohmann::json to_json(const BundleReport& r);
nlohmann::json to_json(const MayerVietorisReport& r);
nlohmann::json to_json(const FullnessGapReport& r);
nlohmann::json to_json(const SubdivisionReport& r);

/// Wraps a payload as a report document of the given kind, canonically.
std::string serialize_report(const std::string& kind, nlohmann::json payload);

}  // namespace strathom
