#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "cerf/family_two.hpp"

namespace cerf {

inline constexpr const char* kFormatVersion = "1.0.0";

/// Named curves and named cut systems built from them.
struct SurfaceData {
    int genus = 0;
    std::map<std::string, HomologyClass> curves;
    std::map<std::string, std::vector<std::string>> cut_systems;

    CutSystem cut_system(const std::string& name) const;
    bool operator==(const SurfaceData&) const = default;
};

struct MorseData {
    SlicedMorseFunction function;
    std::optional<BasisMap> basis_map;
    bool operator==(const MorseData&) const = default;
};

enum class DocumentKind { Surface, Morse, Graphic1, Trisection, Decomposition };
const char* to_string(DocumentKind kind);

struct Document {
    std::string format_version = kFormatVersion;
    std::variant<SurfaceData, MorseData, CerfGraphic1, TrisectionDiagram, PolygonDecomposition> payload;

    DocumentKind kind() const { return static_cast<DocumentKind>(payload.index()); }
    bool operator==(const Document&) const = default;
};

/// Strict parse; throws Error with codes such as MALFORMED_JSON,
/// UNKNOWN_VERSION, UNKNOWN_FIELD, DUPLICATE_HEIGHT, DANGLING_CIRCLE_ID.
Document parse_document(const std::string& text);
Document read_document(const std::string& path);

nlohmann::json document_to_json(const Document& doc);
std::string serialize_document(const Document& doc);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

// Report fragments shared by the CLI.
nlohmann::json class_to_json(const HomologyClass& c);
nlohmann::json cut_system_to_json(const CutSystem& cs);
nlohmann::json group_to_json(const AbelianGroupDescriptor& g);
nlohmann::json neighborhood_to_json(const RibbonNeighborhood& n);
nlohmann::json profile_to_json(const RibbonProfile& p);
nlohmann::json record_to_json(const FourManifoldRecord& r);
nlohmann::json capping_to_json(const CappingReport& r);
nlohmann::json report_to_json(const ValidationReport& r);
nlohmann::json morse_function_to_json(const SlicedMorseFunction& f);

} // namespace cerf
