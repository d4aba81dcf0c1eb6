#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cerf/family_one.hpp"

namespace cerf {

struct Event2 {
    enum class Kind { Swallowtail, BirthMorseCross, TripleSwitch };

    Kind kind = Kind::Swallowtail;
    std::optional<RibbonNeighborhood> neighborhood;          // triple switch, 3 vertices
    std::optional<std::array<HomologyClass, 3>> local_classes; // genus-1 triple switch: c_p, c_q, c_r
    bool operator==(const Event2&) const = default;
};

const char* to_string(Event2::Kind kind);

/// Boundary edges run counter-clockwise and chain through function names.
struct ElementaryPolygon {
    std::vector<ElementaryInterval> boundary;
    std::optional<Event2> center;
    bool operator==(const ElementaryPolygon&) const = default;
};

struct EdgeRef {
    std::size_t polygon = 0;
    std::size_t edge = 0;
    auto operator<=>(const EdgeRef&) const = default;
};

struct Gluing {
    EdgeRef a;
    EdgeRef b;
    bool operator==(const Gluing&) const = default;
};

struct PolygonDecomposition {
    int genus = 0;
    std::map<std::string, SlicedMorseFunction> functions;
    std::vector<ElementaryPolygon> polygons;
    std::vector<Gluing> gluings;
    std::optional<CutSystem> start_cut_system; // cut system at the first boundary function
    std::optional<TrisectionLabel> trisection;
    bool operator==(const PolygonDecomposition&) const = default;
};

struct PolygonType {
    enum class Kind { Type0, Type1, Type2 };
    Kind kind = Kind::Type0;
    int sign = 0; // +1 or -1 for Type2, else 0

    static PolygonType type0() { return {Kind::Type0, 0}; }
    static PolygonType type1() { return {Kind::Type1, 0}; }
    static PolygonType type2(int sign) { return {Kind::Type2, sign}; }
    std::string to_string() const;
    bool operator==(const PolygonType&) const = default;
};

/// Census of three-vertex neighbourhoods.
const std::vector<CensusEntry>& triple_census();
std::vector<RibbonNeighborhood> enumerate_triple_graphs();

/// labels[i] is the vertex playing p, q, r for i = 0, 1, 2. Edge order around
/// the hexagon: p|qr, pq|r, q|pr, qr|p, r|qp, rp|q (higher values to the left).
std::array<IntervalType, 6> permutahedron_edge_types(const RibbonNeighborhood& triple, const std::array<int, 3>& labels);

/// The six labellings of {0,1,2} in lexicographic order.
std::vector<std::array<int, 3>> height_assignments();

PolygonType classify_polygon(const ElementaryPolygon& polygon);

ValidationReport validate_decomposition(const PolygonDecomposition& d);

/// The unglued edges read as one cyclic family.
CerfGraphic1 boundary_circle(const PolygonDecomposition& d);

struct CappingReport {
    int p = 0;
    int q = 0;
    std::vector<PolygonType> polygon_types;
    int genus = 0;
    std::optional<int> k;
    std::optional<int> euler_characteristic;
    std::optional<int> signature;
    std::optional<bool> signature_identity; // sigma + p - q == 0
    bool operator==(const CappingReport&) const = default;
};

CappingReport assemble_disk_family(const PolygonDecomposition& d);

/// A genus-1 triple neighbourhood, vertices relabelled so p,q,r = 0,1,2,
/// whose permutahedron edge types equal `pattern`.
RibbonNeighborhood triple_neighborhood_for(const std::array<IntervalType, 6>& pattern);

/// Caps a closed family with exactly three genus-1 switches by one hexagon,
/// padding with identity edges. The local triple is read against the
/// boundary direction.
PolygonDecomposition hexagon_cap(const CerfGraphic1& loop);

} // namespace cerf
