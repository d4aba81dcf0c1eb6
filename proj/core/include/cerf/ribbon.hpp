#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "cerf/error.hpp"

namespace cerf {

/// Ribbon neighbourhood of a 4-valent critical level graph.
///
/// Half-edge 4v+i is the i-th half-edge at vertex v in counter-clockwise
/// order; sector i at v sits between half-edges i and i+1. Around a saddle
/// the sectors alternate between the upper (+) and lower (-) halves, so one
/// sign per vertex (that of sector 0) fixes the side colouring.
struct RibbonNeighborhood {
    int vertices = 0;
    std::vector<int> partner;      // involution on half-edges
    std::vector<int> sector_signs; // sign of sector 0, per vertex

    int half_edges() const { return 4 * vertices; }
    int sector_sign(int v, int sector) const { return sector_signs[v] * (sector % 2 == 0 ? 1 : -1); }
    bool operator==(const RibbonNeighborhood&) const = default;
};

struct RibbonProfile {
    int euler_characteristic = 0;
    int boundary_circles = 0;
    int genus = 0;
    bool operator==(const RibbonProfile&) const = default;
};

/// Structural checks only: involution, sizes, signs.
ValidationReport validate_ribbon_structure(const RibbonNeighborhood& n);
/// Full checks: structure, connected, every boundary circle monochromatic, both sides present.
ValidationReport validate_ribbon(const RibbonNeighborhood& n);

bool is_connected(const RibbonNeighborhood& n);
/// Faces of the ribbon surface, ignoring the side colouring.
RibbonProfile surface_profile(const RibbonNeighborhood& n);
/// Profile of a valid neighbourhood; throws INVALID_NEIGHBORHOOD otherwise.
RibbonProfile ribbon_profile(const RibbonNeighborhood& n);

struct RibbonCode {
    std::vector<int> partner;
    std::vector<int> sides; // 0 for +, 1 for -
    auto operator<=>(const RibbonCode&) const = default;
};

/// Image under vertex relabelling perm (old -> new), per-vertex rotation and optional side swap.
RibbonNeighborhood transform(const RibbonNeighborhood& n, const std::vector<int>& perm, const std::vector<int>& rotation,
                             bool swap_sides);
RibbonCode encode(const RibbonNeighborhood& n);
RibbonNeighborhood decode(const RibbonCode& code);
/// Lexicographically least encoding over all relabellings, rotations and side swaps.
RibbonCode canonical_code(const RibbonNeighborhood& n);

struct CensusEntry {
    RibbonNeighborhood neighborhood; // decoded canonical code
    RibbonProfile profile;
    std::size_t labelled = 0; // labelled configurations in the class
};

/// Isomorphism classes of valid neighbourhoods on connected 4-valent graphs
/// with the given number of vertices, in canonical-code order.
std::vector<CensusEntry> ribbon_census(int vertices);

/// Removes vertex r by pushing it above (raise) or below the others: the
/// level set near r then joins its half-edges across its lower sectors
/// (raise) or upper sectors (lower). Remaining vertices are renumbered in order.
RibbonNeighborhood resolve_vertex(const RibbonNeighborhood& n, int r, bool raise);

} // namespace cerf
