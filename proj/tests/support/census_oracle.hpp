#pragma once

#include <cstddef>
#include <vector>

namespace cerf::oracle {

struct OracleClass {
    int genus = 0;
    int boundary = 0;
    std::size_t labelled = 0;
    auto operator<=>(const OracleClass&) const = default;
};

/// Brute-force census of connected two-coloured 4-valent ribbon
/// neighbourhoods on `vertices` vertices. Classes are orbits of the group
/// generated by vertex relabelling, quarter turns at a vertex and the colour
/// swap, found by union-find. Sorted.
std::vector<OracleClass> census_by_orbits(int vertices);

} // namespace cerf::oracle
