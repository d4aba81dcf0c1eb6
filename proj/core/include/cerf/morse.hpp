#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cerf/error.hpp"
#include "cerf/surface.hpp"

namespace cerf {

using Height = boost::rational<std::int64_t>;

std::string height_to_string(const Height& h);
Height parse_height(const std::string& text); // "n/d" or "n"

enum class MorseEventKind { Birth, Death, Merge, Split };

const char* to_string(MorseEventKind kind);

/// One critical point. Births have one output circle, deaths one input,
/// merges two inputs and one output, splits one input and two outputs.
struct MorseEvent {
    MorseEventKind kind = MorseEventKind::Birth;
    std::vector<int> in;
    std::vector<int> out;
    Height height{0};

    static MorseEvent birth(int out, Height h) { return {MorseEventKind::Birth, {}, {out}, h}; }
    static MorseEvent death(int in, Height h) { return {MorseEventKind::Death, {in}, {}, h}; }
    static MorseEvent merge(int in1, int in2, int out, Height h) { return {MorseEventKind::Merge, {in1, in2}, {out}, h}; }
    static MorseEvent split(int in, int out1, int out2, Height h) {
        return {MorseEventKind::Split, {in}, {out1, out2}, h};
    }

    int index() const; // Morse index: 0, 2, or 1 for saddles
    bool operator==(const MorseEvent&) const = default;
};

struct SlicedMorseFunction {
    std::vector<MorseEvent> events;
    bool operator==(const SlicedMorseFunction&) const = default;
};

struct MorseValidation {
    int genus = -1; // -1 when the report is not clean
    ValidationReport report;
};

MorseValidation validate_sliced(const SlicedMorseFunction& f);

struct ReebEdge {
    int circle = 0;
    std::size_t from = 0; // creating event
    std::size_t to = 0;   // consuming event
    Height created{0};
    Height destroyed{0};
};

struct ReebGraph {
    std::size_t vertex_count = 0; // one vertex per event
    std::vector<ReebEdge> edges;
    int betti = 0;

    std::vector<int> degrees() const;
};

ReebGraph reeb_graph(const SlicedMorseFunction& f);

struct CriticalNeighborhood {
    std::size_t event = 0;
    int euler_characteristic = 0;
    int boundary_circles = 0;
    int genus = 0;
};

CriticalNeighborhood critical_neighborhood(const SlicedMorseFunction& f, std::size_t event);

/// How a level circle is picked on each independent Reeb cycle.
enum class CycleSelection {
    LowestClosing,  // sweep upward, take the circle that first closes a loop
    HighestClosing, // sweep downward
};

/// Circle ids, one per independent Reeb cycle, in cycle order.
std::vector<int> reeb_cycle_circles(const SlicedMorseFunction& f, CycleSelection rule = CycleSelection::LowestClosing);

/// Class assigned to each Reeb cycle (by cycle order).
using BasisMap = std::vector<HomologyClass>;

BasisMap standard_basis_map(const SymplecticLattice& lattice); // cycle i -> a_(i+1)

CutSystem cut_system_from_morse(const SlicedMorseFunction& f, const SymplecticLattice& lattice,
                                const BasisMap& basis_map,
                                CycleSelection rule = CycleSelection::LowestClosing);

SlicedMorseFunction sphere_function();
/// Birth, g torus blocks (split then merge), death.
SlicedMorseFunction stacked_function(int genus);

} // namespace cerf
