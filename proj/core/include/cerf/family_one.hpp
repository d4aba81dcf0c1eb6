#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cerf/invariants.hpp"
#include "cerf/morse.hpp"
#include "cerf/ribbon.hpp"
#include "cerf/surface.hpp"

namespace cerf {

enum class SwitchLocale { DifferentComponents, SameComponent };

struct SlideMove {
    std::size_t target = 0;
    std::size_t source = 0;
    int sign = 1;
    bool operator==(const SlideMove&) const = default;
};

/// Disk-bounding class before (from) and after (to) a genus-1 switch.
struct SurgeryPair {
    HomologyClass from;
    HomologyClass to;
    bool operator==(const SurgeryPair&) const = default;
};

struct Event1 {
    enum class Kind { Birth, Death, Switch };

    Kind kind = Kind::Switch;
    // Height switch data.
    int p = 0;
    int q = 0;
    std::array<int, 2> indices{1, 1};
    SwitchLocale locale = SwitchLocale::DifferentComponents;
    std::optional<RibbonNeighborhood> neighborhood; // same-component switches
    std::optional<SurgeryPair> surgery;             // genus-1 neighbourhoods
    std::optional<SlideMove> slide;                 // genus-0 neighbourhoods may record a handle slide

    static Event1 birth() {
        Event1 e;
        e.kind = Kind::Birth;
        return e;
    }
    static Event1 death() {
        Event1 e;
        e.kind = Kind::Death;
        return e;
    }
    bool operator==(const Event1&) const = default;
};

/// Endpoints name entries of the owning graphic's function table.
struct ElementaryInterval {
    std::string start;
    std::string end;
    std::optional<Event1> event;
    bool operator==(const ElementaryInterval&) const = default;
};

/// The same interval traversed backwards.
ElementaryInterval reversed(const ElementaryInterval& ei);

struct TrisectionLabel {
    int g = 0;
    int k = 0;
    bool operator==(const TrisectionLabel&) const = default;
};

struct CerfGraphic1 {
    int genus = 0;
    bool cyclic = false;
    std::map<std::string, SlicedMorseFunction> functions;
    std::vector<ElementaryInterval> segments;
    std::optional<CutSystem> start_cut_system;
    std::optional<TrisectionLabel> trisection;
    bool operator==(const CerfGraphic1&) const = default;
};

ValidationReport validate_graphic1(const CerfGraphic1& gr);

enum class IntervalType { Type0, Type1 };
const char* to_string(IntervalType t);

IntervalType classify_interval(const ElementaryInterval& ei);

struct IntervalOutcome {
    IntervalType type = IntervalType::Type0;
    CutSystem system;
    std::optional<std::size_t> slot; // surgered curve, Type1 only
};

IntervalOutcome apply_interval_detailed(const CutSystem& cs, const ElementaryInterval& ei, const SymplecticLattice& lattice);
CutSystem apply_interval(const CutSystem& cs, const ElementaryInterval& ei, const SymplecticLattice& lattice);

struct Surgery {
    std::size_t slot = 0;
    HomologyClass replaced;
    HomologyClass introduced;
    bool operator==(const Surgery&) const = default;
};

struct FourManifoldRecord {
    int genus = 0;
    bool cyclic = false;
    CutSystem initial;
    CutSystem final_system;
    std::vector<Surgery> surgeries;
    std::optional<int> k;           // g - #Type1 when every surgery hits its own slot
    AbelianGroupDescriptor boundary_h1; // coker of <initial, final>
    // Closed (circle) families only.
    std::optional<int> euler_characteristic;
    std::optional<int> signature;
    std::optional<AbelianGroupDescriptor> h1;
    bool operator==(const FourManifoldRecord&) const = default;
};

FourManifoldRecord assemble_interval_family(const CerfGraphic1& gr, const CutSystem& start_cs);
FourManifoldRecord assemble_circle_family(const CerfGraphic1& gr, const CutSystem& start_cs);

struct SlideSequence {
    std::vector<SlideMove> moves;
    Integer max_entry = 0; // largest |entry| met while factoring
    std::size_t bound = 0; // moves.size() <= bound
};

std::size_t slide_bound(std::size_t genus, Integer max_entry);

/// Slides turning cs1 into cs2. Exact unless the change of basis has
/// determinant -1, in which case one curve ends up reversed. Throws
/// SPAN_MISMATCH when the two systems span different Lagrangians.
SlideSequence interpolate_cut_systems(const CutSystem& cs1, const CutSystem& cs2, const SymplecticLattice& lattice);

CutSystem replay_slides(const CutSystem& cs, const std::vector<SlideMove>& moves, const SymplecticLattice& lattice);

/// The two-vertex census; entry 0 onward in canonical order.
const std::vector<CensusEntry>& figure1_census();
const RibbonNeighborhood& genus0_switch_neighborhood();
const RibbonNeighborhood& genus1_switch_neighborhood();
std::vector<RibbonNeighborhood> enumerate_switch_neighborhoods();

/// Elementary intervals taking `current` to `to` (up to curve signs): slides,
/// one genus-1 switch per dual pair, slides. `current` is replaced by the
/// replayed end system. Node names are name_prefix + counter.
std::vector<ElementaryInterval> handlebody_path(CutSystem& current, const CutSystem& to,
                                                const SymplecticLattice& lattice, const std::string& name_prefix,
                                                std::size_t& counter);

/// Non-cyclic graphic from alpha to beta.
CerfGraphic1 handlebody_path_family(const CutSystem& alpha, const CutSystem& beta, const SymplecticLattice& lattice);

/// Cyclic graphic alpha -> beta -> gamma -> alpha.
CerfGraphic1 standard_family_from_trisection(const TrisectionDiagram& t);

/// 1-based sector: 1 = alpha->beta, 2 = beta->gamma, 3 = gamma->alpha.
CerfGraphic1 trisection_sector_family(const TrisectionDiagram& t, int sector);

/// alpha = {a_i}, beta = {a_1..a_k, b_(k+1)..b_g}.
std::pair<CutSystem, CutSystem> standard_heegaard_pair(int g, int k);

} // namespace cerf
