// Writes the generated fixture documents (compiled families, capped disks,
// polygon examples) into the directory given on the command line.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cerf/document.hpp"

using namespace cerf;

namespace {

void write(const std::filesystem::path& dir, const std::string& name, const Document& doc) {
    std::ofstream(dir / name, std::ios::binary) << serialize_document(doc);
}

TrisectionDiagram load_trisection(const std::filesystem::path& path) {
    return std::get<TrisectionDiagram>(read_document(path.string()).payload);
}

Event1 genus1_switch(const HomologyClass& from, const HomologyClass& to) {
    Event1 e;
    e.p = 1;
    e.q = 2;
    e.locale = SwitchLocale::SameComponent;
    e.neighborhood = genus1_switch_neighborhood();
    e.surgery = SurgeryPair{from, to};
    return e;
}

Event1 genus0_switch() {
    Event1 e;
    e.p = 1;
    e.q = 2;
    e.locale = SwitchLocale::SameComponent;
    e.neighborhood = genus0_switch_neighborhood();
    return e;
}

// Hexagon whose even edges are genus-1 switches x0 -> x1 -> x2 -> x0 and odd
// edges are constant. nodes[i] is the function at corner i.
ElementaryPolygon switch_hexagon(const std::array<std::string, 6>& nodes, const std::array<HomologyClass, 3>& x) {
    ElementaryPolygon h;
    for (int i = 0; i < 6; ++i) {
        ElementaryInterval e{nodes[i], nodes[(i + 1) % 6], std::nullopt};
        if (i % 2 == 0) {
            const auto& from = x[i / 2];
            auto to = x[(i / 2 + 1) % 3];
            const SymplecticLattice lattice(static_cast<int>(from.size() / 2));
            if (intersection_pairing(from, to, lattice) < 0) to = -to;
            e.event = genus1_switch(from, to);
        }
        h.boundary.push_back(e);
    }
    std::array<IntervalType, 6> pattern{};
    for (int i = 0; i < 6; ++i) pattern[i] = i % 2 == 0 ? IntervalType::Type1 : IntervalType::Type0;
    Event2 center;
    center.kind = Event2::Kind::TripleSwitch;
    center.neighborhood = triple_neighborhood_for(pattern);
    std::array<HomologyClass, 3> from{};
    for (int i = 0; i < 3; ++i) from[i] = h.boundary[2 * i].event->surgery->from;
    center.local_classes = std::array<HomologyClass, 3>{from[2], from[1], from[0]};
    h.center = center;
    return h;
}

PolygonDecomposition two_hexagons() {
    const SymplecticLattice lattice(2);
    const auto a1 = lattice.a(0), b1 = lattice.b(0), a2 = lattice.a(1), b2 = lattice.b(1);
    PolygonDecomposition d;
    d.genus = 2;
    const auto f = stacked_function(2);
    const std::array<std::string, 6> na{"A0", "A1", "A2", "A3", "A4", "A5"};
    const std::array<std::string, 6> nb{"A5", "B1", "B2", "B3", "B4", "A0"};
    for (const auto* nodes : {&na, &nb})
        for (const auto& n : *nodes) d.functions[n] = f;
    d.polygons.push_back(switch_hexagon(na, {a1, b1, a1 + b1}));
    d.polygons.push_back(switch_hexagon(nb, {a2, b2, a2 - b2}));
    d.gluings.push_back({{0, 5}, {1, 5}});
    d.start_cut_system = CutSystem{{a1, a2}, {}};
    return d;
}

PolygonDecomposition polygon_zoo() {
    const SymplecticLattice lattice(1);
    PolygonDecomposition d;
    d.genus = 1;
    const auto f = stacked_function(1);
    for (const char* n : {"s0", "s1", "d0", "d1", "m0", "m1", "m2", "t0", "t1", "t2", "t3", "t4", "t5"}) d.functions[n] = f;

    ElementaryPolygon swallowtail{{{"s0", "s1", Event1::birth()}, {"s1", "s0", Event1::death()}}, Event2{}};
    ElementaryPolygon doubled{{{"d0", "d1", genus1_switch(lattice.a(0), lattice.b(0))},
                               {"d1", "d0", genus1_switch(lattice.b(0), -lattice.a(0))}},
                              std::nullopt};
    Event2 cross;
    cross.kind = Event2::Kind::BirthMorseCross;
    ElementaryPolygon crossing{{{"m0", "m1", Event1::birth()}, {"m1", "m2", genus0_switch()}, {"m2", "m0", Event1::death()}},
                               cross};
    Event2 flat;
    flat.kind = Event2::Kind::TripleSwitch;
    for (const auto& entry : triple_census())
        if (entry.profile.genus == 0) {
            flat.neighborhood = entry.neighborhood;
            break;
        }
    ElementaryPolygon planar;
    for (int i = 0; i < 6; ++i)
        planar.boundary.push_back({"t" + std::to_string(i), "t" + std::to_string((i + 1) % 6),
                                   i % 2 == 0 ? std::optional<Event1>(genus0_switch()) : std::nullopt});
    planar.center = flat;
    d.polygons = {swallowtail, doubled, crossing, planar};
    return d;
}

PolygonDecomposition flat_disk() {
    PolygonDecomposition d;
    d.genus = 1;
    d.functions["f0"] = d.functions["f1"] = stacked_function(1);
    d.polygons.push_back({{{"f0", "f1", std::nullopt}, {"f1", "f0", std::nullopt}}, std::nullopt});
    d.start_cut_system = standard_cut_system(SymplecticLattice(1));
    return d;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: cerf-fixtures <source fixture dir> <output dir>\n";
        return 2;
    }
    const std::filesystem::path src = argv[1], out = argv[2];
    std::filesystem::create_directories(out);
    try {
        const auto cp2 = load_trisection(src / "cp2.json");
        const auto cp2bar = load_trisection(src / "cp2bar.json");
        const auto stdgk = load_trisection(src / "stdgk.json");
        const auto cp2_family = standard_family_from_trisection(cp2);
        const auto cp2bar_family = standard_family_from_trisection(cp2bar);
        write(out, "cp2_family.json", {kFormatVersion, cp2_family});
        write(out, "cp2bar_family.json", {kFormatVersion, cp2bar_family});
        write(out, "stdgk_family.json", {kFormatVersion, standard_family_from_trisection(stdgk)});
        write(out, "stdgk_b1.json", {kFormatVersion, trisection_sector_family(stdgk, 1)});
        write(out, "cp2_cap.json", {kFormatVersion, hexagon_cap(cp2_family)});
        write(out, "cp2bar_cap.json", {kFormatVersion, hexagon_cap(cp2bar_family)});
        write(out, "two_hexagons.json", {kFormatVersion, two_hexagons()});
        write(out, "polygon_zoo.json", {kFormatVersion, polygon_zoo()});
        write(out, "flat_disk.json", {kFormatVersion, flat_disk()});
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
