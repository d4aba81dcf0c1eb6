#include "cerf/family_two.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cerf {

const char* to_string(Event2::Kind kind) {
    switch (kind) {
    case Event2::Kind::Swallowtail: return "swallowtail";
    case Event2::Kind::BirthMorseCross: return "birth_morse_cross";
    case Event2::Kind::TripleSwitch: return "triple_switch";
    }
    return "?";
}

std::string PolygonType::to_string() const {
    switch (kind) {
    case Kind::Type0: return "type0";
    case Kind::Type1: return "type1";
    case Kind::Type2: return sign > 0 ? "type2+" : "type2-";
    }
    return "?";
}

const std::vector<CensusEntry>& triple_census() {
    static const std::vector<CensusEntry> census = ribbon_census(3);
    return census;
}

std::vector<RibbonNeighborhood> enumerate_triple_graphs() {
    std::vector<RibbonNeighborhood> out;
    for (const auto& e : triple_census()) out.push_back(e.neighborhood);
    return out;
}

std::vector<std::array<int, 3>> height_assignments() {
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> labels{0, 1, 2};
    do out.push_back(labels);
    while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

std::array<IntervalType, 6> permutahedron_edge_types(const RibbonNeighborhood& triple, const std::array<int, 3>& labels) {
    if (triple.vertices != 3) throw Error("MALFORMED_EVENT", "triple switch neighbourhood needs three vertices");
    const auto report = validate_ribbon(triple);
    if (!report.ok()) throw Error("MALFORMED_EVENT", report.issues().front().message);
    std::array<int, 3> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{0, 1, 2}) throw Error("MALFORMED_EVENT", "labels must be a permutation of 0,1,2");

    const int p = labels[0], q = labels[1], r = labels[2];
    struct Edge {
        int u, v, third;
        bool raise;
    };
    const Edge edges[6] = {{q, r, p, false}, {p, q, r, true}, {p, r, q, false},
                           {q, r, p, true},  {q, p, r, false}, {r, p, q, true}};
    std::array<IntervalType, 6> types{};
    for (int i = 0; i < 6; ++i) {
        const auto pair = resolve_vertex(triple, edges[i].third, edges[i].raise);
        const bool type1 = is_connected(pair) && surface_profile(pair).genus == 1;
        types[i] = type1 ? IntervalType::Type1 : IntervalType::Type0;
    }
    return types;
}

namespace {

[[noreturn]] void fail(const std::string& code, const std::string& what) { throw Error(code, what); }

bool is_double(const ElementaryInterval& first, const ElementaryInterval& second) {
    const auto& s1 = *first.event->surgery;
    const auto& s2 = *second.event->surgery;
    return same_up_to_sign(s2.from, s1.to) && same_up_to_sign(s2.to, s1.from);
}

IntMatrix line(const HomologyClass& c) {
    IntMatrix m(1, c.size());
    std::copy(c.coeffs().begin(), c.coeffs().end(), m.row(0).begin());
    return m;
}

int triple_wall(const HomologyClass& x, const HomologyClass& y, const HomologyClass& z) {
    if (x.size() != y.size() || y.size() != z.size() || x.size() % 2 != 0)
        fail("DIMENSION_MISMATCH", "local classes have inconsistent lengths");
    const SymplecticLattice lattice(static_cast<int>(x.size() / 2));
    return wall_signature(line(x), line(y), line(z), lattice);
}

PolygonType classify_type2(const ElementaryPolygon& polygon, const std::vector<std::size_t>& type1) {
    const auto& center = *polygon.center;
    if (!center.local_classes) fail("MISSING_LOCAL_CLASSES", "a triple switch with three type 1 edges needs c_p, c_q, c_r");
    const auto& local = *center.local_classes;
    std::array<const SurgeryPair*, 3> s{};
    for (int i = 0; i < 3; ++i) s[i] = &*polygon.boundary[type1[i]].event->surgery;
    for (int i = 0; i < 3; ++i)
        if (!same_up_to_sign(s[i]->to, s[(i + 1) % 3]->from))
            fail("CHAIN_NOT_CLOSED", "boundary switches do not pass the disk class around the hexagon");
    std::vector<char> used(3, 0);
    for (const auto& c : local) {
        bool found = false;
        for (int i = 0; i < 3 && !found; ++i)
            if (!used[i] && same_up_to_sign(c, s[i]->from)) used[i] = 1, found = true;
        if (!found) fail("LOCAL_CLASSES_MISMATCH", "local class " + c.label() + " does not occur on the boundary");
    }
    const int sign = triple_wall(local[0], local[1], local[2]);
    if (sign != 1 && sign != -1) fail("DEGENERATE_TRIPLE", "local triple has Wall signature " + std::to_string(sign));
    if (triple_wall(s[0]->from, s[1]->from, s[2]->from) != -sign)
        fail("TRIPLE_ORIENTATION_MISMATCH", "local triple must be listed against the boundary direction");
    return PolygonType::type2(sign);
}

} // namespace

PolygonType classify_polygon(const ElementaryPolygon& polygon) {
    const auto& edges = polygon.boundary;
    const std::size_t n = edges.size();
    if (n < 2) fail("POLYGON_TOO_SMALL", "a polygon needs at least two boundary edges");
    for (std::size_t i = 0; i < n; ++i)
        if (edges[i].end != edges[(i + 1) % n].start)
            fail("BROKEN_CHAIN", "boundary edge " + std::to_string(i) + " does not meet the next edge");

    std::vector<std::size_t> type1;
    for (std::size_t i = 0; i < n; ++i)
        if (classify_interval(edges[i]) == IntervalType::Type1) type1.push_back(i);
    const std::string count = std::to_string(type1.size()) + " type 1 boundary edges";

    if (!polygon.center) {
        if (type1.empty()) return PolygonType::type0();
        if (type1.size() % 2 == 1) fail("ODD_TYPE1_COUNT", count + " around a polygon without a center");
        if (type1.size() != 2) fail("BAD_TYPE1_COUNT", count + " around a polygon without a center");
        if (!is_double(edges[type1[0]], edges[type1[1]]))
            fail("NOT_A_DOUBLE", "the two type 1 edges do not undo each other");
        return PolygonType::type1();
    }

    const auto& center = *polygon.center;
    if (center.kind != Event2::Kind::TripleSwitch) {
        if (center.neighborhood || center.local_classes)
            fail("MALFORMED_EVENT", std::string(to_string(center.kind)) + " carries no neighbourhood data");
        if (!type1.empty()) fail("BAD_TYPE1_COUNT", count + " around a " + to_string(center.kind));
        return PolygonType::type0();
    }

    if (n != 6) fail("TRIPLE_SWITCH_NOT_HEXAGON", "a triple switch is surrounded by six edges, found " + std::to_string(n));
    if (!center.neighborhood) fail("MALFORMED_EVENT", "triple switch needs its neighbourhood");
    if (center.neighborhood->vertices != 3) fail("MALFORMED_EVENT", "triple switch neighbourhood needs three vertices");
    const auto report = validate_ribbon(*center.neighborhood);
    if (!report.ok()) fail("MALFORMED_EVENT", report.issues().front().message);
    const auto profile = surface_profile(*center.neighborhood);
    const bool known = profile.euler_characteristic == -3 &&
                       ((profile.genus == 0 && profile.boundary_circles == 5) ||
                        (profile.genus == 1 && profile.boundary_circles == 3));
    if (!known) fail("BAD_TRIPLE_PROFILE", "unexpected triple switch neighbourhood");

    if (profile.genus == 0) {
        if (!type1.empty()) fail("BAD_TYPE1_COUNT", count + " around a genus 0 triple switch");
        return PolygonType::type0();
    }
    for (std::size_t i = 0; i < type1.size(); ++i) {
        const std::size_t next = type1[(i + 1) % type1.size()];
        if (type1.size() > 1 && (type1[i] + 1) % 6 == next)
            fail("ADJACENT_TYPE1", "adjacent hexagon edges " + std::to_string(type1[i]) + " and " +
                                       std::to_string(next) + " are both type 1");
    }
    switch (type1.size()) {
    case 0: return PolygonType::type0();
    case 2:
        if (!is_double(edges[type1[0]], edges[type1[1]]))
            fail("NOT_A_DOUBLE", "the two type 1 edges do not undo each other");
        return PolygonType::type1();
    case 3: return classify_type2(polygon, type1);
    default: fail("BAD_TYPE1_COUNT", count + " around a genus 1 triple switch");
    }
}

namespace {

std::map<EdgeRef, EdgeRef> glue_map(const PolygonDecomposition& d) {
    std::map<EdgeRef, EdgeRef> glued;
    for (const auto& g : d.gluings) {
        glued[g.a] = g.b;
        glued[g.b] = g.a;
    }
    return glued;
}

std::vector<EdgeRef> trace_boundary(const PolygonDecomposition& d, const std::map<EdgeRef, EdgeRef>& glued,
                                    std::size_t& unglued_total) {
    unglued_total = 0;
    std::optional<EdgeRef> first;
    for (std::size_t p = 0; p < d.polygons.size(); ++p)
        for (std::size_t e = 0; e < d.polygons[p].boundary.size(); ++e)
            if (!glued.contains({p, e})) {
                ++unglued_total;
                if (!first) first = EdgeRef{p, e};
            }
    std::vector<EdgeRef> cycle;
    if (!first) return cycle;
    auto next_edge = [&](EdgeRef r) {
        return EdgeRef{r.polygon, (r.edge + 1) % d.polygons[r.polygon].boundary.size()};
    };
    EdgeRef at = *first;
    const std::size_t limit = unglued_total + 1;
    do {
        cycle.push_back(at);
        EdgeRef candidate = next_edge(at);
        std::size_t hops = 0;
        while (glued.contains(candidate)) {
            candidate = next_edge(glued.at(candidate));
            if (++hops > 4 * d.gluings.size() + 4) throw Error("BOUNDARY_NOT_CIRCLE", "boundary walk does not terminate");
        }
        at = candidate;
    } while (at != *first && cycle.size() <= limit);
    return cycle;
}

} // namespace

ValidationReport validate_decomposition(const PolygonDecomposition& d) {
    ValidationReport report;
    if (d.genus < 0) {
        report.add("INVALID_GENUS", "genus must be non-negative");
        return report;
    }
    if (d.polygons.empty()) report.add("EMPTY_DECOMPOSITION", "no polygons");
    for (const auto& [name, f] : d.functions) {
        const auto v = validate_sliced(f);
        report.merge(v.report, "function " + name + ": ");
        if (v.report.ok() && v.genus != d.genus)
            report.add("GENUS_MISMATCH", "function " + name + " has genus " + std::to_string(v.genus));
    }
    const SymplecticLattice lattice(d.genus);
    for (std::size_t p = 0; p < d.polygons.size(); ++p) {
        const std::string at = "polygon " + std::to_string(p) + ": ";
        for (const auto& e : d.polygons[p].boundary) {
            for (const auto* name : {&e.start, &e.end})
                if (!d.functions.contains(*name)) report.add("DANGLING_FUNCTION_ID", at + "unknown function '" + *name + "'");
            if (e.event && e.event->surgery && e.event->surgery->from.size() != lattice.rank())
                report.add("DIMENSION_MISMATCH", at + "surgery classes do not match genus");
        }
        try {
            classify_polygon(d.polygons[p]);
        } catch (const Error& e) {
            report.add(e.code(), at + e.message());
        }
    }
    std::set<EdgeRef> seen;
    for (const auto& g : d.gluings) {
        bool in_range = true;
        for (const auto& r : {g.a, g.b})
            if (r.polygon >= d.polygons.size() || r.edge >= d.polygons[r.polygon].boundary.size()) in_range = false;
        if (!in_range) {
            report.add("BAD_GLUING", "gluing refers to a missing edge");
            continue;
        }
        if (g.a == g.b || !seen.insert(g.a).second || !seen.insert(g.b).second) {
            report.add("BAD_GLUING", "an edge is glued more than once");
            continue;
        }
        const auto& ea = d.polygons[g.a.polygon].boundary[g.a.edge];
        const auto& eb = d.polygons[g.b.polygon].boundary[g.b.edge];
        if (ea != reversed(eb))
            report.add("GLUING_MISMATCH", "glued edges (" + std::to_string(g.a.polygon) + "," + std::to_string(g.a.edge) +
                                              ") and (" + std::to_string(g.b.polygon) + "," +
                                              std::to_string(g.b.edge) + ") do not carry reversed data");
    }
    if (!report.ok()) return report;

    std::size_t unglued = 0;
    try {
        const auto cycle = trace_boundary(d, glue_map(d), unglued);
        if (unglued == 0) report.add("BOUNDARY_EMPTY", "every edge is glued; the union is not a disk");
        else if (cycle.size() != unglued) report.add("BOUNDARY_NOT_CIRCLE", "unglued edges form more than one cycle");
    } catch (const Error& e) {
        report.add(e.code(), e.message());
    }
    if (d.start_cut_system) report.merge(validate_cut_system(*d.start_cut_system, lattice), "start_cut_system: ");
    if (d.trisection && d.trisection->g != d.genus)
        report.add("GENUS_MISMATCH", "trisection label genus differs from decomposition genus");
    return report;
}

CerfGraphic1 boundary_circle(const PolygonDecomposition& d) {
    validate_decomposition(d).throw_if_failed();
    std::size_t unglued = 0;
    const auto cycle = trace_boundary(d, glue_map(d), unglued);
    CerfGraphic1 gr;
    gr.genus = d.genus;
    gr.cyclic = true;
    gr.start_cut_system = d.start_cut_system;
    gr.trisection = d.trisection;
    for (const auto& r : cycle) {
        const auto& e = d.polygons[r.polygon].boundary[r.edge];
        gr.segments.push_back(e);
        gr.functions[e.start] = d.functions.at(e.start);
        gr.functions[e.end] = d.functions.at(e.end);
    }
    return gr;
}

CappingReport assemble_disk_family(const PolygonDecomposition& d) {
    validate_decomposition(d).throw_if_failed();
    CappingReport report;
    report.genus = d.genus;
    for (const auto& polygon : d.polygons) {
        const auto t = classify_polygon(polygon);
        report.polygon_types.push_back(t);
        if (t.kind == PolygonType::Kind::Type2) (t.sign > 0 ? report.p : report.q) += 1;
    }
    if (d.trisection) report.k = d.trisection->k;
    const auto boundary = boundary_circle(d);
    validate_graphic1(boundary).throw_if_failed();
    if (d.start_cut_system) {
        const auto record = assemble_circle_family(boundary, *d.start_cut_system);
        report.euler_characteristic = record.euler_characteristic;
        report.signature = record.signature;
        report.signature_identity = *record.signature + report.p - report.q == 0;
    }
    return report;
}

RibbonNeighborhood triple_neighborhood_for(const std::array<IntervalType, 6>& pattern) {
    for (const auto& entry : triple_census()) {
        if (entry.profile.genus != 1) continue;
        for (const auto& labels : height_assignments()) {
            if (permutahedron_edge_types(entry.neighborhood, labels) != pattern) continue;
            std::vector<int> perm(3);
            for (int i = 0; i < 3; ++i) perm[labels[i]] = i;
            return transform(entry.neighborhood, perm, {0, 0, 0}, false);
        }
    }
    throw Error("NO_SUCH_NEIGHBORHOOD", "no genus 1 triple switch has this edge pattern");
}

PolygonDecomposition hexagon_cap(const CerfGraphic1& loop) {
    validate_graphic1(loop).throw_if_failed();
    if (!loop.cyclic) throw Error("CANNOT_CAP", "only closed families can be capped");
    auto edges = loop.segments;
    auto functions = loop.functions;
    const auto is_type1 = [](const ElementaryInterval& e) { return classify_interval(e) == IntervalType::Type1; };
    if (std::count_if(edges.begin(), edges.end(), is_type1) != 3)
        throw Error("CANNOT_CAP", "a hexagon cap needs exactly three genus 1 switches");
    int padding = 0;
    while (edges.size() < 6) {
        std::size_t i = 0;
        while (i < edges.size() && !(is_type1(edges[i]) && is_type1(edges[(i + 1) % edges.size()]))) ++i;
        if (i == edges.size()) break;
        const std::string name = "cap" + std::to_string(padding++);
        const std::size_t next = (i + 1) % edges.size();
        functions[name] = functions.at(edges[next].start);
        ElementaryInterval identity{edges[i].end, name, std::nullopt};
        edges[next].start = name;
        edges.insert(edges.begin() + static_cast<std::ptrdiff_t>(i) + 1, identity);
    }
    if (edges.size() != 6) throw Error("CANNOT_CAP", "family does not fit around one hexagon");

    std::array<IntervalType, 6> pattern{};
    std::vector<std::size_t> type1;
    for (std::size_t i = 0; i < 6; ++i) {
        pattern[i] = classify_interval(edges[i]);
        if (pattern[i] == IntervalType::Type1) type1.push_back(i);
    }

    Event2 center;
    center.kind = Event2::Kind::TripleSwitch;
    center.neighborhood = triple_neighborhood_for(pattern);
    const auto from = [&](std::size_t i) { return edges[type1[i]].event->surgery->from; };
    center.local_classes = std::array<HomologyClass, 3>{from(2), from(1), from(0)};

    PolygonDecomposition d;
    d.genus = loop.genus;
    d.functions = std::move(functions);
    d.polygons.push_back({edges, center});
    d.start_cut_system = loop.start_cut_system;
    d.trisection = loop.trisection;
    return d;
}

} // namespace cerf
