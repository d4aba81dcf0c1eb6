#include "cerf/morse.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace cerf {

std::string height_to_string(const Height& h) {
    if (h.denominator() == 1) return std::to_string(h.numerator());
    return std::to_string(h.numerator()) + "/" + std::to_string(h.denominator());
}

Height parse_height(const std::string& text) {
    auto parse_int = [&](const std::string& s) -> std::int64_t {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            throw Error("NON_EXACT_NUMBER", "cannot read height '" + text + "'");
        }
        if (used != s.size() || s.empty()) throw Error("NON_EXACT_NUMBER", "cannot read height '" + text + "'");
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Height(parse_int(text));
    const auto num = parse_int(text.substr(0, slash));
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) throw Error("NON_EXACT_NUMBER", "zero denominator in '" + text + "'");
    return Height(num, den);
}

const char* to_string(MorseEventKind kind) {
    switch (kind) {
    case MorseEventKind::Birth: return "birth";
    case MorseEventKind::Death: return "death";
    case MorseEventKind::Merge: return "merge";
    case MorseEventKind::Split: return "split";
    }
    return "?";
}

int MorseEvent::index() const {
    switch (kind) {
    case MorseEventKind::Birth: return 0;
    case MorseEventKind::Death: return 2;
    default: return 1;
    }
}

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a), b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::pair<std::size_t, std::size_t> expected_arity(MorseEventKind kind) {
    switch (kind) {
    case MorseEventKind::Birth: return {0, 1};
    case MorseEventKind::Death: return {1, 0};
    case MorseEventKind::Merge: return {2, 1};
    case MorseEventKind::Split: return {1, 2};
    }
    return {0, 0};
}

std::string where(std::size_t i) { return "event " + std::to_string(i); }

} // namespace

MorseValidation validate_sliced(const SlicedMorseFunction& f) {
    MorseValidation result;
    auto& report = result.report;
    if (f.events.empty()) {
        report.add("EMPTY_FUNCTION", "a Morse function on a closed surface has at least two critical points");
        return result;
    }
    for (std::size_t i = 1; i < f.events.size(); ++i) {
        if (f.events[i].height == f.events[i - 1].height)
            report.add("DUPLICATE_HEIGHT", where(i) + " repeats critical value " + height_to_string(f.events[i].height));
        else if (f.events[i].height < f.events[i - 1].height)
            report.add("HEIGHTS_NOT_INCREASING", where(i) + " is below its predecessor");
    }

    std::unordered_map<int, std::size_t> creator;
    std::set<int> live, consumed;
    for (std::size_t i = 0; i < f.events.size(); ++i) {
        const auto& e = f.events[i];
        const auto [n_in, n_out] = expected_arity(e.kind);
        if (e.in.size() != n_in || e.out.size() != n_out) {
            report.add("BAD_ARITY", where(i) + " (" + to_string(e.kind) + ") has wrong number of circles");
            continue;
        }
        for (int c : e.in) {
            if (!creator.contains(c)) report.add("UNKNOWN_CIRCLE", where(i) + " uses circle " + std::to_string(c) + " before it exists");
            else if (consumed.contains(c)) report.add("CIRCLE_REUSED", where(i) + " consumes circle " + std::to_string(c) + " twice");
            else {
                consumed.insert(c);
                live.erase(c);
            }
        }
        if (e.in.size() == 2 && e.in[0] == e.in[1])
            report.add("CIRCLE_REUSED", where(i) + " merges circle " + std::to_string(e.in[0]) + " with itself");
        for (int c : e.out) {
            if (creator.contains(c)) {
                report.add("DUPLICATE_CIRCLE", where(i) + " creates circle " + std::to_string(c) + " again");
                continue;
            }
            creator[c] = i;
            live.insert(c);
        }
    }
    if (!live.empty())
        report.add("LIVE_CIRCLES_REMAIN", std::to_string(live.size()) + " circle(s) never consumed, e.g. " +
                                              std::to_string(*live.begin()));
    if (!report.ok()) return result;

    // Connectivity of the Reeb graph.
    DisjointSets sets(f.events.size());
    for (std::size_t i = 0; i < f.events.size(); ++i)
        for (int c : f.events[i].in) sets.unite(creator[c], i);
    for (std::size_t i = 1; i < f.events.size(); ++i)
        if (sets.find(i) != sets.find(0)) {
            report.add("DISCONNECTED", "the implied surface is not connected");
            return result;
        }

    int chi = 0;
    for (const auto& e : f.events) chi += e.index() == 1 ? -1 : 1;
    if (chi > 2 || (2 - chi) % 2 != 0) {
        report.add("BAD_EULER_CHARACTERISTIC", "chi = " + std::to_string(chi) + " is not 2 - 2g");
        return result;
    }
    result.genus = (2 - chi) / 2;
    return result;
}

std::vector<int> ReebGraph::degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& e : edges) {
        ++deg[e.from];
        ++deg[e.to];
    }
    return deg;
}

ReebGraph reeb_graph(const SlicedMorseFunction& f) {
    const auto v = validate_sliced(f);
    v.report.throw_if_failed();
    ReebGraph graph;
    graph.vertex_count = f.events.size();
    std::unordered_map<int, std::size_t> creator;
    for (std::size_t i = 0; i < f.events.size(); ++i) {
        for (int c : f.events[i].in) {
            const auto from = creator.at(c);
            graph.edges.push_back({c, from, i, f.events[from].height, f.events[i].height});
        }
        for (int c : f.events[i].out) creator[c] = i;
    }
    graph.betti = static_cast<int>(graph.edges.size()) - static_cast<int>(graph.vertex_count) + 1;
    if (graph.betti != v.genus) throw Error("INTERNAL", "Reeb graph Betti number disagrees with the Euler count");
    return graph;
}

CriticalNeighborhood critical_neighborhood(const SlicedMorseFunction& f, std::size_t event) {
    if (event >= f.events.size()) throw Error("UNKNOWN_EVENT", "no event with index " + std::to_string(event));
    validate_sliced(f).report.throw_if_failed();
    const auto& e = f.events[event];
    CriticalNeighborhood n;
    n.event = event;
    // The critical level component is a point (extremum) or a figure eight (saddle).
    n.euler_characteristic = e.index() == 1 ? 1 - 2 : 1;
    n.boundary_circles = static_cast<int>(e.in.size() + e.out.size());
    const int twice_genus = 2 - n.euler_characteristic - n.boundary_circles;
    if (twice_genus < 0 || twice_genus % 2 != 0) throw Error("INTERNAL", "non-orientable local model");
    n.genus = twice_genus / 2;
    return n;
}

std::vector<int> reeb_cycle_circles(const SlicedMorseFunction& f, CycleSelection rule) {
    validate_sliced(f).report.throw_if_failed();
    const std::size_t n = f.events.size();
    DisjointSets sets(n);
    std::vector<int> cycles;
    if (rule == CycleSelection::LowestClosing) {
        std::unordered_map<int, std::size_t> creator;
        for (std::size_t i = 0; i < n; ++i) {
            for (int c : f.events[i].in)
                if (!sets.unite(creator.at(c), i)) cycles.push_back(c);
            for (int c : f.events[i].out) creator[c] = i;
        }
    } else {
        std::unordered_map<int, std::size_t> consumer;
        for (std::size_t i = n; i-- > 0;) {
            for (int c : f.events[i].out)
                if (!sets.unite(consumer.at(c), i)) cycles.push_back(c);
            for (int c : f.events[i].in) consumer[c] = i;
        }
    }
    return cycles;
}

BasisMap standard_basis_map(const SymplecticLattice& lattice) {
    BasisMap map;
    for (int i = 0; i < lattice.genus(); ++i) map.push_back(lattice.a(i));
    return map;
}

CutSystem cut_system_from_morse(const SlicedMorseFunction& f, const SymplecticLattice& lattice,
                                const BasisMap& basis_map, CycleSelection rule) {
    const auto v = validate_sliced(f);
    v.report.throw_if_failed();
    if (v.genus != lattice.genus())
        throw Error("GENUS_MISMATCH", "function has genus " + std::to_string(v.genus) + " but lattice has genus " +
                                          std::to_string(lattice.genus()));
    if (basis_map.size() != static_cast<std::size_t>(v.genus))
        throw Error("INCOMPLETE_BASIS_MAP", "basis map assigns " + std::to_string(basis_map.size()) + " of " +
                                                std::to_string(v.genus) + " Reeb cycles");
    const auto circles = reeb_cycle_circles(f, rule);
    CutSystem cs;
    for (std::size_t i = 0; i < circles.size(); ++i) {
        cs.curves.push_back(basis_map[i]);
        cs.provenance.push_back("c" + std::to_string(circles[i]));
    }
    auto report = validate_cut_system(cs, lattice);
    if (!report.ok()) throw Error("INVALID_BASIS_MAP", report.issues().front().message);
    return cs;
}

SlicedMorseFunction sphere_function() {
    return {{MorseEvent::birth(1, Height(0)), MorseEvent::death(1, Height(1))}};
}

SlicedMorseFunction stacked_function(int genus) {
    if (genus < 0) throw Error("INVALID_GENUS", "genus must be non-negative");
    SlicedMorseFunction f;
    std::int64_t h = 0;
    int next = 1;
    f.events.push_back(MorseEvent::birth(next, Height(h++)));
    int current = next++;
    for (int i = 0; i < genus; ++i) {
        const int left = next++, right = next++;
        f.events.push_back(MorseEvent::split(current, left, right, Height(h++)));
        current = next++;
        f.events.push_back(MorseEvent::merge(left, right, current, Height(h++)));
    }
    f.events.push_back(MorseEvent::death(current, Height(h++)));
    return f;
}

} // namespace cerf
