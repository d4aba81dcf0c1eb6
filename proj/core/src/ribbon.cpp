#include "cerf/ribbon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cerf/parallel.hpp"

namespace cerf {

namespace {

int next_ccw(int h) { return 4 * (h / 4) + (h % 4 + 1) % 4; }

std::vector<std::vector<int>> perfect_matchings(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> partner(n, -1);
    auto rec = [&](auto&& self) -> void {
        int first = 0;
        while (first < n && partner[first] >= 0) ++first;
        if (first == n) {
            out.push_back(partner);
            return;
        }
        for (int other = first + 1; other < n; ++other) {
            if (partner[other] >= 0) continue;
            partner[first] = other;
            partner[other] = first;
            self(self);
            partner[first] = partner[other] = -1;
        }
    };
    rec(rec);
    return out;
}

} // namespace

ValidationReport validate_ribbon_structure(const RibbonNeighborhood& n) {
    ValidationReport report;
    if (n.vertices <= 0) {
        report.add("INVALID_NEIGHBORHOOD", "a neighbourhood needs at least one vertex");
        return report;
    }
    if (static_cast<int>(n.partner.size()) != n.half_edges()) {
        report.add("INVALID_NEIGHBORHOOD", "expected " + std::to_string(n.half_edges()) + " half-edges");
        return report;
    }
    if (static_cast<int>(n.sector_signs.size()) != n.vertices)
        report.add("INVALID_NEIGHBORHOOD", "need one sector sign per vertex");
    for (int s : n.sector_signs)
        if (s != 1 && s != -1) report.add("INVALID_NEIGHBORHOOD", "sector signs must be +1 or -1");
    for (int h = 0; h < n.half_edges(); ++h) {
        const int p = n.partner[h];
        if (p < 0 || p >= n.half_edges() || p == h || n.partner[p] != h) {
            report.add("INVALID_NEIGHBORHOOD", "half-edge pairing is not a fixed-point-free involution");
            break;
        }
    }
    return report;
}

bool is_connected(const RibbonNeighborhood& n) {
    std::vector<char> seen(n.vertices, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int i = 0; i < 4; ++i) {
            const int w = n.partner[4 * v + i] / 4;
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n.vertices;
}

namespace {

// Boundary circles with the set of side colours seen along each.
std::vector<unsigned> trace_faces(const RibbonNeighborhood& n) {
    std::vector<unsigned> faces;
    std::vector<char> seen(n.half_edges(), 0);
    for (int start = 0; start < n.half_edges(); ++start) {
        if (seen[start]) continue;
        unsigned colours = 0;
        for (int h = start; !seen[h];) {
            seen[h] = 1;
            const int p = n.partner[h];
            colours |= n.sector_sign(p / 4, p % 4) > 0 ? 1u : 2u;
            h = next_ccw(p);
        }
        faces.push_back(colours);
    }
    return faces;
}

} // namespace

RibbonProfile surface_profile(const RibbonNeighborhood& n) {
    validate_ribbon_structure(n).throw_if_failed();
    RibbonProfile profile;
    profile.euler_characteristic = n.vertices - n.half_edges() / 2;
    profile.boundary_circles = static_cast<int>(trace_faces(n).size());
    profile.genus = (2 - profile.euler_characteristic - profile.boundary_circles) / 2;
    return profile;
}

ValidationReport validate_ribbon(const RibbonNeighborhood& n) {
    auto report = validate_ribbon_structure(n);
    if (!report.ok()) return report;
    if (!is_connected(n)) report.add("DISCONNECTED_NEIGHBORHOOD", "critical level component is not connected");
    unsigned all = 0;
    for (unsigned c : trace_faces(n)) {
        all |= c;
        if (c == 3u) {
            report.add("MIXED_BOUNDARY", "a boundary circle meets both sides of the critical level");
            break;
        }
    }
    if (all != 3u) report.add("ONE_SIDED", "only one side of the critical level occurs");
    return report;
}

RibbonProfile ribbon_profile(const RibbonNeighborhood& n) {
    const auto report = validate_ribbon(n);
    if (!report.ok()) throw Error("INVALID_NEIGHBORHOOD", report.issues().front().message);
    return surface_profile(n);
}

RibbonNeighborhood transform(const RibbonNeighborhood& n, const std::vector<int>& perm, const std::vector<int>& rotation,
                             bool swap_sides) {
    RibbonNeighborhood out;
    out.vertices = n.vertices;
    out.partner.assign(n.half_edges(), 0);
    out.sector_signs.assign(n.vertices, 0);
    auto map = [&](int h) {
        const int v = h / 4, i = h % 4;
        return 4 * perm[v] + ((i - rotation[v]) % 4 + 4) % 4;
    };
    for (int h = 0; h < n.half_edges(); ++h) out.partner[map(h)] = map(n.partner[h]);
    for (int v = 0; v < n.vertices; ++v)
        out.sector_signs[perm[v]] = n.sector_sign(v, rotation[v]) * (swap_sides ? -1 : 1);
    return out;
}

RibbonCode encode(const RibbonNeighborhood& n) {
    RibbonCode code;
    code.partner = n.partner;
    for (int s : n.sector_signs) code.sides.push_back(s > 0 ? 0 : 1);
    return code;
}

RibbonNeighborhood decode(const RibbonCode& code) {
    RibbonNeighborhood n;
    n.vertices = static_cast<int>(code.sides.size());
    n.partner = code.partner;
    for (int s : code.sides) n.sector_signs.push_back(s == 0 ? 1 : -1);
    return n;
}

RibbonCode canonical_code(const RibbonNeighborhood& n) {
    validate_ribbon_structure(n).throw_if_failed();
    const int v = n.vertices;
    std::vector<int> perm(v);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> rotation(v, 0);
    RibbonCode best = encode(n);
    do {
        std::fill(rotation.begin(), rotation.end(), 0);
        for (;;) {
            for (bool swap : {false, true}) {
                auto code = encode(transform(n, perm, rotation, swap));
                if (code < best) best = std::move(code);
            }
            int k = 0;
            while (k < v && ++rotation[k] == 4) rotation[k++] = 0;
            if (k == v) break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<CensusEntry> ribbon_census(int vertices) {
    if (vertices < 1 || vertices > 4) throw Error("UNSUPPORTED_CENSUS", "census implemented for 1 to 4 vertices");
    const auto matchings = perfect_matchings(4 * vertices);
    const std::size_t workers = worker_count();
    std::vector<std::map<RibbonCode, std::size_t>> partial(workers);

    parallel_chunks(matchings.size(), [&](std::size_t worker, std::size_t begin, std::size_t end) {
        auto& found = partial[worker];
        RibbonNeighborhood n;
        n.vertices = vertices;
        for (std::size_t m = begin; m < end; ++m) {
            n.partner = matchings[m];
            for (unsigned bits = 0; bits < (1u << vertices); ++bits) {
                n.sector_signs.assign(vertices, 1);
                for (int k = 0; k < vertices; ++k)
                    if (bits & (1u << k)) n.sector_signs[k] = -1;
                if (!validate_ribbon(n).ok()) continue;
                ++found[canonical_code(n)];
            }
        }
    });

    std::map<RibbonCode, std::size_t> merged;
    for (const auto& p : partial)
        for (const auto& [code, count] : p) merged[code] += count;

    std::vector<CensusEntry> census;
    for (const auto& [code, count] : merged) {
        CensusEntry entry;
        entry.neighborhood = decode(code);
        entry.profile = ribbon_profile(entry.neighborhood);
        entry.labelled = count;
        census.push_back(std::move(entry));
    }
    return census;
}

RibbonNeighborhood resolve_vertex(const RibbonNeighborhood& n, int r, bool raise) {
    validate_ribbon_structure(n).throw_if_failed();
    if (r < 0 || r >= n.vertices) throw Error("INDEX_OUT_OF_RANGE", "no vertex " + std::to_string(r));
    if (n.vertices < 2) throw Error("INVALID_NEIGHBORHOOD", "cannot resolve the only vertex");
    const int joined_side = raise ? -1 : 1;
    std::vector<int> across(4, -1);
    for (int i = 0; i < 4; ++i)
        if (n.sector_sign(r, i) == joined_side) {
            across[i] = (i + 1) % 4;
            across[(i + 1) % 4] = i;
        }

    auto renumber = [r](int h) {
        const int v = h / 4;
        return 4 * (v > r ? v - 1 : v) + h % 4;
    };
    RibbonNeighborhood out;
    out.vertices = n.vertices - 1;
    out.partner.assign(out.half_edges(), -1);
    for (int v = 0; v < n.vertices; ++v)
        if (v != r) out.sector_signs.push_back(n.sector_signs[v]);
    for (int h = 0; h < n.half_edges(); ++h) {
        if (h / 4 == r) continue;
        int x = n.partner[h];
        for (int guard = 0; x / 4 == r; ++guard) {
            if (guard > 4) throw Error("INTERNAL", "resolution chain does not leave the vertex");
            x = n.partner[4 * r + across[x % 4]];
        }
        out.partner[renumber(h)] = renumber(x);
    }
    return out;
}

} // namespace cerf
