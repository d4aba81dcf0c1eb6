#include "census_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace cerf::oracle {

namespace {

struct Config {
    std::vector<int> mate; // half-edge 4v+i
    std::vector<int> sign; // colour of the sector after half-edge 4v+0

    bool operator<(const Config& o) const { return std::tie(mate, sign) < std::tie(o.mate, o.sign); }
};

void matchings(std::vector<int>& mate, std::vector<std::vector<int>>& out) {
    auto it = std::find(mate.begin(), mate.end(), -1);
    if (it == mate.end()) {
        out.push_back(mate);
        return;
    }
    const int a = static_cast<int>(it - mate.begin());
    for (int b = a + 1; b < static_cast<int>(mate.size()); ++b) {
        if (mate[b] != -1) continue;
        mate[a] = b;
        mate[b] = a;
        matchings(mate, out);
        mate[a] = mate[b] = -1;
    }
}

int colour(const Config& c, int h) { return (h % 4) % 2 == 0 ? c.sign[h / 4] : -c.sign[h / 4]; }

// Returns {faces, ok}; ok fails on a face that changes colour.
std::pair<int, bool> faces(const Config& c) {
    const int n = static_cast<int>(c.mate.size());
    std::vector<char> seen(n, 0);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++count;
        int h = s;
        const int col = colour(c, c.mate[s]);
        while (!seen[h]) {
            seen[h] = 1;
            const int m = c.mate[h];
            if (colour(c, m) != col) return {count, false};
            h = m - m % 4 + (m % 4 + 1) % 4;
        }
    }
    return {count, true};
}

bool connected(const Config& c) {
    const int v = static_cast<int>(c.sign.size());
    std::vector<int> comp(v);
    std::iota(comp.begin(), comp.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t h = 0; h < c.mate.size(); ++h) {
            int& x = comp[h / 4];
            int& y = comp[c.mate[h] / 4];
            if (x != y) {
                x = y = std::min(x, y);
                changed = true;
            }
        }
    }
    return std::all_of(comp.begin(), comp.end(), [&](int x) { return x == comp[0]; });
}

Config relabel(const Config& c, const std::vector<int>& pi) {
    Config r{std::vector<int>(c.mate.size()), std::vector<int>(c.sign.size())};
    auto img = [&](int h) { return 4 * pi[h / 4] + h % 4; };
    for (std::size_t h = 0; h < c.mate.size(); ++h) r.mate[img(static_cast<int>(h))] = img(c.mate[h]);
    for (std::size_t v = 0; v < c.sign.size(); ++v) r.sign[pi[v]] = c.sign[v];
    return r;
}

// Old local index 1 becomes index 0 at vertex v.
Config quarter_turn(const Config& c, int v) {
    Config r{std::vector<int>(c.mate.size()), c.sign};
    auto img = [&](int h) { return h / 4 == v ? 4 * v + (h % 4 + 3) % 4 : h; };
    for (std::size_t h = 0; h < c.mate.size(); ++h) r.mate[img(static_cast<int>(h))] = img(c.mate[h]);
    r.sign[v] = -c.sign[v];
    return r;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<OracleClass> census_by_orbits(int vertices) {
    std::vector<std::vector<int>> all;
    std::vector<int> mate(4 * vertices, -1);
    matchings(mate, all);

    std::vector<Config> configs;
    std::vector<int> face_count;
    for (const auto& m : all)
        for (int bits = 0; bits < (1 << vertices); ++bits) {
            Config c{m, std::vector<int>(vertices)};
            for (int v = 0; v < vertices; ++v) c.sign[v] = (bits >> v) & 1 ? -1 : 1;
            const auto [f, ok] = faces(c);
            if (!ok || !connected(c)) continue;
            // every vertex carries both colours, so a monochromatic face
            // structure always has both sides present
            configs.push_back(c);
            face_count.push_back(f);
        }

    std::map<Config, std::size_t> index;
    for (std::size_t i = 0; i < configs.size(); ++i) index.emplace(configs[i], i);

    UnionFind uf(configs.size());
    std::vector<std::vector<int>> generators;
    for (int v = 0; v + 1 < vertices; ++v) {
        std::vector<int> pi(vertices);
        std::iota(pi.begin(), pi.end(), 0);
        std::swap(pi[v], pi[v + 1]);
        generators.push_back(pi);
    }
    for (std::size_t i = 0; i < configs.size(); ++i) {
        std::vector<Config> images;
        for (const auto& pi : generators) images.push_back(relabel(configs[i], pi));
        for (int v = 0; v < vertices; ++v) images.push_back(quarter_turn(configs[i], v));
        Config swapped = configs[i];
        for (int& s : swapped.sign) s = -s;
        images.push_back(swapped);
        for (const auto& im : images) uf.unite(i, index.at(im));
    }

    std::map<std::size_t, OracleClass> classes;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        auto& cls = classes[uf.find(i)];
        // chi = V - E = -vertices; chi = 2 - 2g - b
        cls.boundary = face_count[i];
        cls.genus = (2 + vertices - face_count[i]) / 2;
        ++cls.labelled;
    }
    std::vector<OracleClass> out;
    for (const auto& [root, cls] : classes) out.push_back(cls);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cerf::oracle
