// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include <fmt/core.h>
#include <nlohmann/json.hpp>

#include "cerf/cli.hpp"
#include "cerf/document.hpp"
#include "cerf/error.hpp"
#include "oracles.hpp"
#include "random_morse.hpp"
#include "subdivide.hpp"

using namespace cerf;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures = CERF_FIXTURE_DIR;

// Wall-clock limits in seconds.
constexpr double kCensusLimit = 1.0;
constexpr double kHeavyLimit = 10.0;

constexpr int kMorseSamples = 1000;
constexpr int kMorseMaxEvents = 30;
constexpr int kSlideSamples = 500;
constexpr int kSlideMaxFactors = 10;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Cli {
    int code;
    std::string out;
};

Cli cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str()};
}

std::string fx(const std::string& name) { return (kFixtures / name).string(); }

template <class T>
T load(const std::string& name) {
    return std::get<T>(read_document(fx(name)).payload);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome figure1() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = cli({"enumerate", "figure1"});
    const double dt = seconds_since(t0);
    const auto j = json::parse(r.out);
    int g0 = 0, g1 = 0;
    for (const auto& e : j["entries"]) (e["profile"]["genus"] == 0 ? g0 : g1) += 1;
    const bool ok = r.code == 0 && j["entries"].size() == 4 && g0 == 3 && g1 == 1 && dt < kCensusLimit;
    return {ok, fmt::format("{} entries, genus 0: {}, genus 1: {}, {:.3f} s", j["entries"].size(), g0, g1, dt)};
}

Outcome triple() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = cli({"enumerate", "triple"});
    const double dt = seconds_since(t0);
    const auto j = json::parse(r.out);
    std::set<std::pair<int, int>> profiles;
    bool chi_ok = true;
    for (const auto& e : j["entries"]) {
        profiles.insert({e["profile"]["genus"].get<int>(), e["profile"]["boundary_circles"].get<int>()});
        chi_ok = chi_ok && e["profile"]["chi"] == -3;
    }
    const std::set<std::pair<int, int>> expected{{0, 5}, {1, 3}};
    const bool ok = r.code == 0 && profiles == expected && chi_ok && dt < kHeavyLimit;
    return {ok, fmt::format("{} entries, profiles {{(0,5),(1,3)}}: {}, chi -3: {}, {:.3f} s", j["entries"].size(),
                            profiles == expected, chi_ok, dt)};
}

Outcome permutahedron() {
    const auto t0 = std::chrono::steady_clock::now();
    // Expand each genus-1 class to all of its labelled configurations.
    std::set<RibbonCode> seen;
    std::size_t expected = 0;
    int worst = 0, checked = 0;
    for (const auto& e : triple_census()) {
        if (e.profile.genus != 1) continue;
        expected += e.labelled;
        std::vector<int> perm{0, 1, 2};
        do {
            for (int rot = 0; rot < 64; ++rot)
                for (bool swap : {false, true}) {
                    const auto image = transform(e.neighborhood, perm, {rot % 4, rot / 4 % 4, rot / 16}, swap);
                    if (!seen.insert(encode(image)).second) continue;
                    for (const auto& labels : height_assignments()) {
                        const auto types = permutahedron_edge_types(image, labels);
                        worst = std::max(worst, static_cast<int>(std::count(types.begin(), types.end(), IntervalType::Type1)));
                        ++checked;
                    }
                }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    const double dt = seconds_since(t0);
    return {worst <= 3 && seen.size() == expected && dt < kHeavyLimit,
            fmt::format("{} labelled neighbourhoods x 6 orderings = {}, max Type1 = {}, {:.3f} s", seen.size(), checked,
                        worst, dt)};
}

Outcome morse_property() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20261015);
    int failures = 0, max_genus = 0;
    for (int i = 0; i < kMorseSamples; ++i) {
        const auto f = oracle::random_morse_function(rng, kMorseMaxEvents);
        const auto v = validate_sliced(f);
        if (!v.report.ok() || f.events.size() > static_cast<std::size_t>(kMorseMaxEvents)) {
            ++failures;
            continue;
        }
        max_genus = std::max(max_genus, v.genus);
        for (std::size_t e = 0; e < f.events.size(); ++e)
            if (critical_neighborhood(f, e).genus != 0) ++failures;
        const SymplecticLattice l(v.genus);
        if (!validate_cut_system(cut_system_from_morse(f, l, standard_basis_map(l)), l).ok()) ++failures;
    }
    const double dt = seconds_since(t0);
    return {failures == 0 && dt < kHeavyLimit,
            fmt::format("{} functions, max genus {}, {} failures, {:.3f} s", kMorseSamples, max_genus, failures, dt)};
}

Outcome stdgk() {
    const auto t = load<TrisectionDiagram>("stdgk.json");
    const SymplecticLattice l(t.g);
    const auto h1 = heegaard_h1(t.alpha, t.beta, l);
    const auto rec = assemble_interval_family(trisection_sector_family(t, 1), t.alpha);
    const bool ok = t.g == 5 && t.k == 2 && h1.rank == 2 && h1.torsion.empty() && rec.surgeries.size() == 3 && rec.k == 2;
    return {ok, fmt::format("H1 = {}, surgeries = {}, k = {}", h1.to_string(), rec.surgeries.size(),
                            rec.k ? std::to_string(*rec.k) : "none")};
}

Outcome slide_solver() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(5150);
    int mismatched = 0;
    std::size_t longest = 0;
    for (int i = 0; i < kSlideSamples; ++i) {
        const int g = 1 + i % 4;
        const SymplecticLattice l(g);
        const auto start = oracle::rows_to_cut_system(
            oracle::random_symplectic_image(standard_cut_system(l).matrix(l.rank()), l, i % 5, rng));
        const auto e = oracle::random_elementary_product(static_cast<std::size_t>(g), kSlideMaxFactors, rng);
        const auto target = oracle::rows_to_cut_system(e * start.matrix(l.rank()));
        const auto seq = interpolate_cut_systems(start, target, l);
        longest = std::max(longest, seq.moves.size());
        if (replay_slides(start, seq.moves, l).curves != target.curves) ++mismatched;
    }
    int rejected = 0, mismatch_cases = 0;
    for (int g = 1; g <= 4; ++g) {
        const SymplecticLattice l(g);
        auto other = standard_cut_system(l);
        other.curves.back() = l.b(g - 1);
        ++mismatch_cases;
        try {
            interpolate_cut_systems(standard_cut_system(l), other, l);
        } catch (const Error& err) {
            rejected += err.code() == "SPAN_MISMATCH";
        }
    }
    const double dt = seconds_since(t0);
    return {mismatched == 0 && rejected == mismatch_cases && dt < kHeavyLimit,
            fmt::format("{} products, {} replay mismatches, longest {} moves, {}/{} span mismatches rejected, {:.3f} s",
                        kSlideSamples, mismatched, longest, rejected, mismatch_cases, dt)};
}

Outcome catalog() {
    struct Row {
        const char* file;
        int chi;
        int sigma;
    };
    const Row rows[] = {{"s4.json", 2, 0}, {"cp2.json", 3, 1}, {"cp2bar.json", 3, -1}, {"s1xs3.json", 0, 0}, {"cp2_cp2bar.json", 4, 0}};
    Outcome o;
    for (const auto& row : rows) {
        const auto r = cli({"invariants", "--trisection", fx(row.file)});
        const auto j = json::parse(r.out);
        const bool ok = r.code == 0 && j["chi"] == row.chi && j["sigma"] == row.sigma;
        o.pass = o.pass && ok;
        o.detail += fmt::format("{}{} chi={} sigma={}", o.detail.empty() ? "" : "; ", row.file, j["chi"].dump(), j["sigma"].dump());
    }
    return o;
}

Outcome sigma_identity() {
    Outcome o;
    for (const char* name : {"cp2.json", "cp2bar.json"}) {
        const auto t = load<TrisectionDiagram>(name);
        const auto report = assemble_disk_family(hexagon_cap(standard_family_from_trisection(t)));
        const int sigma = trisection_signature(t);
        const bool pq_ok = (report.p == 1 && report.q == 0) || (report.p == 0 && report.q == 1);
        const bool ok = pq_ok && sigma == report.q - report.p && report.signature == sigma && report.signature_identity == true;
        o.pass = o.pass && ok;
        o.detail += fmt::format("{}{} (p,q)=({},{}) sigma={}", o.detail.empty() ? "" : "; ", name, report.p, report.q, sigma);
    }
    return o;
}

Outcome subdivision() {
    int splits = 0, differ = 0;
    auto check = [&](const CerfGraphic1& gr, const CutSystem& start) {
        const bool circle = gr.cyclic;
        auto record = [&](const CerfGraphic1& g) {
            return canonical_dump(record_to_json(circle ? assemble_circle_family(g, start) : assemble_interval_family(g, start)));
        };
        const auto base = record(gr);
        // Every segment, Type1 included, can have a fresh Type0 piece split off.
        for (std::size_t i = 0; i < gr.segments.size(); ++i) {
            const auto once = oracle::split_segment(gr, i, "split_mid");
            const auto twice = oracle::split_segment(once, i + 1, "split_mid2");
            splits += 2;
            if (record(once) != base) ++differ;
            if (record(twice) != base) ++differ;
        }
    };
    for (const char* name : {"cp2.json", "stdgk.json", "cp2_cp2bar.json", "s1xs3.json"}) {
        const auto t = load<TrisectionDiagram>(name);
        check(standard_family_from_trisection(t), t.alpha);
        check(trisection_sector_family(t, 1), t.alpha);
        check(trisection_sector_family(t, 2), t.beta);
        check(trisection_sector_family(t, 3), t.gamma);
    }
    return {splits > 0 && differ == 0, fmt::format("{} subdivisions, {} records changed", splits, differ)};
}

std::vector<std::vector<std::string>> corpus_commands() {
    std::vector<std::vector<std::string>> cmds{{"enumerate", "figure1"}, {"enumerate", "triple"}};
    std::vector<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(kFixtures))
        if (e.path().extension() == ".json") names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    for (const auto& n : names) {
        const auto path = fx(n);
        cmds.push_back({"validate", path});
        std::string kind;
        try {
            kind = to_string(read_document(path).kind());
        } catch (const Error&) {
            continue;
        }
        if (kind == "morse") {
            cmds.push_back({"reeb", path});
            cmds.push_back({"cut-system", path});
        } else if (kind == "graphic1") {
            cmds.push_back({"classify-interval", path});
            cmds.push_back({"assemble-b1", path});
            cmds.push_back({"assemble-s1", path});
            cmds.push_back({"render", path});
        } else if (kind == "trisection") {
            cmds.push_back({"invariants", "--trisection", path});
            cmds.push_back({"compile-trisection", path});
            cmds.push_back({"compile-trisection", path, "--format", "svg"});
        } else if (kind == "decomposition") {
            cmds.push_back({"classify-polygon", path});
            cmds.push_back({"assemble-b2", path});
            cmds.push_back({"render", path});
        } else if (kind == "surface") {
            cmds.push_back({"interpolate", path});
            cmds.push_back({"cut-system", path});
        }
    }
    return cmds;
}

Outcome determinism() {
    const auto cmds = corpus_commands();
    int differ = 0, svgs = 0;
    for (const auto& c : cmds) {
        const auto a = cli(c), b = cli(c);
        if (a.code != b.code || a.out != b.out) ++differ;
        svgs += a.out.rfind("<svg", 0) == 0;
    }
    return {differ == 0, fmt::format("{} commands ({} SVG), {} differ", cmds.size(), svgs, differ)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"figure-one census", figure1},
        {"triple-switch census", triple},
        {"permutahedron bound", permutahedron},
        {"planar critical neighbourhoods", morse_property},
        {"standard (5,2) diagram", stdgk},
        {"slide solver", slide_solver},
        {"invariant catalog", catalog},
        {"signature identity", sigma_identity},
        {"subdivision invariance", subdivision},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << fmt::format("criterion {:>2} {:<32} {}  {}\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail);
    }
    std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
