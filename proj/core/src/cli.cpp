#include "cerf/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>

#include <CLI11.hpp>

#include "cerf/document.hpp"
#include "cerf/render.hpp"

namespace cerf {

using nlohmann::json;

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::string rule = "lowest";
    std::string from = "alpha";
    std::string to = "beta";
    std::string census;
    std::string trisection;
    std::string heegaard;
    int sector = 0;
};

// Validation failures end the command with exit 1 without a stack of
// error plumbing in every handler.
struct Failure {
    json report;
};

template <class T>
const T& expect(const Document& doc, DocumentKind kind) {
    if (doc.kind() != kind)
        throw Error("WRONG_KIND", std::string("expected a ") + to_string(kind) + " document, got " + to_string(doc.kind()));
    return std::get<T>(doc.payload);
}

CutSystem default_start(const CerfGraphic1& gr) {
    return gr.start_cut_system ? *gr.start_cut_system : standard_cut_system(SymplecticLattice(gr.genus));
}

json span_json(const CutSystem& cs, const SymplecticLattice& lattice) {
    json rows = json::array();
    const auto span = lagrangian_span(cs, lattice);
    for (std::size_t r = 0; r < span.basis().rows(); ++r) rows.push_back(span.basis().row_vector(r));
    return rows;
}

json validate_json(const Document& doc) {
    json j{{"kind", to_string(doc.kind())}};
    ValidationReport report;
    switch (doc.kind()) {
    case DocumentKind::Surface: {
        const auto& s = std::get<SurfaceData>(doc.payload);
        const SymplecticLattice lattice(s.genus);
        for (const auto& [name, list] : s.cut_systems) report.merge(validate_cut_system(s.cut_system(name), lattice), name + ": ");
        break;
    }
    case DocumentKind::Morse: {
        const auto v = validate_sliced(std::get<MorseData>(doc.payload).function);
        report = v.report;
        if (v.report.ok()) j["genus"] = v.genus;
        break;
    }
    case DocumentKind::Graphic1: report = validate_graphic1(std::get<CerfGraphic1>(doc.payload)); break;
    case DocumentKind::Trisection: report = validate_trisection(std::get<TrisectionDiagram>(doc.payload)); break;
    case DocumentKind::Decomposition: report = validate_decomposition(std::get<PolygonDecomposition>(doc.payload)); break;
    }
    j.update(report_to_json(report));
    if (!report.ok()) throw Failure{j};
    return j;
}

json reeb_json(const Document& doc) {
    const auto& f = expect<MorseData>(doc, DocumentKind::Morse).function;
    const auto graph = reeb_graph(f);
    json vertices = json::array(), edges = json::array(), neighborhoods = json::array();
    for (std::size_t i = 0; i < f.events.size(); ++i) {
        vertices.push_back({{"event", i}, {"kind", to_string(f.events[i].kind)}, {"height", height_to_string(f.events[i].height)}});
        const auto n = critical_neighborhood(f, i);
        neighborhoods.push_back({{"event", i}, {"genus", n.genus}, {"boundary_circles", n.boundary_circles}, {"chi", n.euler_characteristic}});
    }
    for (const auto& e : graph.edges)
        edges.push_back({{"circle", e.circle}, {"from", e.from}, {"to", e.to}, {"created", height_to_string(e.created)},
                         {"destroyed", height_to_string(e.destroyed)}});
    return {{"betti", graph.betti}, {"vertices", vertices}, {"edges", edges}, {"critical_neighborhoods", neighborhoods}};
}

json cut_system_json(const Document& doc, const Options& opt) {
    if (doc.kind() == DocumentKind::Surface) {
        const auto& s = std::get<SurfaceData>(doc.payload);
        const SymplecticLattice lattice(s.genus);
        json systems = json::object();
        bool ok = true;
        for (const auto& [name, list] : s.cut_systems) {
            const auto cs = s.cut_system(name);
            auto report = validate_cut_system(cs, lattice);
            json entry = report_to_json(report);
            entry["curves"] = cut_system_to_json(cs);
            if (report.ok()) entry["span"] = span_json(cs, lattice);
            ok = ok && report.ok();
            systems[name] = entry;
        }
        json j{{"genus", s.genus}, {"cut_systems", systems}};
        if (!ok) throw Failure{j};
        return j;
    }
    const auto& m = expect<MorseData>(doc, DocumentKind::Morse);
    const auto v = validate_sliced(m.function);
    if (!v.report.ok()) throw Failure{report_to_json(v.report)};
    const SymplecticLattice lattice(v.genus);
    const auto rule = opt.rule == "highest" ? CycleSelection::HighestClosing : CycleSelection::LowestClosing;
    const auto cs = cut_system_from_morse(m.function, lattice, m.basis_map ? *m.basis_map : standard_basis_map(lattice), rule);
    return {{"genus", v.genus},
            {"cut_system", cut_system_to_json(cs)},
            {"provenance", cs.provenance},
            {"span", span_json(cs, lattice)},
            {"valid", validate_cut_system(cs, lattice).ok()}};
}

json classify_interval_json(const Document& doc) {
    const auto& gr = expect<CerfGraphic1>(doc, DocumentKind::Graphic1);
    json segments = json::array();
    int type1 = 0;
    for (std::size_t i = 0; i < gr.segments.size(); ++i) {
        const auto t = classify_interval(gr.segments[i]);
        type1 += t == IntervalType::Type1;
        segments.push_back({{"segment", i}, {"type", to_string(t)}});
    }
    return {{"segments", segments}, {"type1_count", type1}};
}

json classify_polygon_json(const Document& doc) {
    const auto& d = expect<PolygonDecomposition>(doc, DocumentKind::Decomposition);
    json polygons = json::array();
    for (std::size_t i = 0; i < d.polygons.size(); ++i)
        polygons.push_back({{"polygon", i}, {"type", classify_polygon(d.polygons[i]).to_string()}});
    return {{"polygons", polygons}};
}

json census_json(const std::string& which) {
    const bool triple = which == "triple";
    if (!triple && which != "figure1") throw Error("USAGE", "enumerate expects figure1 or triple");
    const auto& census = triple ? triple_census() : figure1_census();
    json entries = json::array();
    std::map<std::pair<int, int>, int> profiles;
    for (std::size_t i = 0; i < census.size(); ++i) {
        const auto& e = census[i];
        json entry = neighborhood_to_json(e.neighborhood);
        entry["index"] = i;
        entry["profile"] = profile_to_json(e.profile);
        entry["labelled"] = e.labelled;
        if (triple) {
            json counts = json::array();
            for (const auto& labels : height_assignments()) {
                const auto types = permutahedron_edge_types(e.neighborhood, labels);
                counts.push_back(std::count(types.begin(), types.end(), IntervalType::Type1));
            }
            entry["type1_counts"] = counts;
        }
        entries.push_back(entry);
        ++profiles[{e.profile.genus, e.profile.boundary_circles}];
    }
    json summary = json::array();
    for (const auto& [key, count] : profiles)
        summary.push_back({{"genus", key.first}, {"boundary_circles", key.second}, {"count", count}});
    return {{"census", which}, {"count", census.size()}, {"profiles", summary}, {"entries", entries}};
}

json invariants_json(const Options& opt) {
    if (!opt.heegaard.empty()) {
        const auto doc = read_document(opt.heegaard);
        const auto& s = expect<SurfaceData>(doc, DocumentKind::Surface);
        const SymplecticLattice lattice(s.genus);
        return {{"h1", group_to_json(heegaard_h1(s.cut_system(opt.from), s.cut_system(opt.to), lattice))}};
    }
    const std::string path = opt.trisection.empty() ? opt.input : opt.trisection;
    if (path.empty()) throw Error("USAGE", "invariants needs --trisection or --heegaard");
    const auto doc = read_document(path);
    const auto& t = expect<TrisectionDiagram>(doc, DocumentKind::Trisection);
    const auto report = validate_trisection(t);
    if (!report.ok()) throw Failure{report_to_json(report)};
    return {{"chi", trisection_euler_characteristic(t.g, t.k)},
            {"h1_rank", trisection_h1(t).rank},
            {"sigma", trisection_signature(t)}};
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
    if (opt.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.output, std::ios::binary);
    if (!file) throw Error("IO_ERROR", "cannot write '" + opt.output + "'");
    file << text;
}

std::string render_any(const Document& doc) {
    if (doc.kind() == DocumentKind::Graphic1) {
        const auto& gr = std::get<CerfGraphic1>(doc.payload);
        validate_graphic1(gr).throw_if_failed();
        return render_svg(gr);
    }
    const auto& d = expect<PolygonDecomposition>(doc, DocumentKind::Decomposition);
    validate_decomposition(d).throw_if_failed();
    return render_svg(d);
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial Cerf theory toolkit", "cerf-forge"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input,input", opt.input, "input document");
        if (needs_input) in->required();
        sub->add_option("--output", opt.output, "write the report here instead of standard output");
        sub->add_option("--format", opt.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
        return sub;
    };

    std::function<std::string()> action;
    auto doc_command = [&](const char* name, const char* help, std::function<json(const Document&)> body) {
        add_io(app.add_subcommand(name, help), true)->callback([&, body] {
            action = [&, body] { return canonical_dump(body(read_document(opt.input))); };
        });
    };

    // Parse failures are part of the validation report here.
    auto* val = add_io(app.add_subcommand("validate", "check a document"), true);
    val->callback([&] {
        action = [&] {
            Document doc;
            try {
                doc = read_document(opt.input);
            } catch (const Error& e) {
                ValidationReport report;
                report.add(e.code(), e.message());
                throw Failure{{{"valid", false}, {"issues", report_to_json(report)["issues"]}}};
            }
            return canonical_dump(validate_json(doc));
        };
    });
    doc_command("reeb", "Reeb graph of a Morse function", reeb_json);
    doc_command("classify-interval", "type of every segment of a graphic", classify_interval_json);
    doc_command("classify-polygon", "type of every polygon of a decomposition", classify_polygon_json);
    doc_command("assemble-b1", "4-manifold record of an interval family", [](const Document& doc) {
        const auto& gr = expect<CerfGraphic1>(doc, DocumentKind::Graphic1);
        return record_to_json(assemble_interval_family(gr, default_start(gr)));
    });
    doc_command("assemble-s1", "4-manifold record of a circle family", [](const Document& doc) {
        const auto& gr = expect<CerfGraphic1>(doc, DocumentKind::Graphic1);
        return record_to_json(assemble_circle_family(gr, default_start(gr)));
    });
    doc_command("assemble-b2", "capping report of a polygon decomposition", [](const Document& doc) {
        return capping_to_json(assemble_disk_family(expect<PolygonDecomposition>(doc, DocumentKind::Decomposition)));
    });

    auto* cut = add_io(app.add_subcommand("cut-system", "cut system of a Morse function or surface document"), true);
    cut->add_option("--rule", opt.rule, "Reeb cycle circle choice")->check(CLI::IsMember({"lowest", "highest"}));
    cut->callback([&] { action = [&] { return canonical_dump(cut_system_json(read_document(opt.input), opt)); }; });

    auto* interp = add_io(app.add_subcommand("interpolate", "slide sequence between two named cut systems"), true);
    interp->add_option("--from", opt.from, "source cut system name");
    interp->add_option("--to", opt.to, "target cut system name");
    interp->callback([&] {
        action = [&] {
            const auto doc = read_document(opt.input);
            const auto& s = expect<SurfaceData>(doc, DocumentKind::Surface);
            const SymplecticLattice lattice(s.genus);
            const auto seq = interpolate_cut_systems(s.cut_system(opt.from), s.cut_system(opt.to), lattice);
            json moves = json::array();
            for (const auto& m : seq.moves) moves.push_back({{"target", m.target}, {"source", m.source}, {"sign", m.sign}});
            return canonical_dump({{"moves", moves}, {"length", seq.moves.size()}, {"bound", seq.bound}, {"max_entry", seq.max_entry}});
        };
    });

    auto* compile = add_io(app.add_subcommand("compile-trisection", "Cerf graphic of a trisection diagram"), true);
    compile->add_option("--sector", opt.sector, "1, 2 or 3 for one interval block")->check(CLI::Range(1, 3));
    compile->callback([&] {
        action = [&] {
            const auto doc = read_document(opt.input);
            const auto& t = expect<TrisectionDiagram>(doc, DocumentKind::Trisection);
            const auto gr = opt.sector ? trisection_sector_family(t, opt.sector) : standard_family_from_trisection(t);
            if (opt.format == "svg") return render_svg(gr);
            return serialize_document(Document{kFormatVersion, gr});
        };
    });

    auto* inv = add_io(app.add_subcommand("invariants", "chi, H1 rank and signature"), false);
    inv->add_option("--trisection", opt.trisection, "trisection document");
    inv->add_option("--heegaard", opt.heegaard, "surface document with two cut systems");
    inv->add_option("--from", opt.from, "first cut system name");
    inv->add_option("--to", opt.to, "second cut system name");
    inv->callback([&] { action = [&] { return canonical_dump(invariants_json(opt)); }; });

    auto* en = app.add_subcommand("enumerate", "neighbourhood census");
    en->add_option("census", opt.census, "figure1 or triple")->required()->check(CLI::IsMember({"figure1", "triple"}));
    en->add_option("--output", opt.output, "write the report here instead of standard output");
    en->callback([&] { action = [&] { return canonical_dump(census_json(opt.census)); }; });

    auto* render = add_io(app.add_subcommand("render", "SVG of a graphic or decomposition"), true);
    render->callback([&] { action = [&] { return render_any(read_document(opt.input)); }; });

    std::vector<std::string> storage{"cerf-forge"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        emit(action(), opt, out);
        return 0;
    } catch (const Failure& f) {
        emit(canonical_dump(f.report), opt, out);
        err << "validation failed\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == "USAGE" ? 2 : 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace cerf
