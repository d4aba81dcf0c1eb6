#include "cerf/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cerf {

using nlohmann::json;

const char* to_string(DocumentKind kind) {
    switch (kind) {
    case DocumentKind::Surface: return "surface";
    case DocumentKind::Morse: return "morse";
    case DocumentKind::Graphic1: return "graphic1";
    case DocumentKind::Trisection: return "trisection";
    case DocumentKind::Decomposition: return "decomposition";
    }
    return "?";
}

CutSystem SurfaceData::cut_system(const std::string& name) const {
    const auto it = cut_systems.find(name);
    if (it == cut_systems.end()) throw Error("UNKNOWN_CUT_SYSTEM", "no cut system named '" + name + "'");
    CutSystem cs;
    for (const auto& curve : it->second) {
        cs.curves.push_back(curves.at(curve));
        cs.provenance.push_back(curve);
    }
    return cs;
}

namespace {

// Strict object reader: every key must be consumed or the object is rejected.
class Reader {
public:
    Reader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
        if (!j_.is_object()) throw Error("TYPE_MISMATCH", where_ + " must be an object");
    }

    bool has(const std::string& key) const { return j_.contains(key); }

    const json& required(const std::string& key) {
        seen_.insert(key);
        if (!j_.contains(key)) throw Error("MISSING_FIELD", where_ + " lacks '" + key + "'");
        return j_.at(key);
    }
    const json* optional(const std::string& key) {
        seen_.insert(key);
        return j_.contains(key) ? &j_.at(key) : nullptr;
    }
    std::string path(const std::string& key) const { return where_ + "." + key; }

    void finish() const {
        for (const auto& [key, value] : j_.items())
            if (!seen_.contains(key)) throw Error("UNKNOWN_FIELD", where_ + " has unknown field '" + key + "'");
    }

private:
    const json& j_;
    std::string where_;
    std::set<std::string> seen_;
};

Integer as_integer(const json& j, const std::string& where) {
    if (j.is_number_float()) throw Error("NON_EXACT_NUMBER", where + " must be an exact integer");
    if (j.is_number_unsigned()) {
        const auto v = j.get<std::uint64_t>();
        if (v > static_cast<std::uint64_t>(std::numeric_limits<Integer>::max()))
            throw Error("INTEGER_OVERFLOW", where + " is too large");
        return static_cast<Integer>(v);
    }
    if (!j.is_number_integer()) throw Error("TYPE_MISMATCH", where + " must be an integer");
    return j.get<Integer>();
}

int as_int(const json& j, const std::string& where) {
    const Integer v = as_integer(j, where);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw Error("INTEGER_OVERFLOW", where + " is too large");
    return static_cast<int>(v);
}

std::size_t as_index(const json& j, const std::string& where) {
    const Integer v = as_integer(j, where);
    if (v < 0) throw Error("TYPE_MISMATCH", where + " must be non-negative");
    return static_cast<std::size_t>(v);
}

bool as_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw Error("TYPE_MISMATCH", where + " must be a boolean");
    return j.get<bool>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw Error("TYPE_MISMATCH", where + " must be a string");
    return j.get<std::string>();
}

const json& as_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw Error("TYPE_MISMATCH", where + " must be an array");
    return j;
}

Height as_height(const json& j, const std::string& where) {
    if (j.is_number_float()) throw Error("NON_EXACT_NUMBER", where + " must be an integer or an \"n/d\" string");
    if (j.is_number()) return Height(as_integer(j, where));
    if (j.is_string()) return parse_height(j.get<std::string>());
    throw Error("TYPE_MISMATCH", where + " must be an integer or an \"n/d\" string");
}

HomologyClass as_class(const json& j, const std::string& where, int genus) {
    as_array(j, where);
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i) coeffs.push_back(as_integer(j[i], where + "[" + std::to_string(i) + "]"));
    if (genus >= 0 && coeffs.size() != static_cast<std::size_t>(2 * genus))
        throw Error("DIMENSION_MISMATCH", where + " has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                              std::to_string(2 * genus));
    return HomologyClass(std::move(coeffs));
}

CutSystem as_cut_system(const json& j, const std::string& where, int genus) {
    as_array(j, where);
    CutSystem cs;
    for (std::size_t i = 0; i < j.size(); ++i) cs.curves.push_back(as_class(j[i], where + "[" + std::to_string(i) + "]", genus));
    return cs;
}

int as_genus(const json& j, const std::string& where) {
    const int g = as_int(j, where);
    if (g < 0) throw Error("INVALID_GENUS", where + " must be non-negative");
    return g;
}

// ---- Morse functions ----

std::vector<int> circle_list(const json& j, const std::string& where, std::size_t expected) {
    std::vector<int> ids;
    if (expected == 1 && !j.is_array()) {
        ids.push_back(as_int(j, where));
    } else {
        as_array(j, where);
        for (std::size_t i = 0; i < j.size(); ++i) ids.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
    }
    if (ids.size() != expected)
        throw Error("TYPE_MISMATCH", where + " must list " + std::to_string(expected) + " circle id(s)");
    return ids;
}

SlicedMorseFunction parse_function(const json& j, const std::string& where) {
    Reader r(j, where);
    const json& events = as_array(r.required("events"), r.path("events"));
    r.finish();
    SlicedMorseFunction f;
    std::set<int> produced;
    for (std::size_t i = 0; i < events.size(); ++i) {
        const std::string at = where + ".events[" + std::to_string(i) + "]";
        Reader e(events[i], at);
        const std::string kind = as_string(e.required("kind"), e.path("kind"));
        MorseEvent ev;
        ev.height = as_height(e.required("height"), e.path("height"));
        if (kind == "birth") {
            ev.kind = MorseEventKind::Birth;
            ev.out = circle_list(e.required("out"), e.path("out"), 1);
        } else if (kind == "death") {
            ev.kind = MorseEventKind::Death;
            ev.in = circle_list(e.required("in"), e.path("in"), 1);
        } else if (kind == "merge") {
            ev.kind = MorseEventKind::Merge;
            ev.in = circle_list(e.required("in"), e.path("in"), 2);
            ev.out = circle_list(e.required("out"), e.path("out"), 1);
        } else if (kind == "split") {
            ev.kind = MorseEventKind::Split;
            ev.in = circle_list(e.required("in"), e.path("in"), 1);
            ev.out = circle_list(e.required("out"), e.path("out"), 2);
        } else {
            throw Error("UNKNOWN_EVENT_KIND", at + " has unknown kind '" + kind + "'");
        }
        e.finish();
        produced.insert(ev.out.begin(), ev.out.end());
        f.events.push_back(std::move(ev));
    }
    std::set<Height> heights;
    for (const auto& ev : f.events) {
        if (!heights.insert(ev.height).second)
            throw Error("DUPLICATE_HEIGHT", where + " repeats critical value " + height_to_string(ev.height));
        for (int c : ev.in)
            if (!produced.contains(c))
                throw Error("DANGLING_CIRCLE_ID", where + " consumes circle " + std::to_string(c) + " that no event creates");
    }
    return f;
}

std::map<std::string, SlicedMorseFunction> parse_functions(const json& j, const std::string& where) {
    if (!j.is_object()) throw Error("TYPE_MISMATCH", where + " must be an object");
    std::map<std::string, SlicedMorseFunction> out;
    for (const auto& [name, value] : j.items()) out[name] = parse_function(value, where + "." + name);
    return out;
}

// ---- neighbourhoods and events ----

RibbonNeighborhood parse_neighborhood(const json& j, const std::string& where) {
    Reader r(j, where);
    if (r.has("census")) {
        const std::string census = as_string(r.required("census"), r.path("census"));
        const std::size_t index = as_index(r.required("index"), r.path("index"));
        r.finish();
        const std::vector<CensusEntry>* entries = nullptr;
        if (census == "figure1") entries = &figure1_census();
        else if (census == "triple") entries = &triple_census();
        else throw Error("UNKNOWN_CENSUS", where + " names unknown census '" + census + "'");
        if (index >= entries->size())
            throw Error("UNKNOWN_CENSUS_ENTRY", where + " index " + std::to_string(index) + " is out of range");
        return (*entries)[index].neighborhood;
    }
    RibbonNeighborhood n;
    n.vertices = as_int(r.required("vertices"), r.path("vertices"));
    if (n.vertices <= 0 || n.vertices > 64) throw Error("INVALID_NEIGHBORHOOD", where + " has a bad vertex count");
    const json& pairs = as_array(r.required("pairs"), r.path("pairs"));
    const json& signs = as_array(r.required("sector_signs"), r.path("sector_signs"));
    r.finish();
    n.partner.assign(n.half_edges(), -1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string at = where + ".pairs[" + std::to_string(i) + "]";
        if (!pairs[i].is_array() || pairs[i].size() != 2) throw Error("TYPE_MISMATCH", at + " must be a pair");
        const Integer a = as_integer(pairs[i][0], at), b = as_integer(pairs[i][1], at);
        if (a < 0 || b < 0 || a >= n.half_edges() || b >= n.half_edges() || a == b || n.partner[a] >= 0 || n.partner[b] >= 0)
            throw Error("INVALID_NEIGHBORHOOD", at + " is not a valid half-edge pairing");
        n.partner[a] = static_cast<int>(b);
        n.partner[b] = static_cast<int>(a);
    }
    for (std::size_t i = 0; i < signs.size(); ++i) n.sector_signs.push_back(as_int(signs[i], where + ".sector_signs"));
    validate_ribbon_structure(n).throw_if_failed();
    return n;
}

Event1 parse_event1(const json& j, const std::string& where, int genus) {
    Reader r(j, where);
    const std::string kind = as_string(r.required("kind"), r.path("kind"));
    Event1 e;
    if (kind == "birth" || kind == "death") {
        e.kind = kind == "birth" ? Event1::Kind::Birth : Event1::Kind::Death;
        r.finish();
        return e;
    }
    if (kind != "switch") throw Error("UNKNOWN_EVENT_KIND", where + " has unknown kind '" + kind + "'");
    e.kind = Event1::Kind::Switch;
    e.p = as_int(r.required("p"), r.path("p"));
    e.q = as_int(r.required("q"), r.path("q"));
    const json& idx = as_array(r.required("indices"), r.path("indices"));
    if (idx.size() != 2) throw Error("TYPE_MISMATCH", r.path("indices") + " must have two entries");
    e.indices = {as_int(idx[0], r.path("indices")), as_int(idx[1], r.path("indices"))};
    const std::string locale = as_string(r.required("locale"), r.path("locale"));
    if (locale == "different_components") e.locale = SwitchLocale::DifferentComponents;
    else if (locale == "same_component") e.locale = SwitchLocale::SameComponent;
    else throw Error("MALFORMED_LOCALE", where + " has unknown locale '" + locale + "'");
    if (const json* n = r.optional("neighborhood")) e.neighborhood = parse_neighborhood(*n, r.path("neighborhood"));
    if (const json* s = r.optional("surgery")) {
        Reader sr(*s, r.path("surgery"));
        SurgeryPair pair{as_class(sr.required("from"), sr.path("from"), genus),
                         as_class(sr.required("to"), sr.path("to"), genus)};
        sr.finish();
        e.surgery = std::move(pair);
    }
    if (const json* s = r.optional("slide")) {
        Reader sr(*s, r.path("slide"));
        SlideMove m;
        m.target = as_index(sr.required("target"), sr.path("target"));
        m.source = as_index(sr.required("source"), sr.path("source"));
        m.sign = as_int(sr.required("sign"), sr.path("sign"));
        sr.finish();
        e.slide = m;
    }
    r.finish();
    return e;
}

ElementaryInterval parse_segment(const json& j, const std::string& where, int genus,
                                 const std::map<std::string, SlicedMorseFunction>& functions) {
    Reader r(j, where);
    ElementaryInterval ei;
    ei.start = as_string(r.required("start"), r.path("start"));
    ei.end = as_string(r.required("end"), r.path("end"));
    if (const json* e = r.optional("event")) ei.event = parse_event1(*e, r.path("event"), genus);
    r.finish();
    for (const auto* name : {&ei.start, &ei.end})
        if (!functions.contains(*name)) throw Error("DANGLING_FUNCTION_ID", where + " refers to unknown function '" + *name + "'");
    return ei;
}

std::optional<TrisectionLabel> parse_label(Reader& r, int genus) {
    const json* t = r.optional("trisection");
    if (!t) return std::nullopt;
    Reader tr(*t, r.path("trisection"));
    TrisectionLabel label{as_genus(tr.required("g"), tr.path("g")), as_genus(tr.required("k"), tr.path("k"))};
    tr.finish();
    if (label.g != genus) throw Error("DIMENSION_MISMATCH", r.path("trisection") + " genus differs from document genus");
    return label;
}

// ---- payloads ----

SurfaceData parse_surface(const json& j) {
    Reader r(j, "payload");
    SurfaceData s;
    s.genus = as_genus(r.required("genus"), "payload.genus");
    const json& curves = r.required("curves");
    if (!curves.is_object()) throw Error("TYPE_MISMATCH", "payload.curves must be an object");
    for (const auto& [name, value] : curves.items()) s.curves[name] = as_class(value, "payload.curves." + name, s.genus);
    if (const json* systems = r.optional("cut_systems")) {
        if (!systems->is_object()) throw Error("TYPE_MISMATCH", "payload.cut_systems must be an object");
        for (const auto& [name, value] : systems->items()) {
            const std::string at = "payload.cut_systems." + name;
            as_array(value, at);
            std::vector<std::string> names;
            for (const auto& c : value) {
                names.push_back(as_string(c, at));
                if (!s.curves.contains(names.back()))
                    throw Error("DANGLING_CURVE_ID", at + " refers to unknown curve '" + names.back() + "'");
            }
            s.cut_systems[name] = std::move(names);
        }
    }
    r.finish();
    return s;
}

MorseData parse_morse(const json& j) {
    Reader r(j, "payload");
    MorseData m;
    m.function = parse_function(json{{"events", r.required("events")}}, "payload");
    if (const json* b = r.optional("basis_map")) {
        as_array(*b, "payload.basis_map");
        BasisMap map;
        int genus = -1;
        for (std::size_t i = 0; i < b->size(); ++i) {
            map.push_back(as_class((*b)[i], "payload.basis_map[" + std::to_string(i) + "]", genus));
            genus = static_cast<int>(map.front().size() / 2);
            if (map.front().size() % 2 != 0) throw Error("DIMENSION_MISMATCH", "basis_map classes need even length");
        }
        m.basis_map = std::move(map);
    }
    r.finish();
    return m;
}

CerfGraphic1 parse_graphic1(const json& j) {
    Reader r(j, "payload");
    CerfGraphic1 gr;
    gr.genus = as_genus(r.required("genus"), "payload.genus");
    gr.cyclic = as_bool(r.required("cyclic"), "payload.cyclic");
    gr.functions = parse_functions(r.required("functions"), "payload.functions");
    const json& segments = as_array(r.required("segments"), "payload.segments");
    for (std::size_t i = 0; i < segments.size(); ++i)
        gr.segments.push_back(parse_segment(segments[i], "payload.segments[" + std::to_string(i) + "]", gr.genus, gr.functions));
    if (const json* cs = r.optional("start_cut_system"))
        gr.start_cut_system = as_cut_system(*cs, "payload.start_cut_system", gr.genus);
    gr.trisection = parse_label(r, gr.genus);
    r.finish();
    return gr;
}

TrisectionDiagram parse_trisection(const json& j) {
    Reader r(j, "payload");
    TrisectionDiagram t;
    t.g = as_genus(r.required("g"), "payload.g");
    t.k = as_genus(r.required("k"), "payload.k");
    t.alpha = as_cut_system(r.required("alpha"), "payload.alpha", t.g);
    t.beta = as_cut_system(r.required("beta"), "payload.beta", t.g);
    t.gamma = as_cut_system(r.required("gamma"), "payload.gamma", t.g);
    r.finish();
    return t;
}

Event2 parse_event2(const json& j, const std::string& where, int genus) {
    Reader r(j, where);
    const std::string kind = as_string(r.required("kind"), r.path("kind"));
    Event2 e;
    if (kind == "swallowtail") e.kind = Event2::Kind::Swallowtail;
    else if (kind == "birth_morse_cross") e.kind = Event2::Kind::BirthMorseCross;
    else if (kind == "triple_switch") e.kind = Event2::Kind::TripleSwitch;
    else throw Error("UNKNOWN_EVENT_KIND", where + " has unknown kind '" + kind + "'");
    if (const json* n = r.optional("neighborhood")) e.neighborhood = parse_neighborhood(*n, r.path("neighborhood"));
    if (const json* c = r.optional("local_classes")) {
        as_array(*c, r.path("local_classes"));
        if (c->size() != 3) throw Error("TYPE_MISMATCH", r.path("local_classes") + " must list three classes");
        e.local_classes = std::array<HomologyClass, 3>{as_class((*c)[0], r.path("local_classes"), genus),
                                                       as_class((*c)[1], r.path("local_classes"), genus),
                                                       as_class((*c)[2], r.path("local_classes"), genus)};
    }
    r.finish();
    return e;
}

PolygonDecomposition parse_decomposition(const json& j) {
    Reader r(j, "payload");
    PolygonDecomposition d;
    d.genus = as_genus(r.required("genus"), "payload.genus");
    d.functions = parse_functions(r.required("functions"), "payload.functions");
    const json& polygons = as_array(r.required("polygons"), "payload.polygons");
    for (std::size_t p = 0; p < polygons.size(); ++p) {
        const std::string at = "payload.polygons[" + std::to_string(p) + "]";
        Reader pr(polygons[p], at);
        ElementaryPolygon polygon;
        const json& boundary = as_array(pr.required("boundary"), pr.path("boundary"));
        for (std::size_t i = 0; i < boundary.size(); ++i)
            polygon.boundary.push_back(
                parse_segment(boundary[i], at + ".boundary[" + std::to_string(i) + "]", d.genus, d.functions));
        if (const json* c = pr.optional("center")) polygon.center = parse_event2(*c, pr.path("center"), d.genus);
        pr.finish();
        d.polygons.push_back(std::move(polygon));
    }
    if (const json* g = r.optional("gluings")) {
        as_array(*g, "payload.gluings");
        for (std::size_t i = 0; i < g->size(); ++i) {
            const std::string at = "payload.gluings[" + std::to_string(i) + "]";
            const json& row = (*g)[i];
            if (!row.is_array() || row.size() != 4) throw Error("TYPE_MISMATCH", at + " must be [pa, ea, pb, eb]");
            d.gluings.push_back({{as_index(row[0], at), as_index(row[1], at)}, {as_index(row[2], at), as_index(row[3], at)}});
        }
    }
    if (const json* cs = r.optional("start_cut_system"))
        d.start_cut_system = as_cut_system(*cs, "payload.start_cut_system", d.genus);
    d.trisection = parse_label(r, d.genus);
    r.finish();
    return d;
}

// ---- writers ----

json height_to_json(const Height& h) {
    if (h.denominator() == 1) return h.numerator();
    return height_to_string(h);
}

json event1_to_json(const Event1& e) {
    json j;
    switch (e.kind) {
    case Event1::Kind::Birth: j["kind"] = "birth"; return j;
    case Event1::Kind::Death: j["kind"] = "death"; return j;
    case Event1::Kind::Switch: break;
    }
    j["kind"] = "switch";
    j["p"] = e.p;
    j["q"] = e.q;
    j["indices"] = {e.indices[0], e.indices[1]};
    j["locale"] = e.locale == SwitchLocale::SameComponent ? "same_component" : "different_components";
    if (e.neighborhood) j["neighborhood"] = neighborhood_to_json(*e.neighborhood);
    if (e.surgery) j["surgery"] = {{"from", class_to_json(e.surgery->from)}, {"to", class_to_json(e.surgery->to)}};
    if (e.slide) j["slide"] = {{"target", e.slide->target}, {"source", e.slide->source}, {"sign", e.slide->sign}};
    return j;
}

json segment_to_json(const ElementaryInterval& ei) {
    json j{{"start", ei.start}, {"end", ei.end}};
    if (ei.event) j["event"] = event1_to_json(*ei.event);
    return j;
}

json functions_to_json(const std::map<std::string, SlicedMorseFunction>& functions) {
    json j = json::object();
    for (const auto& [name, f] : functions) j[name] = morse_function_to_json(f);
    return j;
}

json payload_to_json(const SurfaceData& s) {
    json curves = json::object(), systems = json::object();
    for (const auto& [name, c] : s.curves) curves[name] = class_to_json(c);
    for (const auto& [name, list] : s.cut_systems) systems[name] = list;
    return {{"genus", s.genus}, {"curves", curves}, {"cut_systems", systems}};
}

json payload_to_json(const MorseData& m) {
    json j = morse_function_to_json(m.function);
    if (m.basis_map) {
        json b = json::array();
        for (const auto& c : *m.basis_map) b.push_back(class_to_json(c));
        j["basis_map"] = b;
    }
    return j;
}

void put_optional_context(json& j, const std::optional<CutSystem>& cs, const std::optional<TrisectionLabel>& label) {
    if (cs) j["start_cut_system"] = cut_system_to_json(*cs);
    if (label) j["trisection"] = {{"g", label->g}, {"k", label->k}};
}

json payload_to_json(const CerfGraphic1& gr) {
    json segments = json::array();
    for (const auto& s : gr.segments) segments.push_back(segment_to_json(s));
    json j{{"genus", gr.genus}, {"cyclic", gr.cyclic}, {"functions", functions_to_json(gr.functions)}, {"segments", segments}};
    put_optional_context(j, gr.start_cut_system, gr.trisection);
    return j;
}

json payload_to_json(const TrisectionDiagram& t) {
    return {{"g", t.g}, {"k", t.k}, {"alpha", cut_system_to_json(t.alpha)}, {"beta", cut_system_to_json(t.beta)},
            {"gamma", cut_system_to_json(t.gamma)}};
}

json payload_to_json(const PolygonDecomposition& d) {
    json polygons = json::array();
    for (const auto& p : d.polygons) {
        json boundary = json::array();
        for (const auto& s : p.boundary) boundary.push_back(segment_to_json(s));
        json pj{{"boundary", boundary}};
        if (p.center) {
            json c{{"kind", to_string(p.center->kind)}};
            if (p.center->neighborhood) c["neighborhood"] = neighborhood_to_json(*p.center->neighborhood);
            if (p.center->local_classes) {
                json lc = json::array();
                for (const auto& x : *p.center->local_classes) lc.push_back(class_to_json(x));
                c["local_classes"] = lc;
            }
            pj["center"] = c;
        }
        polygons.push_back(pj);
    }
    json gluings = json::array();
    for (const auto& g : d.gluings) gluings.push_back({g.a.polygon, g.a.edge, g.b.polygon, g.b.edge});
    json j{{"genus", d.genus}, {"functions", functions_to_json(d.functions)}, {"polygons", polygons}, {"gluings", gluings}};
    put_optional_context(j, d.start_cut_system, d.trisection);
    return j;
}

} // namespace

Document parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("MALFORMED_JSON", e.what());
    }
    Reader r(j, "document");
    const std::string version = as_string(r.required("format_version"), "format_version");
    if (version.rfind("1.", 0) != 0) throw Error("UNKNOWN_VERSION", "unsupported format_version '" + version + "'");
    const std::string kind = as_string(r.required("kind"), "kind");
    const json& payload = r.required("payload");
    r.finish();

    Document doc;
    doc.format_version = version;
    if (kind == "surface") doc.payload = parse_surface(payload);
    else if (kind == "morse") doc.payload = parse_morse(payload);
    else if (kind == "graphic1") doc.payload = parse_graphic1(payload);
    else if (kind == "trisection") doc.payload = parse_trisection(payload);
    else if (kind == "decomposition") doc.payload = parse_decomposition(payload);
    else throw Error("UNKNOWN_KIND", "unknown document kind '" + kind + "'");
    return doc;
}

Document read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("IO_ERROR", "cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

json document_to_json(const Document& doc) {
    json payload = std::visit([](const auto& p) { return payload_to_json(p); }, doc.payload);
    return {{"format_version", doc.format_version}, {"kind", to_string(doc.kind())}, {"payload", payload}};
}

std::string serialize_document(const Document& doc) { return canonical_dump(document_to_json(doc)); }

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json class_to_json(const HomologyClass& c) { return c.coeffs(); }

json cut_system_to_json(const CutSystem& cs) {
    json j = json::array();
    for (const auto& c : cs.curves) j.push_back(class_to_json(c));
    return j;
}

json group_to_json(const AbelianGroupDescriptor& g) {
    return {{"rank", g.rank}, {"torsion", g.torsion}, {"text", g.to_string()}};
}

json neighborhood_to_json(const RibbonNeighborhood& n) {
    json pairs = json::array();
    for (int h = 0; h < n.half_edges(); ++h)
        if (h < n.partner[h]) pairs.push_back({h, n.partner[h]});
    return {{"vertices", n.vertices}, {"pairs", pairs}, {"sector_signs", n.sector_signs}};
}

json profile_to_json(const RibbonProfile& p) {
    return {{"chi", p.euler_characteristic}, {"boundary_circles", p.boundary_circles}, {"genus", p.genus}};
}

json record_to_json(const FourManifoldRecord& r) {
    json surgeries = json::array();
    for (const auto& s : r.surgeries)
        surgeries.push_back({{"slot", s.slot}, {"replaced", class_to_json(s.replaced)}, {"introduced", class_to_json(s.introduced)}});
    json j{{"genus", r.genus},
           {"cyclic", r.cyclic},
           {"initial_cut_system", cut_system_to_json(r.initial)},
           {"final_cut_system", cut_system_to_json(r.final_system)},
           {"surgeries", surgeries},
           {"type1_count", r.surgeries.size()},
           {"k", r.k ? json(*r.k) : json(nullptr)},
           {"boundary_h1", group_to_json(r.boundary_h1)}};
    if (r.euler_characteristic) j["chi"] = *r.euler_characteristic;
    if (r.signature) j["sigma"] = *r.signature;
    if (r.h1) j["h1"] = group_to_json(*r.h1);
    return j;
}

json capping_to_json(const CappingReport& r) {
    json types = json::array();
    for (const auto& t : r.polygon_types) types.push_back(t.to_string());
    auto opt = [](const auto& v) { return v ? json(*v) : json(nullptr); };
    return {{"p", r.p},
            {"q", r.q},
            {"polygon_types", types},
            {"genus", r.genus},
            {"k", opt(r.k)},
            {"chi", opt(r.euler_characteristic)},
            {"sigma", opt(r.signature)},
            {"sigma_identity", opt(r.signature_identity)}};
}

json report_to_json(const ValidationReport& r) {
    json issues = json::array();
    for (const auto& i : r.issues()) issues.push_back({{"code", i.code}, {"message", i.message}});
    return {{"valid", r.ok()}, {"issues", issues}};
}

json morse_function_to_json(const SlicedMorseFunction& f) {
    json events = json::array();
    for (const auto& e : f.events) {
        json ej{{"kind", to_string(e.kind)}, {"height", height_to_json(e.height)}};
        switch (e.kind) {
        case MorseEventKind::Birth: ej["out"] = e.out[0]; break;
        case MorseEventKind::Death: ej["in"] = e.in[0]; break;
        case MorseEventKind::Merge: ej["in"] = e.in; ej["out"] = e.out[0]; break;
        case MorseEventKind::Split: ej["in"] = e.in[0]; ej["out"] = e.out; break;
        }
        events.push_back(ej);
    }
    return {{"events", events}};
}

} // namespace cerf
