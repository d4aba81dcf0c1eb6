#include "cerf/family_one.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace cerf {

ElementaryInterval reversed(const ElementaryInterval& ei) {
    ElementaryInterval out{ei.end, ei.start, ei.event};
    if (!out.event) return out;
    auto& e = *out.event;
    if (e.kind == Event1::Kind::Birth) e.kind = Event1::Kind::Death;
    else if (e.kind == Event1::Kind::Death) e.kind = Event1::Kind::Birth;
    if (e.surgery) std::swap(e.surgery->from, e.surgery->to);
    if (e.slide) e.slide->sign = -e.slide->sign;
    return out;
}

const char* to_string(IntervalType t) { return t == IntervalType::Type0 ? "type0" : "type1"; }

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error("MALFORMED_LOCALE", what); }

Integer sign_of(Integer x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// q with |a - q b| <= |b| / 2.
Integer balanced_quotient(Integer a, Integer b) {
    Integer q = a / b;
    Integer r = a - q * b;
    if (2 * std::abs(r) > std::abs(b)) q += sign_of(r) * sign_of(b);
    return q;
}

} // namespace

IntervalType classify_interval(const ElementaryInterval& ei) {
    if (!ei.event) return IntervalType::Type0;
    const Event1& e = *ei.event;
    if (e.kind != Event1::Kind::Switch) {
        if (e.neighborhood || e.surgery || e.slide) malformed("birth/death events carry no switch data");
        return IntervalType::Type0;
    }
    for (int idx : e.indices)
        if (idx < 0 || idx > 2) malformed("critical point index must be 0, 1 or 2");
    if (e.locale == SwitchLocale::DifferentComponents) {
        if (e.neighborhood || e.surgery || e.slide)
            malformed("switch on different level components has no shared neighbourhood");
        return IntervalType::Type0;
    }
    if (e.indices[0] != 1 || e.indices[1] != 1) malformed("same-component switch needs two index-1 points");
    if (!e.neighborhood) malformed("same-component switch needs its neighbourhood");
    if (e.neighborhood->vertices != 2) malformed("switch neighbourhood must have two vertices");
    const auto report = validate_ribbon(*e.neighborhood);
    if (!report.ok()) malformed(report.issues().front().message);
    const auto profile = surface_profile(*e.neighborhood);
    if (profile.genus == 0) {
        if (e.surgery) malformed("genus-0 switch does not change the handlebody");
        return IntervalType::Type0;
    }
    if (profile.genus != 1) malformed("switch neighbourhood of genus " + std::to_string(profile.genus));
    if (e.slide) malformed("genus-1 switch cannot carry a slide");
    if (!e.surgery) malformed("genus-1 switch needs the classes C-1 and C1");
    const auto& s = *e.surgery;
    if (s.from.size() != s.to.size() || s.from.size() % 2 != 0 || s.from.size() == 0)
        throw Error("DIMENSION_MISMATCH", "surgery classes have inconsistent lengths");
    const SymplecticLattice lattice(static_cast<int>(s.from.size() / 2));
    const Integer pairing = intersection_pairing(s.from, s.to, lattice);
    if (pairing != 1 && pairing != -1)
        throw Error("PAIRING_NOT_UNIT", "surgery classes meet algebraically " + std::to_string(pairing) + " times");
    return IntervalType::Type1;
}

namespace {

void require_valid(const CutSystem& cs, const SymplecticLattice& lattice) {
    const auto report = validate_cut_system(cs, lattice);
    if (!report.ok()) throw Error("INVALID_CUT_SYSTEM", report.issues().front().message);
}

// Rows of w applied to the curves of cs.
CutSystem recombine(const CutSystem& cs, const IntMatrix& w, const SymplecticLattice& lattice) {
    const IntMatrix m = w * cs.matrix(lattice.rank());
    CutSystem out;
    for (std::size_t r = 0; r < m.rows(); ++r) out.curves.emplace_back(m.row_vector(r));
    return out;
}

} // namespace

IntervalOutcome apply_interval_detailed(const CutSystem& cs, const ElementaryInterval& ei, const SymplecticLattice& lattice) {
    require_valid(cs, lattice);
    IntervalOutcome outcome;
    outcome.type = classify_interval(ei);
    if (outcome.type == IntervalType::Type0) {
        if (ei.event && ei.event->slide) {
            const auto& s = *ei.event->slide;
            outcome.system = slide(cs, s.target, s.source, s.sign, lattice);
        } else {
            outcome.system = cs;
        }
        return outcome;
    }

    const HomologyClass& x = ei.event->surgery->from;
    const HomologyClass& y = ei.event->surgery->to;
    if (x.size() != lattice.rank()) throw Error("DIMENSION_MISMATCH", "surgery classes do not match the lattice");
    const Integer eps = intersection_pairing(x, y, lattice);

    const auto lambda = coordinates_in(cs, x, lattice);
    if (!lambda) throw Error("NOT_IN_SPAN", "class " + x.label() + " does not bound a disk in the current handlebody");

    CutSystem work = cs;
    const std::size_t g = cs.size();
    std::optional<std::size_t> slot;
    for (std::size_t k = 0; k < g && !slot; ++k)
        if (same_up_to_sign(cs.curves[k], x)) slot = k;
    for (std::size_t k = 0; k < g && !slot; ++k)
        if (std::abs((*lambda)[k]) == 1) {
            slot = k;
            work.curves[k] = x;
        }
    if (!slot) {
        // Complete lambda to a unimodular change of basis whose first row is lambda.
        IntMatrix row(1, g);
        for (std::size_t k = 0; k < g; ++k) row(0, k) = (*lambda)[k];
        const auto snf = smith_normal_form(row);
        if (snf.D(0, 0) != 1) throw Error("NOT_IN_SPAN", "class " + x.label() + " is not primitive in the handlebody");
        IntMatrix w = unimodular_inverse(snf.V);
        if (snf.U(0, 0) == -1) w.negate_row(0);
        std::size_t target = 0;
        while ((*lambda)[target] == 0) ++target;
        w.swap_rows(0, target);
        work = recombine(cs, w, lattice);
        slot = target;
    }
    for (std::size_t j = 0; j < g; ++j) {
        if (j == *slot) continue;
        const Integer t = checked_mul(intersection_pairing(work.curves[j], y, lattice), eps);
        if (t != 0) work.curves[j] = work.curves[j] - t * x;
    }
    work.curves[*slot] = y;
    work.provenance.clear();
    const auto report = validate_cut_system(work, lattice);
    if (!report.ok()) throw Error("INVALID_SURGERY", "surgery result is not a cut system: " + report.issues().front().message);
    outcome.system = std::move(work);
    outcome.slot = slot;
    return outcome;
}

CutSystem apply_interval(const CutSystem& cs, const ElementaryInterval& ei, const SymplecticLattice& lattice) {
    return apply_interval_detailed(cs, ei, lattice).system;
}

ValidationReport validate_graphic1(const CerfGraphic1& gr) {
    ValidationReport report;
    if (gr.genus < 0) {
        report.add("INVALID_GENUS", "genus must be non-negative");
        return report;
    }
    const SymplecticLattice lattice(gr.genus);
    for (const auto& [name, f] : gr.functions) {
        const auto v = validate_sliced(f);
        report.merge(v.report, "function " + name + ": ");
        if (v.report.ok() && v.genus != gr.genus)
            report.add("GENUS_MISMATCH", "function " + name + " has genus " + std::to_string(v.genus));
    }
    for (std::size_t i = 0; i < gr.segments.size(); ++i) {
        const auto& s = gr.segments[i];
        const std::string at = "segment " + std::to_string(i) + ": ";
        for (const auto* name : {&s.start, &s.end})
            if (!gr.functions.contains(*name)) report.add("DANGLING_FUNCTION_ID", at + "unknown function '" + *name + "'");
        if (i + 1 < gr.segments.size() && s.end != gr.segments[i + 1].start)
            report.add("BROKEN_CHAIN", at + "ends at '" + s.end + "' but the next segment starts at '" +
                                           gr.segments[i + 1].start + "'");
        try {
            classify_interval(s);
            if (s.event && s.event->surgery && s.event->surgery->from.size() != lattice.rank())
                report.add("DIMENSION_MISMATCH", at + "surgery classes do not match genus");
            if (s.event && s.event->slide) {
                const auto& m = *s.event->slide;
                const auto g = static_cast<std::size_t>(gr.genus);
                if (m.target >= g || m.source >= g || m.target == m.source || (m.sign != 1 && m.sign != -1))
                    report.add("BAD_SLIDE", at + "slide indices or sign out of range");
            }
        } catch (const Error& e) {
            report.add(e.code(), at + e.message());
        }
    }
    if (gr.cyclic && !gr.segments.empty() && gr.segments.back().end != gr.segments.front().start)
        report.add("LOOP_NOT_CLOSED", "cyclic graphic does not return to its first function");
    if (gr.start_cut_system) report.merge(validate_cut_system(*gr.start_cut_system, lattice), "start_cut_system: ");
    if (gr.trisection) {
        if (gr.trisection->g != gr.genus) report.add("GENUS_MISMATCH", "trisection label genus differs from graphic genus");
        if (gr.trisection->k < 0 || gr.trisection->k > gr.trisection->g) report.add("K_EXCEEDS_G", "need g >= k >= 0");
    }
    return report;
}

namespace {

struct Fold {
    CutSystem final_system;
    std::vector<Surgery> surgeries;
    std::vector<LagrangianSublattice> visited; // span at start and after each Type1
};

Fold fold_segments(const CerfGraphic1& gr, const CutSystem& start_cs, const SymplecticLattice& lattice) {
    validate_graphic1(gr).throw_if_failed();
    require_valid(start_cs, lattice);
    Fold fold;
    fold.final_system = start_cs;
    fold.visited.push_back(lagrangian_span(start_cs, lattice));
    for (const auto& seg : gr.segments) {
        auto outcome = apply_interval_detailed(fold.final_system, seg, lattice);
        if (outcome.type == IntervalType::Type1) {
            fold.surgeries.push_back({*outcome.slot, seg.event->surgery->from, seg.event->surgery->to});
            fold.visited.push_back(lagrangian_span(outcome.system, lattice));
        }
        fold.final_system = std::move(outcome.system);
    }
    return fold;
}

} // namespace

FourManifoldRecord assemble_interval_family(const CerfGraphic1& gr, const CutSystem& start_cs) {
    if (gr.cyclic) throw Error("NOT_AN_INTERVAL_FAMILY", "graphic is cyclic; use the circle assembly");
    const SymplecticLattice lattice(gr.genus);
    auto fold = fold_segments(gr, start_cs, lattice);

    FourManifoldRecord record;
    record.genus = gr.genus;
    record.initial = start_cs;
    record.final_system = fold.final_system;
    record.surgeries = std::move(fold.surgeries);
    std::set<std::size_t> slots;
    for (const auto& s : record.surgeries) slots.insert(s.slot);
    if (slots.size() == record.surgeries.size()) record.k = gr.genus - static_cast<int>(record.surgeries.size());
    record.boundary_h1 = row_cokernel(pairing_matrix(record.initial, record.final_system, lattice));
    return record;
}

FourManifoldRecord assemble_circle_family(const CerfGraphic1& gr, const CutSystem& start_cs) {
    if (!gr.cyclic) throw Error("NOT_A_CIRCLE_FAMILY", "graphic is not cyclic");
    const SymplecticLattice lattice(gr.genus);
    auto fold = fold_segments(gr, start_cs, lattice);
    if (lagrangian_span(fold.final_system, lattice) != fold.visited.front())
        throw Error("LOOP_NOT_CLOSED", "the family does not return to its starting handlebody");

    FourManifoldRecord record;
    record.genus = gr.genus;
    record.cyclic = true;
    record.initial = start_cs;
    record.final_system = fold.final_system;
    record.surgeries = std::move(fold.surgeries);
    if (gr.trisection) record.k = gr.trisection->k;
    record.boundary_h1 = row_cokernel(pairing_matrix(record.initial, record.final_system, lattice));

    auto loop = fold.visited;
    if (loop.size() > 1) loop.pop_back(); // last span equals the first
    record.signature = loop_signature(loop, lattice);
    record.euler_characteristic = 2 - 2 * gr.genus + static_cast<int>(record.surgeries.size());

    IntMatrix stacked(loop.size() * static_cast<std::size_t>(gr.genus), lattice.rank());
    std::size_t r = 0;
    for (const auto& span : loop)
        for (std::size_t i = 0; i < span.basis().rows(); ++i, ++r)
            std::copy(span.basis().row(i).begin(), span.basis().row(i).end(), stacked.row(r).begin());
    record.h1 = row_cokernel(stacked);
    return record;
}

std::size_t slide_bound(std::size_t genus, Integer max_entry) {
    const auto m = static_cast<std::size_t>(std::max<Integer>(max_entry, 1));
    std::size_t log = 0;
    while ((std::size_t{1} << log) < m + 1) ++log;
    return m * genus * (genus * (log + 2) + 2) + 3 * genus;
}

CutSystem replay_slides(const CutSystem& cs, const std::vector<SlideMove>& moves, const SymplecticLattice& lattice) {
    CutSystem out = cs;
    for (const auto& m : moves) out = slide(out, m.target, m.source, m.sign, lattice);
    return out;
}

SlideSequence interpolate_cut_systems(const CutSystem& cs1, const CutSystem& cs2, const SymplecticLattice& lattice) {
    require_valid(cs1, lattice);
    require_valid(cs2, lattice);
    if (lagrangian_span(cs1, lattice) != lagrangian_span(cs2, lattice))
        throw Error("SPAN_MISMATCH", "the two cut systems bound different handlebodies");
    SlideSequence seq;
    const std::size_t g = cs1.size();
    if (g == 0) return seq;

    const IntMatrix c1 = cs1.matrix(lattice.rank());
    const IntMatrix c2 = cs2.matrix(lattice.rank());
    const auto snf = smith_normal_form(c1);
    IntMatrix embed(lattice.rank(), g);
    for (std::size_t i = 0; i < g; ++i) embed(i, i) = 1;
    const IntMatrix change = c2 * (snf.V * embed * snf.U); // cs2 = change * cs1
    if (change * c1 != c2) throw Error("INTERNAL", "change of basis does not reproduce the target");

    IntMatrix h = unimodular_inverse(change);
    std::vector<std::tuple<std::size_t, std::size_t, Integer>> ops;
    seq.max_entry = h.max_abs();
    auto op = [&](std::size_t target, std::size_t source, Integer factor) {
        if (factor == 0) return;
        h.add_row_multiple(target, source, factor);
        ops.emplace_back(target, source, factor);
        seq.max_entry = std::max({seq.max_entry, h.max_abs(), std::abs(factor)});
    };

    for (std::size_t c = 0; c < g; ++c) {
        std::size_t pivot = g;
        for (;;) {
            pivot = g;
            for (std::size_t r = c; r < g; ++r)
                if (h(r, c) != 0 && (pivot == g || std::abs(h(r, c)) < std::abs(h(pivot, c)))) pivot = r;
            if (pivot == g) throw Error("INTERNAL", "change of basis is singular");
            bool clean = true;
            for (std::size_t r = c; r < g; ++r) {
                if (r == pivot || h(r, c) == 0) continue;
                op(r, pivot, -balanced_quotient(h(r, c), h(pivot, c)));
                if (h(r, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pivot != c) {
            op(c, pivot, 1);
            op(pivot, c, -1);
        }
        if (std::abs(h(c, c)) != 1) throw Error("INTERNAL", "change of basis is not unimodular");
    }
    for (std::size_t c = g; c-- > 0;)
        for (std::size_t r = 0; r < c; ++r)
            if (h(r, c) != 0) op(r, c, -h(r, c) * h(c, c));
    // h is now diagonal with entries +-1. Two -1s cancel through a half turn
    // (x, y) -> (-y, x) applied twice; an odd one out stays a curve reversal.
    std::vector<std::size_t> negative;
    for (std::size_t c = 0; c < g; ++c)
        if (h(c, c) == -1) negative.push_back(c);
    for (std::size_t k = 0; k + 1 < negative.size(); k += 2)
        for (int turn = 0; turn < 2; ++turn) {
            op(negative[k], negative[k + 1], -1);
            op(negative[k + 1], negative[k], 1);
            op(negative[k], negative[k + 1], -1);
        }

    for (const auto& [target, source, factor] : ops)
        for (Integer n = 0; n < std::abs(factor); ++n)
            seq.moves.push_back({target, source, static_cast<int>(sign_of(factor))});
    seq.bound = slide_bound(g, seq.max_entry);
    if (seq.moves.size() > seq.bound) throw Error("INTERNAL", "slide sequence exceeds its bound");
    const auto reached = replay_slides(cs1, seq.moves, lattice);
    if (!equal_up_to_signs(reached, cs2) || (negative.size() % 2 == 0 && reached.curves != cs2.curves))
        throw Error("INTERNAL", "slide replay does not reach the target");
    return seq;
}

const std::vector<CensusEntry>& figure1_census() {
    static const std::vector<CensusEntry> census = ribbon_census(2);
    return census;
}

namespace {

const RibbonNeighborhood& first_of_genus(int genus) {
    for (const auto& e : figure1_census())
        if (e.profile.genus == genus) return e.neighborhood;
    throw Error("INTERNAL", "census has no entry of genus " + std::to_string(genus));
}

std::string node(const std::string& prefix, std::size_t i) { return prefix + std::to_string(i); }

ElementaryInterval slide_segment(const SlideMove& m, const std::string& prefix, std::size_t& counter) {
    Event1 e;
    e.p = static_cast<int>(m.target) + 1;
    e.q = static_cast<int>(m.source) + 1;
    e.locale = SwitchLocale::SameComponent;
    e.neighborhood = genus0_switch_neighborhood();
    e.slide = m;
    ElementaryInterval ei{node(prefix, counter), node(prefix, counter + 1), e};
    ++counter;
    return ei;
}

} // namespace

const RibbonNeighborhood& genus0_switch_neighborhood() { return first_of_genus(0); }
const RibbonNeighborhood& genus1_switch_neighborhood() { return first_of_genus(1); }

std::vector<RibbonNeighborhood> enumerate_switch_neighborhoods() {
    std::vector<RibbonNeighborhood> out;
    for (const auto& e : figure1_census()) out.push_back(e.neighborhood);
    return out;
}

std::vector<ElementaryInterval> handlebody_path(CutSystem& current, const CutSystem& to,
                                                const SymplecticLattice& lattice, const std::string& name_prefix,
                                                std::size_t& counter) {
    require_valid(current, lattice);
    require_valid(to, lattice);
    std::vector<ElementaryInterval> out;
    const std::size_t g = current.size();
    if (g == 0) return out;

    const auto snf = smith_normal_form(pairing_matrix(current, to, lattice));
    const auto factors = snf.invariant_factors();
    for (Integer d : factors)
        if (d != 1) throw Error("NOT_DUAL", "handlebodies are not related by unit surgeries (invariant factor " +
                                                std::to_string(d) + ")");
    const std::size_t rank = factors.size();
    const IntMatrix a = snf.U * current.matrix(lattice.rank());
    const IntMatrix b = snf.V.transpose() * to.matrix(lattice.rank());

    // Put each new row back where the old curve sat when it is one of them.
    std::vector<std::optional<std::size_t>> pos(g);
    std::vector<char> taken(g, 0);
    std::vector<Integer> flip(g, 1);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g && !pos[i]; ++j) {
            if (taken[j]) continue;
            const HomologyClass row(a.row_vector(i));
            if (same_up_to_sign(row, current.curves[j])) {
                pos[i] = j;
                taken[j] = 1;
                flip[i] = row == current.curves[j] ? 1 : -1;
            }
        }
    for (std::size_t i = 0, j = 0; i < g; ++i) {
        if (pos[i]) continue;
        while (taken[j]) ++j;
        pos[i] = j;
        taken[j] = 1;
    }
    CutSystem arranged;
    arranged.curves.resize(g);
    std::vector<std::optional<HomologyClass>> dual(g);
    for (std::size_t i = 0; i < g; ++i) {
        arranged.curves[*pos[i]] = flip[i] * HomologyClass(a.row_vector(i));
        if (i < rank) dual[*pos[i]] = flip[i] * HomologyClass(b.row_vector(i));
    }

    auto emit_slides = [&](const CutSystem& target) {
        const auto seq = interpolate_cut_systems(current, target, lattice);
        for (const auto& m : seq.moves) {
            out.push_back(slide_segment(m, name_prefix, counter));
            current = slide(current, m.target, m.source, m.sign, lattice);
        }
    };

    emit_slides(arranged);
    for (std::size_t s = 0; s < g; ++s) {
        if (!dual[s]) continue;
        const HomologyClass x = current.curves[s];
        HomologyClass y = *dual[s];
        const Integer pairing = intersection_pairing(x, y, lattice);
        if (pairing == -1) y = -y;
        else if (pairing != 1) throw Error("INTERNAL", "dual pair does not meet once");
        Event1 e;
        e.p = static_cast<int>(s) + 1;
        e.q = static_cast<int>(g + s) + 1;
        e.locale = SwitchLocale::SameComponent;
        e.neighborhood = genus1_switch_neighborhood();
        e.surgery = SurgeryPair{x, y};
        ElementaryInterval ei{node(name_prefix, counter), node(name_prefix, counter + 1), e};
        ++counter;
        current = apply_interval(current, ei, lattice);
        out.push_back(std::move(ei));
    }
    emit_slides(to);
    return out;
}

namespace {

void fill_functions(CerfGraphic1& gr) {
    const auto f = stacked_function(gr.genus);
    for (const auto& s : gr.segments) {
        gr.functions[s.start] = f;
        gr.functions[s.end] = f;
    }
}

} // namespace

CerfGraphic1 handlebody_path_family(const CutSystem& alpha, const CutSystem& beta, const SymplecticLattice& lattice) {
    CerfGraphic1 gr;
    gr.genus = lattice.genus();
    gr.start_cut_system = alpha;
    CutSystem current = alpha;
    std::size_t counter = 0;
    gr.segments = handlebody_path(current, beta, lattice, "n", counter);
    fill_functions(gr);
    return gr;
}

CerfGraphic1 standard_family_from_trisection(const TrisectionDiagram& t) {
    const auto report = validate_trisection(t);
    if (!report.ok()) throw Error("INVALID_TRISECTION", report.issues().front().message);
    const SymplecticLattice lattice(t.g);
    CerfGraphic1 gr;
    gr.genus = t.g;
    gr.cyclic = true;
    gr.start_cut_system = t.alpha;
    gr.trisection = TrisectionLabel{t.g, t.k};
    CutSystem current = t.alpha;
    std::size_t counter = 0;
    for (const CutSystem* next : {&t.beta, &t.gamma, &t.alpha}) {
        auto block = handlebody_path(current, *next, lattice, "n", counter);
        gr.segments.insert(gr.segments.end(), block.begin(), block.end());
    }
    if (!gr.segments.empty()) gr.segments.back().end = gr.segments.front().start;
    if (lagrangian_span(current, lattice) != lagrangian_span(t.alpha, lattice))
        throw Error("INTERNAL", "compiled trisection family does not close up");
    fill_functions(gr);
    return gr;
}

CerfGraphic1 trisection_sector_family(const TrisectionDiagram& t, int sector) {
    const auto report = validate_trisection(t);
    if (!report.ok()) throw Error("INVALID_TRISECTION", report.issues().front().message);
    const SymplecticLattice lattice(t.g);
    switch (sector) {
    case 1: return handlebody_path_family(t.alpha, t.beta, lattice);
    case 2: return handlebody_path_family(t.beta, t.gamma, lattice);
    case 3: return handlebody_path_family(t.gamma, t.alpha, lattice);
    default: throw Error("BAD_SECTOR", "sector must be 1, 2 or 3");
    }
}

std::pair<CutSystem, CutSystem> standard_heegaard_pair(int g, int k) {
    if (k < 0 || k > g) throw Error("K_EXCEEDS_G", "need g >= k >= 0");
    const SymplecticLattice lattice(g);
    CutSystem alpha, beta;
    for (int i = 0; i < g; ++i) {
        alpha.curves.push_back(lattice.a(i));
        beta.curves.push_back(i < k ? lattice.a(i) : lattice.b(i));
    }
    return {alpha, beta};
}

} // namespace cerf
