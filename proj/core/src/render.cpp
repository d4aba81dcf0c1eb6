#include "cerf/render.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

namespace cerf {

namespace {

constexpr double kColumn = 60.0;
constexpr double kRow = 30.0;
constexpr double kMargin = 40.0;

std::string header(double width, double height) {
    return fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" "
                       "viewBox=\"0 0 {0:.0f} {1:.0f}\" font-family=\"monospace\" font-size=\"10\">\n"
                       "<rect x=\"0\" y=\"0\" width=\"{0:.0f}\" height=\"{1:.0f}\" fill=\"white\"/>\n",
                       width, height);
}

std::string axes(double width, double height) {
    return fmt::format("<g stroke=\"#888\" stroke-width=\"1\">"
                       "<line x1=\"{0:.1f}\" y1=\"{2:.1f}\" x2=\"{1:.1f}\" y2=\"{2:.1f}\"/>"
                       "<line x1=\"{0:.1f}\" y1=\"{3:.1f}\" x2=\"{0:.1f}\" y2=\"{2:.1f}\"/></g>\n",
                       kMargin, width - kMargin, height - kMargin, kMargin);
}

std::size_t strand_count(const CerfGraphic1& gr, const std::string& name) {
    const auto it = gr.functions.find(name);
    return it == gr.functions.end() ? 0 : it->second.events.size();
}

} // namespace

std::string render_svg(const CerfGraphic1& gr) {
    const std::size_t columns = std::max<std::size_t>(gr.segments.size(), 1);
    std::size_t strands = 2;
    for (const auto& s : gr.segments) strands = std::max({strands, strand_count(gr, s.start), strand_count(gr, s.end)});
    const double width = 2 * kMargin + kColumn * static_cast<double>(columns);
    const double height = 2 * kMargin + kRow * static_cast<double>(strands + 1);
    const double base = height - kMargin;

    std::string out = header(width, height);
    out += axes(width, height);
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\">genus {} {}</text>\n", kMargin, kMargin / 2, gr.genus,
                       gr.cyclic ? "circle" : "interval");
    for (std::size_t i = 0; i < gr.segments.size(); ++i) {
        const auto& s = gr.segments[i];
        const double x0 = kMargin + kColumn * static_cast<double>(i), x1 = x0 + kColumn, xm = (x0 + x1) / 2;
        const std::size_t n = std::max(strand_count(gr, s.start), strand_count(gr, s.end));
        int lo = -1, hi = -1;
        if (s.event && s.event->kind == Event1::Kind::Switch) {
            lo = std::max(1, std::min(s.event->p, s.event->q)) - 1;
            hi = lo + 1;
            if (static_cast<std::size_t>(hi) >= n) lo = hi = -1;
        }
        for (std::size_t k = 0; k < n; ++k) {
            const double y = base - kRow * static_cast<double>(k + 1);
            if (static_cast<int>(k) == lo || static_cast<int>(k) == hi) continue;
            out += fmt::format("<polyline fill=\"none\" stroke=\"black\" points=\"{:.1f},{:.1f} {:.1f},{:.1f}\"/>\n", x0, y,
                               x1, y);
        }
        if (!s.event) continue;
        const auto& e = *s.event;
        if (e.kind == Event1::Kind::Switch && lo >= 0) {
            const double ylo = base - kRow * (lo + 1), yhi = base - kRow * (hi + 1);
            const bool type1 = classify_interval(s) == IntervalType::Type1;
            const char* colour = type1 ? "#c00" : "black";
            out += fmt::format("<polyline class=\"crossing\" fill=\"none\" stroke=\"{4}\" points=\"{0:.1f},{1:.1f} "
                               "{2:.1f},{3:.1f}\"/>\n<polyline class=\"crossing\" fill=\"none\" stroke=\"{4}\" "
                               "points=\"{0:.1f},{3:.1f} {2:.1f},{1:.1f}\"/>\n",
                               x0, ylo, x1, yhi, colour);
            out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", xm, kMargin - 4,
                               type1 ? "T1" : "T0");
        } else if (e.kind != Event1::Kind::Switch) {
            const double y = base - kRow * static_cast<double>(n + 1) / 2;
            const double tip = e.kind == Event1::Kind::Birth ? x0 : x1;
            const double open = e.kind == Event1::Kind::Birth ? x1 : x0;
            out += fmt::format("<path class=\"cusp\" fill=\"none\" stroke=\"#06c\" d=\"M {0:.1f} {1:.1f} Q {2:.1f} "
                               "{3:.1f} {4:.1f} {5:.1f} Q {2:.1f} {3:.1f} {0:.1f} {6:.1f}\"/>\n",
                               open, y - kRow / 2, xm, y, tip, y, y + kRow / 2);
        }
    }
    if (gr.cyclic && !gr.segments.empty())
        out += fmt::format("<line stroke=\"#888\" stroke-dasharray=\"4 4\" x1=\"{0:.1f}\" y1=\"{1:.1f}\" x2=\"{0:.1f}\" "
                           "y2=\"{2:.1f}\"/>\n",
                           width - kMargin, kMargin, base);
    out += "</svg>\n";
    return out;
}

std::string render_svg(const PolygonDecomposition& d) {
    constexpr double radius = 80.0;
    const std::size_t count = std::max<std::size_t>(d.polygons.size(), 1);
    const double cell = 2 * radius + kMargin;
    const double width = kMargin + cell * static_cast<double>(count);
    const double height = 2 * kMargin + 2 * radius + 20;
    static const char* orderings[6] = {"p|qr", "pq|r", "q|pr", "qr|p", "r|qp", "rp|q"};

    std::string out = header(width, height);
    for (std::size_t p = 0; p < d.polygons.size(); ++p) {
        const auto& polygon = d.polygons[p];
        const std::size_t n = polygon.boundary.size();
        const double cx = kMargin + radius + cell * static_cast<double>(p), cy = kMargin + radius;
        auto vertex = [&](std::size_t i) {
            const double angle = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) - std::numbers::pi / 2;
            return std::pair{cx + radius * std::cos(angle), cy + radius * std::sin(angle)};
        };
        for (std::size_t i = 0; i < n; ++i) {
            const auto [x0, y0] = vertex(i);
            const auto [x1, y1] = vertex((i + 1) % n);
            const bool type1 = classify_interval(polygon.boundary[i]) == IntervalType::Type1;
            out += fmt::format("<line class=\"edge\" stroke=\"{}\" stroke-width=\"{}\" x1=\"{:.1f}\" y1=\"{:.1f}\" "
                               "x2=\"{:.1f}\" y2=\"{:.1f}\"/>\n",
                               type1 ? "#c00" : "black", type1 ? 3 : 1, x0, y0, x1, y1);
            if (n == 6 && polygon.center && polygon.center->kind == Event2::Kind::TripleSwitch) {
                const auto [mx, my] = std::pair{(x0 + x1) / 2, (y0 + y1) / 2};
                out += fmt::format("<text class=\"sector\" x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                                   cx + 1.2 * (mx - cx), cy + 1.2 * (my - cy) + 3, orderings[i]);
            }
        }
        std::string label = polygon.center ? to_string(polygon.center->kind) : "none";
        try {
            label += " / " + classify_polygon(polygon).to_string();
        } catch (const Error& e) {
            label += " / " + e.code();
        }
        out += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"3\"/>\n<text class=\"center\" x=\"{:.1f}\" "
                           "y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                           cx, cy, cx, cy + 14, label);
    }
    out += "</svg>\n";
    return out;
}

} // namespace cerf
