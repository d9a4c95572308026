#include "mixbiotic/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace mixbiotic {

namespace {

// Fixed three-decimal output through to_chars, independent of locale.
std::string num(double x) {
    if (std::abs(x) < 5e-4)
        x = 0.0;
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, 3);
    std::string s(buf, ptr);
    while (s.back() == '0')
        s.pop_back();
    if (s.back() == '.')
        s.pop_back();
    return s;
}

std::string escape(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

class SvgWriter {
public:
    SvgWriter(double width, double height) {
        out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
               num(width) + "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
               "\">\n<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
               "\" fill=\"white\"/>\n";
    }

    void rect(double x, double y, double w, double h, std::string_view fill, std::string_view stroke = "none") {
        out_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" + num(h) +
                "\" fill=\"" + std::string(fill) + "\" stroke=\"" + std::string(stroke) + "\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2, std::string_view stroke, double width = 1.0) {
        out_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" + num(y2) +
                "\" stroke=\"" + std::string(stroke) + "\" stroke-width=\"" + num(width) + "\"/>\n";
    }

    void text(double x, double y, std::string_view content, std::string_view anchor = "start", int size = 12) {
        out_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-family=\"sans-serif\" font-size=\"" +
                std::to_string(size) + "\" text-anchor=\"" + std::string(anchor) + "\">" + escape(content) +
                "</text>\n";
    }

    void circle(double cx, double cy, double r, std::string_view fill) {
        out_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" + num(r) + "\" fill=\"" +
                std::string(fill) + "\"/>\n";
    }

    void polyline(const std::vector<std::pair<double, double>>& pts, std::string_view stroke, bool closed,
                  std::string_view fill = "none", double opacity = 1.0) {
        std::string coords;
        for (const auto& [x, y] : pts) {
            if (!coords.empty())
                coords += ' ';
            coords += num(x) + "," + num(y);
        }
        out_ += std::string(closed ? "<polygon" : "<polyline") + " points=\"" + coords + "\" fill=\"" +
                std::string(fill) + "\" fill-opacity=\"" + num(opacity) + "\" stroke=\"" + std::string(stroke) +
                "\" stroke-width=\"1.5\"/>\n";
    }

    void path(const std::string& d, std::string_view stroke) {
        out_ += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + std::string(stroke) +
                "\" stroke-dasharray=\"4,3\"/>\n";
    }

    std::string finish() && { return std::move(out_) + "</svg>\n"; }

private:
    std::string out_;
};

std::string_view phase_color(Phase p) {
    switch (p) {
    case Phase::Nihilism: return "#bdbdbd";
    case Phase::Atomism: return "#4575b4";
    case Phase::Mixism: return "#1a9850";
    case Phase::Mobism: return "#d73027";
    }
    return "black";
}

double min_gap(std::set<double> values) {
    double gap = 1.0;
    for (auto it = values.begin(); it != values.end() && std::next(it) != values.end(); ++it)
        gap = std::min(gap, *std::next(it) - *it);
    return gap;
}

} // namespace

std::string render_phase_svg(const PhaseGrid& grid) {
    if (grid.cells.empty())
        throw std::invalid_argument("cannot render an empty phase grid");
    constexpr double margin = 60, plot = 440, legend = 130;
    std::set<double> gs, ds;
    for (const auto& c : grid.cells) {
        gs.insert(c.point.g);
        ds.insert(c.point.d);
    }
    const double cell = std::min(min_gap(gs), min_gap(ds));
    // Cells are centred on their point, so the axes extend half a cell past [0,1].
    const double span = 1.0 + cell;
    const double scale = plot / span;
    auto px = [&](double g) { return margin + (g + cell / 2) * scale; };
    auto py = [&](double d) { return margin + plot - (d + cell / 2) * scale; };

    SvgWriter svg(margin * 2 + plot + legend, margin * 2 + plot);
    for (const auto& c : grid.cells)
        svg.rect(px(c.point.g) - cell * scale / 2, py(c.point.d) - cell * scale / 2, cell * scale, cell * scale,
                 phase_color(c.phase), "white");
    svg.rect(margin, margin, plot, plot, "none", "black");
    for (int i = 0; i <= 10; ++i) {
        const double v = i / 10.0;
        svg.line(px(v), margin + plot, px(v), margin + plot + 5, "black");
        svg.text(px(v), margin + plot + 18, num(v), "middle", 10);
        svg.line(margin - 5, py(v), margin, py(v), "black");
        svg.text(margin - 8, py(v) + 4, num(v), "end", 10);
    }
    svg.text(margin + plot / 2, margin + plot + 40, "generation rate g", "middle");
    svg.text(18, margin + plot / 2, "d", "middle");
    svg.text(margin + plot / 2, margin - 20, "phase diagram (threshold " + num(grid.threshold) + ")", "middle", 14);

    const double lx = margin * 1.5 + plot;
    double ly = margin + 10;
    for (Phase p : {Phase::Nihilism, Phase::Atomism, Phase::Mixism, Phase::Mobism}) {
        svg.rect(lx, ly, 16, 16, phase_color(p), "black");
        svg.text(lx + 24, ly + 13, phase_name(p));
        ly += 26;
    }
    return std::move(svg).finish();
}

std::string render_trajectory_svg(const std::vector<PolarPoint>& points) {
    if (points.empty())
        throw std::invalid_argument("cannot render an empty trajectory");
    constexpr double margin = 50, plot = 420;
    double r_max = 0;
    for (const auto& p : points)
        r_max = std::max(r_max, p.r);
    if (r_max <= 0)
        r_max = 1;
    const double scale = plot / (r_max * 1.05);
    auto px = [&](double x) { return margin + x * scale; };
    auto py = [&](double y) { return margin + plot - y * scale; };

    SvgWriter svg(margin * 2 + plot, margin * 2 + plot);
    svg.line(px(0), py(0), px(r_max * 1.05), py(0), "black");
    svg.line(px(0), py(0), px(0), py(r_max * 1.05), "black");
    for (int k = 1; k <= 4; ++k) {
        const double radius = r_max * k / 4.0;
        svg.path("M " + num(px(radius)) + " " + num(py(0)) + " A " + num(radius * scale) + " " +
                     num(radius * scale) + " 0 0 0 " + num(px(0)) + " " + num(py(radius)),
                 "#999999");
        svg.text(px(radius), py(0) + 16, "r=" + num(radius), "middle", 10);
    }
    for (int deg : {15, 30, 45, 60, 75}) {
        const double a = deg * std::numbers::pi / 180.0;
        svg.line(px(0), py(0), px(r_max * std::cos(a)), py(r_max * std::sin(a)), "#dddddd", 0.8);
        svg.text(px(r_max * 1.02 * std::cos(a)), py(r_max * 1.02 * std::sin(a)), std::to_string(deg) + "\xC2\xB0",
                 "start", 10);
    }

    std::vector<std::pair<double, double>> pts;
    for (const auto& p : points)
        pts.emplace_back(px(p.r * std::cos(p.theta)), py(p.r * std::sin(p.theta)));
    if (pts.size() > 1)
        svg.polyline(pts, "#1f77b4", false);
    svg.circle(pts.front().first, pts.front().second, 3, "#2ca02c");
    svg.circle(pts.back().first, pts.back().second, 3, "#d62728");
    svg.text(margin + plot / 2, margin - 20, "trajectory (x = r cos theta, y = r sin theta)", "middle", 14);
    return std::move(svg).finish();
}

RadarInput radar_input(std::string label, const MeasureSetD& m) {
    return {std::move(label), {m.mu_I, m.var_I, m.mu_L, m.var_L, m.mu_LR, m.var_LR, m.mu_S, m.var_S, m.m_mix}};
}

std::vector<RadarInput> normalize_radar(const std::vector<RadarInput>& inputs) {
    std::array<double, 9> peak{};
    for (const auto& in : inputs)
        for (std::size_t a = 0; a < peak.size(); ++a)
            peak[a] = std::max(peak[a], in.values[a]);
    auto out = inputs;
    for (auto& in : out)
        for (std::size_t a = 0; a < peak.size(); ++a)
            in.values[a] = peak[a] > 0 ? in.values[a] / peak[a] : 0.0;
    return out;
}

std::string render_radar_svg(const std::vector<RadarInput>& normalized) {
    if (normalized.empty())
        throw std::invalid_argument("radar chart needs at least one input");
    static constexpr std::array<std::string_view, 8> palette{"#1b7837", "#7fbf7b", "#e66101", "#fdb863",
                                                             "#2166ac", "#92c5de", "#762a83", "#c2a5cf"};
    constexpr double size = 520, cx = 260, cy = 270, radius = 190;
    SvgWriter svg(size + 160, size);
    const auto axes = radar_axes.size();
    auto at = [&](std::size_t axis, double value) {
        const double a = std::numbers::pi / 2 - 2 * std::numbers::pi * static_cast<double>(axis) / axes;
        return std::pair{cx + radius * value * std::cos(a), cy - radius * value * std::sin(a)};
    };
    for (int ring = 1; ring <= 4; ++ring) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t a = 0; a < axes; ++a)
            pts.push_back(at(a, ring / 4.0));
        svg.polyline(pts, "#cccccc", true);
    }
    for (std::size_t a = 0; a < axes; ++a) {
        const auto [x, y] = at(a, 1.0);
        svg.line(cx, cy, x, y, "#cccccc");
        const auto [lx, ly] = at(a, 1.12);
        svg.text(lx, ly + 4, radar_axes[a], "middle", 11);
    }
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t a = 0; a < axes; ++a)
            pts.push_back(at(a, std::clamp(normalized[i].values[a], 0.0, 1.0)));
        const auto color = palette[i % palette.size()];
        svg.polyline(pts, color, true, color, 0.15);
        svg.rect(size, 40 + 22 * static_cast<double>(i), 14, 14, color, "black");
        svg.text(size + 20, 52 + 22 * static_cast<double>(i), normalized[i].label);
    }
    return std::move(svg).finish();
}

} // namespace mixbiotic
