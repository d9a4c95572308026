#include <doctest.h>

#include <numbers>

#include "mixbiotic/svg.hpp"

using namespace mixbiotic;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1))
        ++n;
    return n;
}

PhaseGrid tiny_grid() {
    PhaseGrid grid;
    GridCell c;
    c.point = {0.4, 0.3};
    c.phase = Phase::Mixism;
    grid.cells.push_back(c);
    return grid;
}

} // namespace

TEST_CASE("phase diagram") {
    const auto svg = render_phase_svg(tiny_grid());
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    for (auto p : {Phase::Nihilism, Phase::Atomism, Phase::Mixism, Phase::Mobism})
        CHECK(svg.find(std::string(phase_name(p))) != std::string::npos);
    CHECK(svg == render_phase_svg(tiny_grid()));
    CHECK_THROWS(render_phase_svg(PhaseGrid{}));
}

TEST_CASE("trajectory plot") {
    const std::vector<PolarPoint> pts{{2.0, 0.0}, {1.0, std::numbers::pi / 3}, {0.0, 0.0}};
    const auto svg = render_trajectory_svg(pts);
    CHECK(count(svg, "<polyline") == 1);
    CHECK(svg == render_trajectory_svg(pts));
    CHECK_THROWS(render_trajectory_svg({}));
}

TEST_CASE("radar normalization and rendering") {
    MeasureSetD a, b;
    a.mu_I = 2;
    a.mu_S = 0.5;
    b.mu_I = 1;
    b.mu_S = 1;
    b.var_S = 0.2;
    fill_composites(a);
    fill_composites(b);
    const auto norm = normalize_radar({radar_input("A", a), radar_input("B", b)});
    REQUIRE(norm.size() == 2);
    CHECK(norm[0].values[0] == 1.0);
    CHECK(norm[1].values[0] == 0.5);
    CHECK(norm[0].values[6] == 0.5);
    CHECK(norm[1].values[6] == 1.0);
    CHECK(norm[0].values[1] == 0.0); // all-zero axis
    CHECK(norm[1].values[8] == 1.0);
    for (const auto& r : norm)
        for (double v : r.values) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    const auto single = normalize_radar({radar_input("only", b)});
    for (std::size_t k = 0; k < 9; ++k)
        CHECK(single[0].values[k] == (radar_input("only", b).values[k] > 0 ? 1.0 : 0.0));

    const auto svg = render_radar_svg(norm);
    CHECK(count(svg, "<polygon") >= 2);
    for (auto axis : radar_axes)
        CHECK(svg.find(std::string(axis)) != std::string::npos);
    CHECK(svg.find(">A<") != std::string::npos);
    CHECK(svg == render_radar_svg(norm));
    CHECK_THROWS(render_radar_svg({}));
}
