#ifndef MIXBIOTIC_SVG_HPP
#define MIXBIOTIC_SVG_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "mixbiotic/measures.hpp"
#include "mixbiotic/sweep.hpp"

namespace mixbiotic {

/// Phase diagram: one cell per mesh point, g across, d up, with a legend.
std::string render_phase_svg(const PhaseGrid& grid);

/// Polar trajectory drawn in Cartesian form (r cos theta, r sin theta),
/// joined in time order, with reference arcs.
std::string render_trajectory_svg(const std::vector<PolarPoint>& points);

inline constexpr std::array<std::string_view, 9> radar_axes{"mu_I",  "var_I", "mu_L",  "var_L", "mu_LR",
                                                             "var_LR", "mu_S", "var_S", "m_mix"};

struct RadarInput {
    std::string label;
    std::array<double, 9> values{}; ///< in radar_axes order
};

RadarInput radar_input(std::string label, const MeasureSetD& m);

/// Per-axis division by the maximum over all inputs; an all-zero axis stays 0.
std::vector<RadarInput> normalize_radar(const std::vector<RadarInput>& inputs);

/// Expects already-normalized inputs.
std::string render_radar_svg(const std::vector<RadarInput>& normalized);

} // namespace mixbiotic

#endif // MIXBIOTIC_SVG_HPP
