#ifndef MIXBIOTIC_SWEEP_HPP
#define MIXBIOTIC_SWEEP_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mixbiotic/commsim.hpp"
#include "mixbiotic/measures.hpp"
#include "mixbiotic/netgen.hpp"

namespace mixbiotic {

struct MeshPoint {
    double g = 0;
    double d = 0;
    auto operator<=>(const MeshPoint&) const = default;
};

/// Regular grid over [0,1]^2 plus explicit extra points.
struct MeshSpec {
    bool include_grid = true;
    double grid_step = 0.1; ///< 1/grid_step must be (close to) an integer
    std::vector<MeshPoint> extra_points;

    /// The 121-point grid plus 19 near-diagonal points: (k/20, k/20) for odd k,
    /// and ((2k+1)/20, (2k-1)/20) for k = 1..9.
    static MeshSpec default_mesh();
    static MeshSpec grid_only(double step = 0.1);
};

/// Grid and extras merged, deduplicated, sorted by (g, d).
std::vector<MeshPoint> build_mesh(const MeshSpec& spec);

enum class Phase { Nihilism, Atomism, Mixism, Mobism };

std::string_view phase_name(Phase p);
Phase parse_phase(std::string_view name);

struct GridCell {
    MeshPoint point;
    MeasureSetD measures; ///< trial average
    double norm_atom = 0;
    double norm_mix = 0;
    double norm_mob = 0;
    Phase phase = Phase::Nihilism;
};

struct PhaseGrid {
    std::vector<GridCell> cells;
    double threshold = 0.05;
};

struct SweepConfig {
    NetworkSpec network = WsParams{};
    int trials = 100;
    double u = 1.0;
    int t_max = 100;
    int n_0 = 10;
    std::uint64_t base_seed = 0;
    double nihilism_threshold = 0.05;
    bool fixed_network = false; ///< one network, seeded derive_seed(base_seed, 2^64-1), for every trial
    unsigned threads = 0;       ///< 0 = hardware concurrency
};

void validate(const SweepConfig& cfg);

/// Seeds for one (point, trial) task. The trial seed is
/// derive_seed(base_seed, point_index, trial_index); the network and the
/// simulation draw from derive_seed(trial_seed, 0) and derive_seed(trial_seed, 1).
struct TrialSeeds {
    std::uint64_t network;
    std::uint64_t simulation;
};
TrialSeeds trial_seeds(std::uint64_t base_seed, std::size_t point_index, std::size_t trial_index);

/// Measures of a single (point, trial) task.
MeasureSetD run_trial(const SweepConfig& cfg, MeshPoint point, std::size_t point_index, std::size_t trial_index);

/// Component-wise mean, summed in index order.
MeasureSetD average(std::span<const MeasureSetD> sets);

/// Runs every (point, trial) task, possibly in parallel, averages per point in
/// trial order, then normalizes and labels.
PhaseGrid run_sweep(const SweepConfig& cfg, std::span<const MeshPoint> mesh);

/// Divides each value by the maximum; all-zero input stays zero.
std::vector<double> normalize_by_max(std::span<const double> values);

/// Fills norm_* from the grid-wide maxima of m_atom, m_mix, m_mob.
void normalize(PhaseGrid& grid);

/// Nihilism when all three normalized composites are below threshold,
/// otherwise the largest one; ties resolve Mixism, then Atomism, then Mobism.
Phase classify(double norm_atom, double norm_mix, double norm_mob, double threshold);
void classify_phases(PhaseGrid& grid, double threshold);

} // namespace mixbiotic

#endif // MIXBIOTIC_SWEEP_HPP
