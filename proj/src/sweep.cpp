#include "mixbiotic/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

namespace mixbiotic {

MeshSpec MeshSpec::default_mesh() {
    MeshSpec spec;
    for (int k = 1; k <= 19; k += 2)
        spec.extra_points.push_back({k / 20.0, k / 20.0});
    for (int k = 1; k <= 9; ++k)
        spec.extra_points.push_back({(2 * k + 1) / 20.0, (2 * k - 1) / 20.0});
    return spec;
}

MeshSpec MeshSpec::grid_only(double step) {
    MeshSpec spec;
    spec.grid_step = step;
    return spec;
}

std::vector<MeshPoint> build_mesh(const MeshSpec& spec) {
    std::vector<MeshPoint> points;
    if (spec.include_grid) {
        if (!(spec.grid_step > 0.0 && spec.grid_step <= 1.0))
            throw std::invalid_argument("grid step must lie in (0,1]");
        const double divisions_real = 1.0 / spec.grid_step;
        const auto divisions = static_cast<int>(std::lround(divisions_real));
        if (std::abs(divisions_real - divisions) > 1e-9)
            throw std::invalid_argument("grid step must divide 1 evenly");
        // i / divisions rather than i * step, so 0.3 is the nearest double to 0.3.
        for (int i = 0; i <= divisions; ++i)
            for (int j = 0; j <= divisions; ++j)
                points.push_back({static_cast<double>(i) / divisions, static_cast<double>(j) / divisions});
    }
    for (const auto& p : spec.extra_points) {
        if (!(p.g >= 0.0 && p.g <= 1.0 && p.d >= 0.0 && p.d <= 1.0))
            throw std::invalid_argument("mesh point (" + std::to_string(p.g) + "," + std::to_string(p.d) +
                                        ") lies outside [0,1]^2");
        points.push_back(p);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

std::string_view phase_name(Phase p) {
    switch (p) {
    case Phase::Nihilism: return "Nihilism";
    case Phase::Atomism: return "Atomism";
    case Phase::Mixism: return "Mixism";
    case Phase::Mobism: return "Mobism";
    }
    return "?";
}

Phase parse_phase(std::string_view name) {
    for (Phase p : {Phase::Nihilism, Phase::Atomism, Phase::Mixism, Phase::Mobism})
        if (phase_name(p) == name)
            return p;
    throw std::invalid_argument("unknown phase '" + std::string(name) + "'");
}

void validate(const SweepConfig& cfg) {
    if (cfg.trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (!(cfg.nihilism_threshold > 0.0 && cfg.nihilism_threshold < 1.0))
        throw std::invalid_argument("nihilism threshold must lie in (0,1)");
    std::visit([](const auto& p) { validate(p); }, cfg.network);
    SimConfig probe{.g = 0, .d = 0, .u = cfg.u, .t_max = cfg.t_max, .n_0 = cfg.n_0, .seed = 0};
    validate(probe);
    const int n = std::visit([](const auto& p) { return p.n; }, cfg.network);
    if (cfg.n_0 > n)
        throw std::invalid_argument("n_0 exceeds the network size");
    if (cfg.t_max < 1)
        throw std::invalid_argument("sweep needs t_max >= 1 to produce a transition");
}

TrialSeeds trial_seeds(std::uint64_t base_seed, std::size_t point_index, std::size_t trial_index) {
    const auto trial = derive_seed(base_seed, point_index, trial_index);
    return {derive_seed(trial, 0), derive_seed(trial, 1)};
}

namespace {

std::uint64_t fixed_network_seed(std::uint64_t base_seed) { return derive_seed(base_seed, ~std::uint64_t{0}); }

MeasureSetD measure_run(const SweepConfig& cfg, MeshPoint point, const Graph& graph, std::uint64_t sim_seed) {
    const SimConfig sim{.g = point.g, .d = point.d, .u = cfg.u, .t_max = cfg.t_max, .n_0 = cfg.n_0, .seed = sim_seed};
    const auto trace = run_sim(sim, graph);
    return series_measures(trace.states, cfg.u);
}

} // namespace

MeasureSetD run_trial(const SweepConfig& cfg, MeshPoint point, std::size_t point_index, std::size_t trial_index) {
    const auto seeds = trial_seeds(cfg.base_seed, point_index, trial_index);
    const Graph graph = generate(cfg.network, cfg.fixed_network ? fixed_network_seed(cfg.base_seed) : seeds.network);
    return measure_run(cfg, point, graph, seeds.simulation);
}

MeasureSetD average(std::span<const MeasureSetD> sets) {
    if (sets.empty())
        throw std::invalid_argument("average of no measure sets");
    MeasureSetD m;
    for (const auto& s : sets) {
        m.mu_I += s.mu_I;
        m.var_I += s.var_I;
        m.mu_L += s.mu_L;
        m.var_L += s.var_L;
        m.mu_LR += s.mu_LR;
        m.var_LR += s.var_LR;
        m.mu_S += s.mu_S;
        m.var_S += s.var_S;
        m.m_atom += s.m_atom;
        m.m_mix += s.m_mix;
        m.m_mob += s.m_mob;
        m.delta_count += s.delta_count;
    }
    const auto k = static_cast<double>(sets.size());
    for (double* field : {&m.mu_I, &m.var_I, &m.mu_L, &m.var_L, &m.mu_LR, &m.var_LR, &m.mu_S, &m.var_S, &m.m_atom,
                          &m.m_mix, &m.m_mob})
        *field /= k;
    m.delta_count /= static_cast<long>(sets.size());
    return m;
}

PhaseGrid run_sweep(const SweepConfig& cfg, std::span<const MeshPoint> mesh) {
    validate(cfg);
    const auto trials = static_cast<std::size_t>(cfg.trials);
    const std::size_t tasks = mesh.size() * trials;
    std::vector<MeasureSetD> results(tasks);

    std::optional<Graph> shared;
    if (cfg.fixed_network)
        shared = generate(cfg.network, fixed_network_seed(cfg.base_seed));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t task = next++; task < tasks; task = next++) {
            const std::size_t point = task / trials;
            const std::size_t trial = task % trials;
            const auto seeds = trial_seeds(cfg.base_seed, point, trial);
            if (shared)
                results[task] = measure_run(cfg, mesh[point], *shared, seeds.simulation);
            else
                results[task] = measure_run(cfg, mesh[point], generate(cfg.network, seeds.network), seeds.simulation);
        }
    };

    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks, 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(worker);
    }

    PhaseGrid grid;
    grid.cells.reserve(mesh.size());
    for (std::size_t p = 0; p < mesh.size(); ++p) {
        GridCell cell;
        cell.point = mesh[p];
        cell.measures = average(std::span<const MeasureSetD>(results).subspan(p * trials, trials));
        grid.cells.push_back(cell);
    }
    normalize(grid);
    classify_phases(grid, cfg.nihilism_threshold);
    return grid;
}

std::vector<double> normalize_by_max(std::span<const double> values) {
    double peak = 0.0;
    for (double v : values)
        peak = std::max(peak, v);
    std::vector<double> out(values.begin(), values.end());
    for (double& v : out)
        v = peak > 0.0 ? v / peak : 0.0;
    return out;
}

void normalize(PhaseGrid& grid) {
    std::vector<double> atom, mix, mob;
    for (const auto& c : grid.cells) {
        atom.push_back(c.measures.m_atom);
        mix.push_back(c.measures.m_mix);
        mob.push_back(c.measures.m_mob);
    }
    const auto na = normalize_by_max(atom), nx = normalize_by_max(mix), nb = normalize_by_max(mob);
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        grid.cells[i].norm_atom = na[i];
        grid.cells[i].norm_mix = nx[i];
        grid.cells[i].norm_mob = nb[i];
    }
}

Phase classify(double norm_atom, double norm_mix, double norm_mob, double threshold) {
    if (norm_atom < threshold && norm_mix < threshold && norm_mob < threshold)
        return Phase::Nihilism;
    if (norm_mix >= norm_atom && norm_mix >= norm_mob)
        return Phase::Mixism;
    if (norm_atom >= norm_mob)
        return Phase::Atomism;
    return Phase::Mobism;
}

void classify_phases(PhaseGrid& grid, double threshold) {
    grid.threshold = threshold;
    for (auto& c : grid.cells)
        c.phase = classify(c.norm_atom, c.norm_mix, c.norm_mob, threshold);
}

} // namespace mixbiotic
