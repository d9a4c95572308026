#include "mixbiotic/commsim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mixbiotic {

void validate(const SimConfig& cfg) {
    if (!(cfg.g >= 0.0 && cfg.g <= 1.0))
        throw std::invalid_argument("generation rate g must lie in [0,1]");
    if (!(cfg.d >= 0.0 && cfg.d <= 1.0))
        throw std::invalid_argument("disappearance rate d must lie in [0,1]");
    if (!(cfg.u > 0.0) || !std::isfinite(cfg.u))
        throw std::invalid_argument("information unit u must be positive");
    if (cfg.t_max < 0)
        throw std::invalid_argument("t_max must be non-negative");
    if (cfg.n_0 < 0)
        throw std::invalid_argument("n_0 must be non-negative");
}

int round_count(double x) { return static_cast<int>(std::round(x)); }

std::vector<int> support(const InfoState& q) {
    std::vector<int> out;
    for (Eigen::Index i = 0; i < q.size(); ++i)
        if (q[i] != 0.0)
            out.push_back(static_cast<int>(i));
    return out;
}

InfoState init_state(const SimConfig& cfg, int n, Rng& rng) {
    if (cfg.n_0 > n)
        throw std::invalid_argument("n_0 (" + std::to_string(cfg.n_0) + ") exceeds vertex count (" +
                                    std::to_string(n) + ")");
    InfoState q = InfoState::Zero(n);
    for (int v : sample_range(n, static_cast<std::size_t>(cfg.n_0), rng))
        q[v] = cfg.u;
    return q;
}

StepReport sim_step(InfoState& state, const Graph& graph, const SimConfig& cfg, Rng& rng) {
    const int n = graph.vertex_count();
    if (state.size() != n)
        throw std::invalid_argument("state dimension " + std::to_string(state.size()) +
                                    " does not match vertex count " + std::to_string(n));
    StepReport report;

    const auto informed = support(state);
    report.n_informed_before = static_cast<int>(informed.size());
    report.n_senders = std::min(round_count(cfg.g * report.n_informed_before), report.n_informed_before);
    report.n_receivers = std::min(round_count(cfg.g * n), n);

    const auto senders = sample_without_replacement(informed, static_cast<std::size_t>(report.n_senders), rng);
    const auto receivers = sample_range(n, static_cast<std::size_t>(report.n_receivers), rng);

    std::vector<char> is_sender(static_cast<std::size_t>(n), 0);
    for (int s : senders)
        is_sender[static_cast<std::size_t>(s)] = 1;
    // Delivery counts are taken against the pre-step state, so apply them afterwards.
    std::vector<std::pair<int, int>> deliveries;
    for (int r : receivers) {
        int count = 0;
        for (int w : graph.neighbors(r))
            count += is_sender[static_cast<std::size_t>(w)];
        if (count > 0)
            deliveries.emplace_back(r, count);
    }
    for (const auto& [r, count] : deliveries)
        state[r] += cfg.u * count;

    const auto after = support(state);
    const int n_after = static_cast<int>(after.size());
    report.n_erased = std::min(round_count(cfg.d * n_after), n_after);
    for (int v : sample_without_replacement(after, static_cast<std::size_t>(report.n_erased), rng))
        state[v] = 0.0;
    return report;
}

SimTrace run_sim(const SimConfig& cfg, const Graph& graph) {
    validate(cfg);
    Rng rng(cfg.seed);
    SimTrace trace;
    trace.states.reserve(static_cast<std::size_t>(cfg.t_max) + 1);
    trace.reports.reserve(static_cast<std::size_t>(cfg.t_max));
    InfoState q = init_state(cfg, graph.vertex_count(), rng);
    trace.states.push_back(q);
    for (int t = 0; t < cfg.t_max; ++t) {
        trace.reports.push_back(sim_step(q, graph, cfg, rng));
        trace.states.push_back(q);
    }
    return trace;
}

} // namespace mixbiotic
