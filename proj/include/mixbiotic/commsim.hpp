#ifndef MIXBIOTIC_COMMSIM_HPP
#define MIXBIOTIC_COMMSIM_HPP

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "mixbiotic/graph.hpp"
#include "mixbiotic/rng.hpp"

namespace mixbiotic {

/// Parameters of one communication run.
struct SimConfig {
    double g = 0.4;     ///< generation rate
    double d = 0.3;     ///< disappearance rate
    double u = 1.0;     ///< information unit
    int t_max = 100;
    int n_0 = 10;       ///< initially informed vertices
    std::uint64_t seed = 0;
};

void validate(const SimConfig& cfg);

/// Information held by each vertex. Entries are non-negative multiples of u;
/// the informed set is the support of q and is never stored separately.
using InfoState = Eigen::VectorXd;

struct StepReport {
    int n_informed_before = 0;
    int n_senders = 0;
    int n_receivers = 0;
    int n_erased = 0;

    bool operator==(const StepReport&) const = default;
};

struct SimTrace {
    std::vector<InfoState> states; ///< Q(0) .. Q(t_max)
    std::vector<StepReport> reports;
};

/// Round half away from zero to a non-negative count.
int round_count(double x);

/// Ascending indices of the non-zero entries.
std::vector<int> support(const InfoState& q);

/// Seeds n_0 vertices, chosen uniformly without replacement, with u.
InfoState init_state(const SimConfig& cfg, int n, Rng& rng);

/// One generate/send/erase cycle.
///
/// Random draws, in order: senders (Round[g * n_informed] from the support,
/// ascending order pool), receivers (Round[g * n] from 0..n-1), erased
/// (Round[d * n_informed_after] from the post-send support). Each
/// sender/receiver pair joined by an edge adds u to the receiver; senders keep
/// what they have, erased vertices drop to 0.
StepReport sim_step(InfoState& state, const Graph& graph, const SimConfig& cfg, Rng& rng);

/// init_state followed by t_max steps, all drawn from one Rng(cfg.seed).
SimTrace run_sim(const SimConfig& cfg, const Graph& graph);

} // namespace mixbiotic

#endif // MIXBIOTIC_COMMSIM_HPP
