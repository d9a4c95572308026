#ifndef MIXBIOTIC_MEASURES_HPP
#define MIXBIOTIC_MEASURES_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace mixbiotic {

/// Change between two consecutive information vectors.
template <typename Scalar>
struct DeltaMeasures {
    Scalar info_change = 0; ///< |sum(next) - sum(prev)| / (n u)
    Scalar euclid = 0;      ///< ||next - prev|| / (sqrt(n) u)
    Scalar rel_change = 0;  ///< ||next - prev|| / ||next||, 0 when next is zero
    Scalar cos_sim = 0;     ///< <next, prev> / (||next|| ||prev||), 0 when either is zero
};

/// Means and unbiased variances of the per-transition measures, plus the
/// three phase composites.
template <typename Scalar>
struct MeasureSet {
    Scalar mu_I = 0, var_I = 0;
    Scalar mu_L = 0, var_L = 0;
    Scalar mu_LR = 0, var_LR = 0;
    Scalar mu_S = 0, var_S = 0;
    Scalar m_atom = 0; ///< var_LR
    Scalar m_mix = 0;  ///< mu_S * var_S
    Scalar m_mob = 0;  ///< mu_L
    long delta_count = 0;

    bool operator==(const MeasureSet&) const = default;
};

struct PolarPoint {
    double r = 0;
    double theta = 0;
};

namespace detail {

template <typename Scalar>
DeltaMeasures<Scalar> delta_from_moments(Scalar sum_prev, Scalar sum_next, Scalar diff_norm, Scalar sq_prev,
                                         Scalar sq_next, Scalar dot, Eigen::Index n, Scalar unit) {
    using std::abs;
    using std::sqrt;
    DeltaMeasures<Scalar> m;
    const auto dim = static_cast<Scalar>(n);
    m.info_change = abs(sum_next - sum_prev) / (dim * unit);
    m.euclid = diff_norm / (sqrt(dim) * unit);
    m.rel_change = sq_next > 0 ? diff_norm / sqrt(sq_next) : Scalar(0);
    // sqrt(x * x) == x in IEEE arithmetic, so identical vectors give exactly 1.
    if (sq_prev > 0 && sq_next > 0)
        m.cos_sim = std::clamp(dot / sqrt(sq_next * sq_prev), Scalar(0), Scalar(1));
    return m;
}

template <typename Scalar>
void check_unit(Scalar unit) {
    if (!(unit > 0))
        throw std::invalid_argument("information unit must be positive");
}

} // namespace detail

/// Pattern change between Q(t) and Q(t+1) for dense vectors.
template <typename PrevDerived, typename NextDerived>
DeltaMeasures<typename PrevDerived::Scalar> delta_measures(const Eigen::MatrixBase<PrevDerived>& prev,
                                                           const Eigen::MatrixBase<NextDerived>& next,
                                                           typename PrevDerived::Scalar unit) {
    using Scalar = typename PrevDerived::Scalar;
    if (prev.size() != next.size())
        throw std::invalid_argument("delta_measures: dimension mismatch");
    detail::check_unit(unit);
    return detail::delta_from_moments<Scalar>(prev.sum(), next.sum(), (next - prev).norm(), prev.squaredNorm(),
                                              next.squaredNorm(), next.dot(prev), prev.size(), unit);
}

/// Sparse counterpart; cost is proportional to the non-zeros of both vectors.
template <typename Scalar>
DeltaMeasures<Scalar> delta_measures(const Eigen::SparseVector<Scalar>& prev, const Eigen::SparseVector<Scalar>& next,
                                     Scalar unit) {
    if (prev.size() != next.size())
        throw std::invalid_argument("delta_measures: dimension mismatch");
    detail::check_unit(unit);
    const Eigen::SparseVector<Scalar> diff = next - prev;
    return detail::delta_from_moments<Scalar>(prev.sum(), next.sum(), diff.norm(), prev.squaredNorm(),
                                              next.squaredNorm(), next.dot(prev), prev.size(), unit);
}

/// Welford mean/variance recurrence. Variance uses the n-1 divisor and is 0
/// for fewer than two samples.
template <typename Scalar>
class RunningMoments {
public:
    void push(Scalar x) {
        ++count_;
        const Scalar delta = x - mean_;
        mean_ += delta / static_cast<Scalar>(count_);
        m2_ += delta * (x - mean_);
    }

    long count() const { return count_; }
    Scalar mean() const { return mean_; }
    Scalar variance() const { return count_ > 1 ? std::max(Scalar(0), m2_ / static_cast<Scalar>(count_ - 1)) : Scalar(0); }

private:
    long count_ = 0;
    Scalar mean_ = 0;
    Scalar m2_ = 0;
};

template <typename Scalar>
void fill_composites(MeasureSet<Scalar>& m) {
    m.m_atom = m.var_LR;
    m.m_mix = m.mu_S * m.var_S;
    m.m_mob = m.mu_L;
}

/// Single-pass aggregation of DeltaMeasures, for traces too long to hold.
template <typename Scalar>
class SeriesAccumulator {
public:
    void push(const DeltaMeasures<Scalar>& d) {
        info_.push(d.info_change);
        euclid_.push(d.euclid);
        rel_.push(d.rel_change);
        cos_.push(d.cos_sim);
    }

    long count() const { return info_.count(); }

    MeasureSet<Scalar> result() const {
        MeasureSet<Scalar> m;
        m.mu_I = info_.mean();
        m.var_I = info_.variance();
        m.mu_L = euclid_.mean();
        m.var_L = euclid_.variance();
        m.mu_LR = rel_.mean();
        m.var_LR = rel_.variance();
        m.mu_S = cos_.mean();
        m.var_S = cos_.variance();
        m.delta_count = info_.count();
        fill_composites(m);
        return m;
    }

private:
    RunningMoments<Scalar> info_, euclid_, rel_, cos_;
};

/// Feeds consecutive snapshots and keeps only the previous one.
template <typename Vector>
class StreamingSeries {
public:
    using Scalar = typename Vector::Scalar;

    explicit StreamingSeries(Scalar unit) : unit_(unit) { detail::check_unit(unit); }

    void push(Vector snapshot) {
        if (has_prev_)
            acc_.push(delta_measures(prev_, snapshot, unit_));
        prev_ = std::move(snapshot);
        has_prev_ = true;
    }

    long transitions() const { return acc_.count(); }
    MeasureSet<Scalar> result() const { return acc_.result(); }

private:
    Scalar unit_;
    Vector prev_;
    bool has_prev_ = false;
    SeriesAccumulator<Scalar> acc_;
};

namespace detail {

template <typename Scalar>
void two_pass(std::span<const Scalar> xs, Scalar& mean, Scalar& var) {
    Scalar sum = 0;
    for (Scalar x : xs)
        sum += x;
    mean = sum / static_cast<Scalar>(xs.size());
    var = 0;
    if (xs.size() < 2)
        return;
    Scalar ss = 0;
    for (Scalar x : xs)
        ss += (x - mean) * (x - mean);
    var = ss / static_cast<Scalar>(xs.size() - 1);
}

} // namespace detail

/// Two-pass means and unbiased variances over a held trace.
template <typename Scalar>
MeasureSet<Scalar> measures_from_deltas(std::span<const DeltaMeasures<Scalar>> deltas) {
    if (deltas.empty())
        throw std::invalid_argument("series measures need at least one transition");
    const auto count = deltas.size();
    std::vector<Scalar> info(count), euclid(count), rel(count), cos(count);
    for (std::size_t i = 0; i < count; ++i) {
        info[i] = deltas[i].info_change;
        euclid[i] = deltas[i].euclid;
        rel[i] = deltas[i].rel_change;
        cos[i] = deltas[i].cos_sim;
    }
    MeasureSet<Scalar> m;
    detail::two_pass<Scalar>(info, m.mu_I, m.var_I);
    detail::two_pass<Scalar>(euclid, m.mu_L, m.var_L);
    detail::two_pass<Scalar>(rel, m.mu_LR, m.var_LR);
    detail::two_pass<Scalar>(cos, m.mu_S, m.var_S);
    m.delta_count = static_cast<long>(count);
    fill_composites(m);
    return m;
}

template <typename Vector>
MeasureSet<typename Vector::Scalar> series_measures(std::span<const Vector> trace, typename Vector::Scalar unit) {
    using Scalar = typename Vector::Scalar;
    if (trace.size() < 2)
        throw std::invalid_argument("series_measures: trace must hold at least two states");
    std::vector<DeltaMeasures<Scalar>> deltas;
    deltas.reserve(trace.size() - 1);
    for (std::size_t t = 1; t < trace.size(); ++t)
        deltas.push_back(delta_measures(trace[t - 1], trace[t], unit));
    return measures_from_deltas<Scalar>(deltas);
}

template <typename Vector>
MeasureSet<typename Vector::Scalar> series_measures(const std::vector<Vector>& trace, typename Vector::Scalar unit) {
    return series_measures(std::span<const Vector>(trace), unit);
}

/// Radius and angle to the all-ones direction. The zero vector maps to (0, 0)
/// and any constant positive vector to theta = 0 exactly.
template <typename Derived>
PolarPoint polar_point(const Eigen::MatrixBase<Derived>& q) {
    const double r = static_cast<double>(q.norm());
    if (r == 0.0 || q.size() == 0)
        return {};
    if (q.minCoeff() == q.maxCoeff())
        return {r, 0.0};
    // atan2 of the orthogonal and parallel parts is accurate near theta = 0,
    // where arccos of the cosine loses half its digits.
    const double n = static_cast<double>(q.size());
    const double mean = static_cast<double>(q.sum()) / n;
    const double parallel = mean * std::sqrt(n);
    const double orthogonal = (q.template cast<double>().array() - mean).matrix().norm();
    return {r, std::atan2(orthogonal, parallel)};
}

template <typename Scalar>
PolarPoint polar_point(const Eigen::SparseVector<Scalar>& q) {
    const double r = static_cast<double>(q.norm());
    if (r == 0.0)
        return {};
    const double n = static_cast<double>(q.size());
    const double mean = static_cast<double>(q.sum()) / n;
    double orthogonal_sq = 0.0;
    double lo = mean, hi = mean;
    for (typename Eigen::SparseVector<Scalar>::InnerIterator it(q); it; ++it) {
        const double v = static_cast<double>(it.value());
        orthogonal_sq += (v - mean) * (v - mean);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const auto implicit_zeros = static_cast<double>(q.size() - q.nonZeros());
    if (implicit_zeros == 0.0 && lo == hi)
        return {r, 0.0};
    orthogonal_sq += implicit_zeros * mean * mean;
    return {r, std::atan2(std::sqrt(orthogonal_sq), mean * std::sqrt(n))};
}

template <typename Vector>
std::vector<PolarPoint> trajectory(std::span<const Vector> trace) {
    std::vector<PolarPoint> out;
    out.reserve(trace.size());
    for (const auto& q : trace)
        out.push_back(polar_point(q));
    return out;
}

template <typename Vector>
std::vector<PolarPoint> trajectory(const std::vector<Vector>& trace) {
    return trajectory(std::span<const Vector>(trace));
}

using MeasureSetD = MeasureSet<double>;
using DeltaMeasuresD = DeltaMeasures<double>;

} // namespace mixbiotic

#endif // MIXBIOTIC_MEASURES_HPP
