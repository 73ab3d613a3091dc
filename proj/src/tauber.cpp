#include "gmt/tauber.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>

#include "gmt/errors.hpp"
#include "gmt/numeric.hpp"

namespace gmt {

namespace {

// Prefix sums of p_k log(u_k/u_0) (compensated), indexed like u. Measuring logs from u_0
// keeps constant sequences exact and large common offsets out of the sums.
std::vector<double> weighted_log_prefix(std::span<const LogReal> u, const WeightSequence& w) {
    std::vector<double> out;
    out.reserve(u.size());
    CompensatedSum sum;
    const double base = u.empty() ? 0.0 : u[0].log();
    for (std::size_t k = 0; k < u.size(); ++k) {
        double p = w.weight(k);
        if (p != 0.0) sum.add(p * (u[k].log() - base));
        out.push_back(sum.value());
    }
    return out;
}

// Max/min of log u over [lo, hi] where both ends only move forward.
class SlidingExtrema {
public:
    explicit SlidingExtrema(std::span<const LogReal> u) : u_(u) {}

    void slide(std::size_t lo, std::size_t hi) {
        for (; next_ <= hi; ++next_) {
            double v = u_[next_].log();
            while (!maxq_.empty() && u_[maxq_.back()].log() <= v) maxq_.pop_back();
            while (!minq_.empty() && u_[minq_.back()].log() >= v) minq_.pop_back();
            maxq_.push_back(next_);
            minq_.push_back(next_);
        }
        while (maxq_.front() < lo) maxq_.pop_front();
        while (minq_.front() < lo) minq_.pop_front();
    }
    double max() const { return u_[maxq_.front()].log(); }
    double min() const { return u_[minq_.front()].log(); }

private:
    std::span<const LogReal> u_;
    std::deque<std::size_t> maxq_;
    std::deque<std::size_t> minq_;
    std::size_t next_ = 0;
};

ConditionEstimate reduce_min(std::vector<LambdaEstimate> curve, const char* what) {
    std::optional<LogReal> best;
    for (const auto& e : curve) {
        if (e.value && (!best || *e.value < *best)) best = e.value;
    }
    if (!best) {
        throw PreconditionError(std::string(what) + ": no (lambda, n) pair in the window could be evaluated");
    }
    return ConditionEstimate{*best, std::move(curve)};
}

void require_lengths(std::span<const LogReal> u, const WeightSequence& w, TailWindow window) {
    window.require_within(u.size());
    if (w.size() < u.size()) throw std::invalid_argument("weight sequence shorter than input sequence");
}

}  // namespace

SlowOscillationEstimate slow_oscillation_estimate(std::span<const LogReal> u, const LambdaGrid& grid,
                                                  TailWindow window) {
    window.require_within(u.size());
    std::vector<LambdaEstimate> upper;
    for (double lambda : grid.above_one()) {
        LambdaEstimate e{lambda, std::nullopt, 0, 0};
        SlidingExtrema block(u);
        double worst = 0.0;
        for (std::size_t n = window.start(); n <= window.end(); ++n) {
            std::size_t hi = lambda_index(lambda, n);
            if (hi <= n || hi >= u.size()) {
                ++e.skipped;
                continue;
            }
            block.slide(n + 1, hi);
            worst = std::max({worst, block.max() - u[n].log(), u[n].log() - block.min()});
            ++e.evaluated;
        }
        if (e.evaluated > 0) e.value = LogReal::from_log(worst);
        upper.push_back(e);
    }
    std::vector<LambdaEstimate> lower;
    for (double lambda : grid.below_one()) {
        LambdaEstimate e{lambda, std::nullopt, 0, 0};
        SlidingExtrema block(u);
        double worst = 0.0;
        for (std::size_t n = window.start(); n <= window.end(); ++n) {
            std::size_t lo = lambda_index(lambda, n);
            if (lo >= n) {
                ++e.skipped;
                continue;
            }
            block.slide(lo + 1, n);
            worst = std::max({worst, block.max() - u[n].log(), u[n].log() - block.min()});
            ++e.evaluated;
        }
        if (e.evaluated > 0) e.value = LogReal::from_log(worst);
        lower.push_back(e);
    }
    return SlowOscillationEstimate{reduce_min(std::move(upper), "slow oscillation (lambda > 1)"),
                                   reduce_min(std::move(lower), "slow oscillation (lambda < 1)")};
}

ConditionEstimate tauber_con1_estimate(std::span<const LogReal> u, const WeightSequence& w, const LambdaGrid& grid,
                                       TailWindow window) {
    require_lengths(u, w, window);
    auto L = weighted_log_prefix(u, w);
    std::vector<LambdaEstimate> curve;
    for (double lambda : grid.above_one()) {
        LambdaEstimate e{lambda, std::nullopt, 0, 0};
        double worst = 0.0;
        for (std::size_t n = window.start(); n <= window.end(); ++n) {
            std::size_t m = lambda_index(lambda, n);
            if (m >= u.size()) {
                ++e.skipped;
                continue;
            }
            double gap = w.partial_sum(m) - w.partial_sum(n);
            if (!(gap > 0.0)) {
                ++e.skipped;
                continue;
            }
            // |sum_{k=n+1}^{m} p_k (log u_k - log u_n)| / gap
            double q = std::abs((L[m] - L[n]) / gap - (u[n].log() - u[0].log()));
            worst = std::max(worst, q);
            ++e.evaluated;
        }
        if (e.evaluated > 0) e.value = LogReal::from_log(worst);
        curve.push_back(e);
    }
    return reduce_min(std::move(curve), "con1");
}

ConditionEstimate tauber_con2_estimate(std::span<const LogReal> u, const WeightSequence& w, const LambdaGrid& grid,
                                       TailWindow window) {
    require_lengths(u, w, window);
    auto L = weighted_log_prefix(u, w);
    std::vector<LambdaEstimate> curve;
    for (double lambda : grid.below_one()) {
        LambdaEstimate e{lambda, std::nullopt, 0, 0};
        double worst = 0.0;
        for (std::size_t n = window.start(); n <= window.end(); ++n) {
            std::size_t m = lambda_index(lambda, n);
            double gap = w.partial_sum(n) - w.partial_sum(m);
            if (!(gap > 0.0)) {
                ++e.skipped;
                continue;
            }
            double q = std::abs((u[n].log() - u[0].log()) - (L[n] - L[m]) / gap);
            worst = std::max(worst, q);
            ++e.evaluated;
        }
        if (e.evaluated > 0) e.value = LogReal::from_log(worst);
        curve.push_back(e);
    }
    return reduce_min(std::move(curve), "con2");
}

LandauEstimate landau_estimates(std::span<const LogReal> u, TailWindow window, MTolerance tol) {
    window.require_within(u.size());
    if (window.start() < 1) throw std::invalid_argument("Landau estimates need a window starting at n >= 1");
    LogSequence aux;
    aux.reserve(window.size());
    const std::size_t split = window.start() + window.size() / 2;
    double early = 0.0;
    double late = 0.0;
    for (std::size_t n = window.start(); n <= window.end(); ++n) {
        LogReal term = mdelta(u, n).pow(static_cast<double>(n));
        double& half = n < split ? early : late;
        half = std::max(half, mabs(term).log());
        aux.push_back(term);
    }
    TailWindow local(0, aux.size() - 1);
    return LandauEstimate{LogReal::from_log(std::max(early, late)), star_converges_to(aux, LogReal{}, tol, local),
                          LogReal::from_log(early), LogReal::from_log(late)};
}

TauberReport recoverability_report(std::span<const LogReal> u, const WeightSequence& w, const LambdaGrid& grid,
                                   TailWindow window, TauberThresholds thresholds) {
    TauberReport r{gbar_limit_estimate(u, w, thresholds.tol, window),
                   tauber_con1_estimate(u, w, grid, window),
                   tauber_con2_estimate(u, w, grid, window),
                   slow_oscillation_estimate(u, grid, window),
                   landau_estimates(u, window.start() == 0 ? TailWindow(1, window.end()) : window, thresholds.tol),
                   false, false, false, false, false};
    const double log_theta = std::log(thresholds.theta);
    r.con1_pass = r.con1.value.log() <= log_theta;
    r.con2_pass = r.con2.value.log() <= log_theta;
    r.slow_oscillation_pass = r.slow_oscillation.value().log() <= log_theta;
    // A bounded auxiliary sequence shows no growth from the first to the second half of the window.
    r.landau_bounded_pass = r.landau.late_bound.log() - r.landau.early_bound.log() <= log_theta;
    r.recovery = r.gbar.pass && (r.con1_pass || r.con2_pass);
    return r;
}

}  // namespace gmt
