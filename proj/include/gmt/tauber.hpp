#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gmt/gmean.hpp"
#include "gmt/mcore.hpp"
#include "gmt/weights.hpp"

namespace gmt {

/// limsup proxy for one lambda: max over the usable part of the window.
struct LambdaEstimate {
    double lambda;
    /// Multiplicative value >= 1 in log form; empty when no n in the window was usable.
    std::optional<LogReal> value;
    /// Number of indices n that entered the maximum.
    std::size_t evaluated;
    /// Indices skipped because lambda_n ran past the data or the partial-sum gap vanished.
    std::size_t skipped;
};

/// liminf-over-lambda proxy: min of the per-lambda curve.
struct ConditionEstimate {
    LogReal value;
    std::vector<LambdaEstimate> per_lambda;
};

/// Both forms of *-slow oscillation: the lambda > 1 block max (the reported value) and the
/// lambda < 1 form, computed independently rather than assumed equal.
struct SlowOscillationEstimate {
    ConditionEstimate upper;
    ConditionEstimate lower;
    LogReal value() const { return upper.value; }
};

SlowOscillationEstimate slow_oscillation_estimate(std::span<const LogReal> u, const LambdaGrid& grid,
                                                  TailWindow window);

/// max_{n<k<=lambda_n} form of the lambda > 1 Tauberian condition:
///   |prod_{k=n+1}^{lambda_n} (u_k/u_n)^{p_k}|*^{1/(P_{lambda_n}-P_n)}
ConditionEstimate tauber_con1_estimate(std::span<const LogReal> u, const WeightSequence& w, const LambdaGrid& grid,
                                       TailWindow window);

/// lambda < 1 mirror:
///   |prod_{k=lambda_n+1}^{n} (u_n/u_k)^{p_k}|*^{1/(P_n-P_{lambda_n})}
ConditionEstimate tauber_con2_estimate(std::span<const LogReal> u, const WeightSequence& w, const LambdaGrid& grid,
                                       TailWindow window);

struct LandauEstimate {
    /// max over the window of |(u_n/u_{n-1})^n|*
    LogReal bound;
    /// ((u_n/u_{n-1})^n) *converges to 1 on the window.
    bool vanish;
    /// bound restricted to the first and second half of the window
    LogReal early_bound;
    LogReal late_bound;
};

LandauEstimate landau_estimates(std::span<const LogReal> u, TailWindow window,
                                MTolerance tol = MTolerance::exact_default());

struct TauberThresholds {
    MTolerance tol = MTolerance::exact_default();
    /// con1/con2 pass threshold.
    double theta = 1.05;
};

struct TauberReport {
    Verdict gbar;
    ConditionEstimate con1;
    ConditionEstimate con2;
    SlowOscillationEstimate slow_oscillation;
    LandauEstimate landau;
    bool con1_pass;
    bool con2_pass;
    bool slow_oscillation_pass;
    bool landau_bounded_pass;
    bool recovery;
};

/// recovery = gbar.pass && (con1 <= theta || con2 <= theta). Slow oscillation and the Landau
/// flags are reported as the stronger sufficient conditions.
TauberReport recoverability_report(std::span<const LogReal> u, const WeightSequence& w, const LambdaGrid& grid,
                                   TailWindow window, TauberThresholds thresholds = {});

}  // namespace gmt
