#pragma once

#include <cstddef>
#include <span>

#include "gmt/mcore.hpp"
#include "gmt/numeric.hpp"
#include "gmt/weights.hpp"

namespace gmt {

/// Running state of the weighted geometric mean (prod u_k^{p_k})^{1/P_n}.
///
/// Holds L = sum p_k log u_k and P = sum p_k, both compensated, so log w_n = L/P.
class GeoMeanState {
public:
    void push(LogReal u, double weight);

    /// Throws PreconditionError while the accumulated weight is still zero.
    LogReal mean() const;

    double log_weighted_sum() const { return log_sum_.value(); }
    double weight_total() const { return weight_sum_.value(); }
    std::size_t count() const { return count_; }

private:
    CompensatedSum log_sum_;
    CompensatedSum weight_sum_;
    std::size_t count_ = 0;
};

/// (w_n) for n = 0..u.size()-1. The weight sequence must be at least as long as u.
LogSequence weighted_geo_means(std::span<const LogReal> u, const WeightSequence& w);

/// Windowed limit diagnostic for a sequence in (0, inf).
struct Verdict {
    bool pass;
    /// Candidate limit (the last element of the window).
    LogReal limit;
    /// max over the window of log d*(x_n, limit)
    double max_log_deviation;
    TailWindow window;
    double tolerance;
};

/// *convergence evidence for an already-materialized sequence.
Verdict star_limit_verdict(std::span<const LogReal> seq, MTolerance tol, TailWindow window);

/// (G,p)-*convergence evidence: star_limit_verdict applied to the weighted geometric means.
Verdict gbar_limit_estimate(std::span<const LogReal> u, const WeightSequence& w, MTolerance tol, TailWindow window);

/// Evaluates both sides of the decomposition
///   lambda > 1: u_n/w_n = (w_m/w_n)^{P_m/(P_m-P_n)} [prod_{k=n+1}^{m} (u_k/u_n)^{p_k}]^{-1/(P_m-P_n)}
///   lambda < 1: u_n/w_n = (w_n/w_m)^{P_m/(P_n-P_m)} [prod_{k=m+1}^{n} (u_n/u_k)^{p_k}]^{1/(P_n-P_m)}
/// with m = floor(lambda n), and returns d*(lhs, rhs). Throws PreconditionError when
/// P_m and P_n do not differ in the required direction.
LogReal decomposition_identity_check(std::span<const LogReal> u, const WeightSequence& w, double lambda,
                                     std::size_t n);

}  // namespace gmt
