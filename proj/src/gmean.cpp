#include "gmt/gmean.hpp"

#include <stdexcept>
#include <string>

#include "gmt/errors.hpp"

namespace gmt {

void GeoMeanState::push(LogReal u, double weight) {
    if (weight != 0.0) log_sum_.add(weight * u.log());
    weight_sum_.add(weight);
    ++count_;
}

LogReal GeoMeanState::mean() const {
    double total = weight_sum_.value();
    if (!(total > 0.0)) throw PreconditionError("weighted geometric mean undefined while P_n = 0");
    return LogReal::from_log(log_sum_.value() / total);
}

LogSequence weighted_geo_means(std::span<const LogReal> u, const WeightSequence& w) {
    if (u.empty()) throw std::invalid_argument("cannot transform an empty sequence");
    if (w.size() < u.size()) {
        throw std::invalid_argument("weight sequence (" + std::to_string(w.size()) +
                                    ") shorter than input sequence (" + std::to_string(u.size()) + ")");
    }
    LogSequence out;
    out.reserve(u.size());
    GeoMeanState state;
    for (std::size_t n = 0; n < u.size(); ++n) {
        state.push(u[n], w.weight(n));
        out.push_back(state.mean());
    }
    return out;
}

Verdict star_limit_verdict(std::span<const LogReal> seq, MTolerance tol, TailWindow window) {
    window.require_within(seq.size());
    LogReal limit = seq[window.end()];
    double dev = max_log_deviation(seq, limit, window);
    return Verdict{dev < tol.log(), limit, dev, window, tol.value()};
}

Verdict gbar_limit_estimate(std::span<const LogReal> u, const WeightSequence& w, MTolerance tol, TailWindow window) {
    window.require_within(u.size());
    auto means = weighted_geo_means(u, w);
    return star_limit_verdict(means, tol, window);
}

LogReal decomposition_identity_check(std::span<const LogReal> u, const WeightSequence& w, double lambda,
                                     std::size_t n) {
    if (lambda == 1.0) throw std::invalid_argument("decomposition requires lambda != 1");
    std::size_t m = lambda_index(lambda, n);
    std::size_t last = std::max(m, n);
    if (last >= u.size() || last >= w.size()) throw std::out_of_range("decomposition index exceeds sequence");

    auto means = weighted_geo_means(u.first(last + 1), w);
    double Pn = w.partial_sum(n);
    double Pm = w.partial_sum(m);
    double lhs = u[n].log() - means[n].log();

    double rhs;
    if (lambda > 1.0) {
        if (!(Pm > Pn)) throw PreconditionError("decomposition needs P_{lambda_n} > P_n");
        double gap = Pm - Pn;
        CompensatedSum block;
        for (std::size_t k = n + 1; k <= m; ++k) block.add(w.weight(k) * (u[k].log() - u[n].log()));
        rhs = (means[m].log() - means[n].log()) * (Pm / gap) - block.value() / gap;
    } else {
        if (!(Pn > Pm)) throw PreconditionError("decomposition needs P_n > P_{lambda_n}");
        double gap = Pn - Pm;
        CompensatedSum block;
        for (std::size_t k = m + 1; k <= n; ++k) block.add(w.weight(k) * (u[n].log() - u[k].log()));
        rhs = (means[n].log() - means[m].log()) * (Pm / gap) + block.value() / gap;
    }
    return mdist(LogReal::from_log(lhs), LogReal::from_log(rhs));
}

}  // namespace gmt
