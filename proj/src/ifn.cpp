#include "gmt/ifn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "gmt/errors.hpp"
#include "gmt/gmean.hpp"

namespace gmt {

namespace {

std::string describe(const IFN& a) { return "(" + std::to_string(a.mu()) + ", " + std::to_string(a.nu()) + ")"; }

// Places guarded results that are off by rounding back onto the simplex.
IFN projected(double mu, double nu) {
    mu = std::clamp(mu, 0.0, 1.0);
    nu = std::clamp(nu, 0.0, 1.0);
    if (mu + nu > 1.0) nu = 1.0 - mu;
    return IFN(mu, nu);
}

Ordering compare_with_slack(double a, double b) {
    if (a < b - kIfnSlack) return Ordering::less;
    if (a > b + kIfnSlack) return Ordering::greater;
    return Ordering::equal;
}

void require_below_one(const IFN& a, const char* what) {
    if (!(a.mu() < 1.0 && a.nu() > 0.0)) {
        throw PreconditionError(std::string(what) + " requires an IFN <_L (1,0), got " + describe(a));
    }
}

void require_above_zero(const IFN& a, const char* what) {
    if (!(a.mu() > 0.0 && a.nu() < 1.0)) {
        throw PreconditionError(std::string(what) + " requires an IFN >_L (0,1), got " + describe(a));
    }
}

}  // namespace

IFN::IFN(double mu, double nu) : mu_(mu), nu_(nu) {
    if (!std::isfinite(mu) || !std::isfinite(nu) || mu < -kIfnSlack || nu < -kIfnSlack ||
        mu + nu > 1.0 + kIfnSlack) {
        throw std::invalid_argument("not an intuitionistic fuzzy number: (" + std::to_string(mu) + ", " +
                                    std::to_string(nu) + ")");
    }
    mu_ = std::clamp(mu_, 0.0, 1.0);
    nu_ = std::clamp(nu_, 0.0, 1.0);
    if (mu_ + nu_ > 1.0) nu_ = 1.0 - mu_;
}

Ordering total_order_cmp(const IFN& a, const IFN& b) {
    Ordering by_score = compare_with_slack(a.score(), b.score());
    if (by_score != Ordering::equal) return by_score;
    return compare_with_slack(a.accuracy(), b.accuracy());
}

PartialOrdering partial_order_cmp(const IFN& a, const IFN& b) {
    if (a.mu() > b.mu() && a.nu() < b.nu()) return PartialOrdering::greater;
    if (a.mu() < b.mu() && a.nu() > b.nu()) return PartialOrdering::less;
    if (a.mu() == b.mu() && a.nu() == b.nu()) return PartialOrdering::equal;
    return PartialOrdering::incomparable;
}

bool less_l(const IFN& a, const IFN& b) { return partial_order_cmp(a, b) == PartialOrdering::less; }

IFN add(const IFN& a, const IFN& b) {
    return IFN(a.mu() + b.mu() * (1.0 - a.mu()), a.nu() * b.nu());
}

bool subtraction_defined(const IFN& a, const IFN& b) {
    return a.mu() >= b.mu() - kIfnSlack && a.nu() <= b.nu() + kIfnSlack && b.nu() > 0.0 &&
           a.nu() * b.hesitancy() <= a.hesitancy() * b.nu() + kIfnSlack;
}

IFN subtract(const IFN& a, const IFN& b) {
    if (!subtraction_defined(a, b)) return IFN::zero();
    return projected((a.mu() - b.mu()) / (1.0 - b.mu()), a.nu() / b.nu());
}

IFN multiply(const IFN& a, const IFN& b) {
    return IFN(a.mu() * b.mu(), a.nu() + b.nu() * (1.0 - a.nu()));
}

IFN scalar_mul(double c, const IFN& a) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("scalar multiple needs c >= 0");
    require_below_one(a, "scalar multiplication");
    return projected(-std::expm1(c * std::log1p(-a.mu())), std::pow(a.nu(), c));
}

IFN power(const IFN& a, double c) {
    if (!(c >= 0.0) || !std::isfinite(c)) throw std::invalid_argument("IFN power needs c >= 0");
    require_above_zero(a, "IFN power");
    return projected(std::pow(a.mu(), c), -std::expm1(c * std::log1p(-a.nu())));
}

EpsilonIFN::EpsilonIFN(double eps) : eps_(eps) {
    if (!(eps > 0.0 && eps <= 1.0)) throw std::invalid_argument("eps-bar parameter must lie in (0, 1]");
}

bool in_addition_region(const IFN& a, const IFN& xi) {
    if (!subtraction_defined(a, xi)) return false;
    IFN back = add(xi, subtract(a, xi));
    return std::abs(back.mu() - a.mu()) <= kIfnSlack && std::abs(back.nu() - a.nu()) <= kIfnSlack;
}

AdditionLimit addition_limit_check(std::span<const IFN> seq, const IFN& xi, EpsilonIFN eps, TailWindow window) {
    window.require_within(seq.size());
    for (std::size_t n = window.start(); n <= window.end(); ++n) {
        if (!in_addition_region(seq[n], xi)) return AdditionLimit::not_applicable;
    }
    const IFN bound = eps.additive();
    for (std::size_t n = window.start(); n <= window.end(); ++n) {
        if (!less_l(subtract(seq[n], xi), bound)) return AdditionLimit::fails;
    }
    return AdditionLimit::holds;
}

bool zhangxu_limit_check(std::span<const IFN> seq, const IFN& xi, const IFN& eps, TailWindow window) {
    if (eps == IFN::zero()) throw std::invalid_argument("eps-bar must differ from (0,1)");
    window.require_within(seq.size());
    const IFN upper = add(xi, eps);
    for (std::size_t n = window.start(); n <= window.end(); ++n) {
        switch (total_order_cmp(seq[n], xi)) {
            case Ordering::greater:
                if (total_order_cmp(seq[n], upper) != Ordering::less) return false;
                break;
            case Ordering::less:
                if (total_order_cmp(xi, add(seq[n], eps)) != Ordering::less) return false;
                break;
            case Ordering::equal:
                break;
        }
    }
    return true;
}

bool zhangxu_limit_check(std::span<const IFN> seq, const IFN& xi, std::span<const IFN> eps_grid, TailWindow window) {
    if (eps_grid.empty()) throw std::invalid_argument("eps grid is empty");
    return std::all_of(eps_grid.begin(), eps_grid.end(),
                       [&](const IFN& eps) { return zhangxu_limit_check(seq, xi, eps, window); });
}

std::vector<IFN> default_epsilon_grid() {
    std::vector<IFN> grid;
    for (double delta : {1e-1, 1e-3, 1e-6}) {
        grid.emplace_back(0.0, 1.0 - delta);
        grid.emplace_back(delta, 1.0 - delta);
        grid.emplace_back(delta, 0.0);
    }
    grid.emplace_back(0.5, 0.5);
    grid.emplace_back(0.3, 0.2);
    grid.emplace_back(0.0, 0.0);
    grid.emplace_back(1.0, 0.0);
    return grid;
}

namespace {

ComponentConvergence component_deviation(std::span<const IFN> seq, const IFN& xi, double tol, TailWindow window) {
    if (!(tol > 0.0 && tol <= 1.0)) throw std::invalid_argument("component tolerance must lie in (0, 1]");
    window.require_within(seq.size());
    ComponentConvergence c{false, true, 0.0, 0.0};
    for (std::size_t n = window.start(); n <= window.end(); ++n) {
        c.max_mu_deviation = std::max(c.max_mu_deviation, std::abs(seq[n].mu() - xi.mu()));
        c.max_nu_deviation = std::max(c.max_nu_deviation, std::abs(seq[n].nu() - xi.nu()));
    }
    c.converges = c.max_mu_deviation < tol && c.max_nu_deviation < tol;
    return c;
}

}  // namespace

ComponentConvergence oplus_convergence_check(std::span<const IFN> seq, const IFN& xi, double tol, TailWindow window) {
    require_below_one(xi, "(+)convergence");
    auto c = component_deviation(seq, xi, tol, window);
    const IFN eps = EpsilonIFN(tol).additive();
    const IFN upper = add(xi, eps);
    for (std::size_t n = window.start(); n <= window.end() && c.sandwich; ++n) {
        c.sandwich = less_l(seq[n], upper) && less_l(xi, add(seq[n], eps));
    }
    return c;
}

ComponentConvergence otimes_convergence_check(std::span<const IFN> seq, const IFN& xi, double tol, TailWindow window) {
    require_above_zero(xi, "(x)convergence");
    auto c = component_deviation(seq, xi, tol, window);
    const IFN eps = EpsilonIFN(tol).multiplicative();
    const IFN lower = multiply(xi, eps);
    for (std::size_t n = window.start(); n <= window.end() && c.sandwich; ++n) {
        c.sandwich = less_l(multiply(seq[n], eps), xi) && less_l(lower, seq[n]);
    }
    return c;
}

std::pair<LogSequence, LogSequence> component_sequences(std::span<const IFN> seq, MeanMode mode) {
    LogSequence first;
    LogSequence second;
    first.reserve(seq.size());
    second.reserve(seq.size());
    for (std::size_t k = 0; k < seq.size(); ++k) {
        const IFN& a = seq[k];
        const char* what = mode == MeanMode::oplus ? "weighted arithmetic means" : "weighted geometric means";
        try {
            if (mode == MeanMode::oplus) {
                require_below_one(a, what);
                first.push_back(LogReal::from_log(std::log1p(-a.mu())));
                second.push_back(LogReal::from_log(std::log(a.nu())));
            } else {
                require_above_zero(a, what);
                first.push_back(LogReal::from_log(std::log(a.mu())));
                second.push_back(LogReal::from_log(std::log1p(-a.nu())));
            }
        } catch (const PreconditionError& e) {
            throw PreconditionError(std::string(e.what()) + " at index " + std::to_string(k));
        }
    }
    return {std::move(first), std::move(second)};
}

IFNSequence ifwa_means(std::span<const IFN> seq, const WeightSequence& w) {
    auto [one_minus_mu, nu] = component_sequences(seq, MeanMode::oplus);
    auto a = weighted_geo_means(one_minus_mu, w);
    auto b = weighted_geo_means(nu, w);
    IFNSequence out;
    out.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) out.push_back(projected(-std::expm1(a[n].log()), b[n].value()));
    return out;
}

IFNSequence ifwg_means(std::span<const IFN> seq, const WeightSequence& w) {
    auto [mu, one_minus_nu] = component_sequences(seq, MeanMode::otimes);
    auto a = weighted_geo_means(mu, w);
    auto b = weighted_geo_means(one_minus_nu, w);
    IFNSequence out;
    out.reserve(seq.size());
    for (std::size_t n = 0; n < seq.size(); ++n) out.push_back(projected(a[n].value(), -std::expm1(b[n].log())));
    return out;
}

IfnVerdict np_oplus_verdict(std::span<const IFN> seq, const WeightSequence& w, std::optional<IFN> xi, double tol,
                            TailWindow window) {
    window.require_within(seq.size());
    auto t = ifwa_means(seq, w);
    IFN limit = xi.value_or(t[window.end()]);
    auto evidence = oplus_convergence_check(t, limit, tol, window);
    return IfnVerdict{evidence.converges, limit, evidence, window, tol};
}

IfnVerdict gp_otimes_verdict(std::span<const IFN> seq, const WeightSequence& w, std::optional<IFN> xi, double tol,
                             TailWindow window) {
    window.require_within(seq.size());
    auto h = ifwg_means(seq, w);
    IFN limit = xi.value_or(h[window.end()]);
    auto evidence = otimes_convergence_check(h, limit, tol, window);
    return IfnVerdict{evidence.converges, limit, evidence, window, tol};
}

IfnTauberReport ifn_tauber_report(std::span<const IFN> seq, const WeightSequence& w, const LambdaGrid& grid,
                                  TailWindow window, MeanMode mode, TauberThresholds thresholds) {
    auto [first, second] = component_sequences(seq, mode);
    IfnTauberReport r{mode, recoverability_report(first, w, grid, window, thresholds),
                      recoverability_report(second, w, grid, window, thresholds), false};
    r.recovery = r.first.recovery && r.second.recovery;
    return r;
}

}  // namespace gmt
