// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "gmt/gmean.hpp"
#include "gmt/ifn.hpp"
#include "gmt/tauber.hpp"
#include "oracles.hpp"

using gmt::IFN;
using gmt::IFNSequence;
using gmt::LambdaGrid;
using gmt::LogReal;
using gmt::LogSequence;
using gmt::MTolerance;
using gmt::TailWindow;
using gmt::WeightSequence;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

LogSequence alternating_exp(std::size_t length) {
    LogSequence u;
    for (std::size_t n = 0; n < length; ++n) u.push_back(LogReal::from_log(n % 2 == 0 ? n + 1.0 : -(n + 1.0)));
    return u;
}

LogSequence two_power(std::size_t length) {
    LogSequence u;
    for (std::size_t n = 0; n < length; ++n) u.push_back(LogReal::from_value(n % 2 == 0 ? 2.0 : 0.5));
    return u;
}

LogSequence exp_decay(std::size_t length) {
    LogSequence u;
    for (std::size_t n = 0; n < length; ++n) u.push_back(LogReal::from_log(1.0 / (n + 1.0)));
    return u;
}

double dist_log(LogReal a, LogReal b) { return gmt::mdist(a, b).log(); }

Outcome criterion1() {
    const std::size_t N = 100001;
    auto u = alternating_exp(N);
    auto p = WeightSequence::harmonic(N);
    auto w = gmt::weighted_geo_means(u, p);
    double worst = 0;
    for (std::size_t n = 0; n < N; ++n) {
        double target = n % 2 == 0 ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(w[n].log() * p.partial_sum(n) - target));
    }
    TailWindow window(50000, 100000);
    MTolerance tol(1.1);
    auto weighted = gmt::gbar_limit_estimate(u, p, tol, window);
    auto plain = gmt::gbar_limit_estimate(u, WeightSequence::ones(N), tol, window);
    bool limit_one = dist_log(weighted.limit, LogReal{}) < tol.log();
    bool pass = worst <= 1e-9 && weighted.pass && limit_one && !plain.pass;
    return {pass, fmt("max |P_n log w_n - {0,1}| = %.3g, weighted limit %.6g, plain max log dev %.4g", worst,
                      weighted.limit.value(), plain.max_log_deviation)};
}

Outcome criterion2() {
    const std::size_t N = 10001;
    auto u = two_power(N);
    TailWindow window(5000, 10000);
    auto plain = gmt::gbar_limit_estimate(u, WeightSequence::ones(N), MTolerance(1.01), window);
    bool plain_ok = plain.pass && dist_log(plain.limit, LogReal{}) < std::log(1.01);

    auto p = WeightSequence::alternating(2, 1, N);
    auto w = gmt::weighted_geo_means(u, p);
    const double root = std::cbrt(2.0);
    double worst = 0;
    for (std::size_t n = 1; n < N; n += 2) worst = std::max(worst, std::abs(w[n].value() - root));
    auto weighted = gmt::gbar_limit_estimate(u, p, MTolerance(1.01), window);
    bool weighted_ok = weighted.pass && dist_log(weighted.limit, LogReal::from_value(root)) < std::log(1.01);
    return {plain_ok && weighted_ok && worst <= 1e-12,
            fmt("p=1 limit %.6g, (2,1) limit %.10g, odd-index max |w_n - 2^(1/3)| = %.3g", plain.limit.value(),
                weighted.limit.value(), worst)};
}

Outcome criterion3() {
    auto g = oracle::rng(20260001);
    double worst = 0;
    int above = 0, below = 0;
    for (int i = 0; i < 1000; ++i) {
        const std::size_t len = 80;
        std::vector<double> logs, p{oracle::uniform(g, 0.2, 3.0)};
        for (std::size_t k = 0; k < len; ++k) logs.push_back(oracle::uniform(g, -5, 5));
        for (std::size_t k = 1; k < len; ++k) p.push_back(k % 9 == 0 ? 0.0 : oracle::uniform(g, 0.0, 3.0));
        const bool up = i % 2 == 0;
        double lambda = up ? oracle::uniform(g, 1.05, 3.0) : oracle::uniform(g, 0.2, 0.95);
        std::size_t n = static_cast<std::size_t>(oracle::uniform(g, 10, up ? 26 : 79));
        if (gmt::lambda_index(lambda, n) == n) lambda = up ? 2.0 : 0.5;
        double r = gmt::decomposition_identity_check(oracle::from_logs(logs), WeightSequence(p), lambda, n).log();
        worst = std::max(worst, r);
        (up ? above : below)++;
    }
    return {worst <= 1e-10, fmt("max log residual %.3g over %g (lambda>1) + %g (lambda<1) instances", worst, above,
                                below)};
}

Outcome criterion4() {
    auto g = oracle::rng(20260004);
    const std::size_t N = 10001;
    TailWindow window(5000, 10000);
    const MTolerance tol(1.01);
    std::vector<std::pair<std::string, std::function<WeightSequence()>>> families{
        {"ones", [&] { return WeightSequence::ones(N); }},
        {"harmonic", [&] { return WeightSequence::harmonic(N); }},
        {"alternating", [&] { return WeightSequence::alternating(2, 1, N); }},
        {"linear", [&] {
             std::vector<double> p;
             for (std::size_t n = 0; n < N; ++n) p.push_back(n + 1.0);
             return WeightSequence(p);
         }},
        {"random", [&] {
             std::vector<double> p{oracle::uniform(g, 0.5, 2.0)};
             for (std::size_t n = 1; n < N; ++n) p.push_back(n % 5 == 0 ? 0.0 : oracle::uniform(g, 0.0, 2.0));
             return WeightSequence(p);
         }},
    };
    int failures = 0;
    double worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        // u_n = a exp(xi_n), xi_n = c cos(theta n + phi) / (n+1)^s
        double a = std::exp(oracle::uniform(g, -5, 5));
        double c = oracle::uniform(g, -0.05, 0.05);
        double theta = oracle::uniform(g, 0.5, 3.0);
        double phi = oracle::uniform(g, 0, 6.283);
        double s = oracle::uniform(g, 0.5, 1.0);
        LogSequence u;
        for (std::size_t n = 0; n < N; ++n) {
            u.push_back(LogReal::from_log(std::log(a) + c * std::cos(theta * n + phi) / std::pow(n + 1.0, s)));
        }
        for (auto& [name, make] : families) {
            auto verdict = gmt::gbar_limit_estimate(u, make(), tol, window);
            double d = dist_log(verdict.limit, LogReal::from_value(a));
            worst = std::max(worst, d);
            if (!verdict.pass || !(d < tol.log())) ++failures;
        }
    }
    return {failures == 0, fmt("%g failures in 500 runs, max log distance to the limit %.3g", failures, worst)};
}

Outcome criterion5() {
    const std::size_t N = 40001;
    TailWindow window(10000, 20000);
    auto grid = LambdaGrid::default_grid();
    auto good = gmt::recoverability_report(exp_decay(N), WeightSequence::ones(N), grid, window);
    auto ex3 = gmt::recoverability_report(alternating_exp(N), WeightSequence::harmonic(N), grid, window);
    auto ex4 = gmt::recoverability_report(two_power(N), WeightSequence::ones(N), grid, window);
    const double hi = std::log(1.05), lo = std::log(1.9);
    bool pass = good.con1.value.log() <= hi && good.con2.value.log() <= hi && ex3.con1.value.log() >= lo &&
                ex3.con2.value.log() >= lo && ex4.con1.value.log() >= lo && ex4.con2.value.log() >= lo;
    char buf[256];
    std::snprintf(buf, sizeof buf, "exp(1/(n+1)) con1 %.6g con2 %.6g; e^{±(n+1)} log con1 %.4g log con2 %.4g; "
                  "2^{±1} con1 %.4g con2 %.4g",
                  good.con1.value.value(), good.con2.value.value(), ex3.con1.value.log(), ex3.con2.value.log(),
                  ex4.con1.value.value(), ex4.con2.value.value());
    return {pass, buf};
}

Outcome criterion6() {
    const std::size_t N = 20001;
    LogSequence u;
    for (std::size_t n = 0; n < N; ++n) u.push_back(LogReal::from_value(n + 1.0));
    auto grid = LambdaGrid::default_grid();
    const double finest = grid.above_one().back();
    auto so = gmt::slow_oscillation_estimate(u, grid, TailWindow(1000, 10000));
    double at_finest = INFINITY;
    for (const auto& e : so.upper.per_lambda) {
        if (e.lambda == finest && e.value) at_finest = e.value->value();
    }
    auto landau = gmt::landau_estimates(u, TailWindow(1, 10000));
    bool pass = at_finest <= 1.02 && landau.bound.value() <= std::exp(1.0) + 1e-6;
    return {pass, fmt("slow oscillation at lambda=%.6g: %.6g; Landau bound %.10g", finest, at_finest,
                      landau.bound.value())};
}

Outcome criterion7() {
    auto g = oracle::rng(20260007);
    double worst = 0;
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t len = 1 + static_cast<std::size_t>(oracle::uniform(g, 0, 50));
        IFNSequence seq;
        std::vector<double> p{oracle::uniform(g, 0.1, 3.0)};
        for (std::size_t k = 0; k < len; ++k) seq.push_back(oracle::random_interior_ifn(g));
        for (std::size_t k = 1; k < len; ++k) p.push_back(oracle::uniform(g, 0.0, 3.0));
        auto t = gmt::ifwa_means(seq, WeightSequence(p));
        auto h = gmt::ifwg_means(seq, WeightSequence(p));
        auto tf = oracle::folded_ifwa(seq, p);
        auto hf = oracle::folded_ifwg(seq, p);
        for (std::size_t n = 0; n < len; ++n) {
            worst = std::max({worst, std::abs(t[n].mu() - tf[n].mu()), std::abs(t[n].nu() - tf[n].nu()),
                              std::abs(h[n].mu() - hf[n].mu()), std::abs(h[n].nu() - hf[n].nu())});
        }
    }
    return {worst <= 1e-10, fmt("max componentwise difference %.3g", worst)};
}

IFNSequence alternating_ifn(std::size_t length, bool geometric) {
    IFNSequence s;
    for (std::size_t n = 0; n < length; ++n) {
        double e = n % 2 == 0 ? 3.0 : 1.0;
        if (geometric) {
            s.emplace_back(std::pow(1.0 / 9.0, e), 1.0 - std::pow(0.25, e));
        } else {
            s.emplace_back(1.0 - std::pow(0.5, e), std::pow(1.0 / 3.0, e));
        }
    }
    return s;
}

Outcome criterion8() {
    const std::size_t N = 10001;
    auto seq = alternating_ifn(N, false);
    auto w = WeightSequence::ones(N);
    auto t = gmt::ifwa_means(seq, w);
    double first = std::max(std::abs(t[1].mu() - 0.75), std::abs(t[1].nu() - 1.0 / 9.0));
    TailWindow window(5000, 10000);
    auto v = gmt::np_oplus_verdict(seq, w, std::nullopt, 1e-3, window);
    double tail = std::max(std::abs(v.limit.mu() - 0.75), std::abs(v.limit.nu() - 1.0 / 9.0));
    auto plain = gmt::oplus_convergence_check(seq, IFN(0.75, 1.0 / 9.0), 1e-3, window);
    bool pass = first <= 1e-12 && v.pass && tail <= 1e-3 && !plain.converges && !plain.sandwich;
    return {pass, fmt("|t_1 - (3/4,1/9)| = %.3g, tail limit (%.6g, %.6g), plain check false", first, v.limit.mu(),
                      v.limit.nu())};
}

Outcome criterion9() {
    const std::size_t N = 10001;
    auto seq = alternating_ifn(N, true);
    auto w = WeightSequence::alternating(1, 3, N);
    auto h = gmt::ifwg_means(seq, w);
    double first = std::max(std::abs(h[1].mu() - 1.0 / 27.0), std::abs(h[1].nu() - 7.0 / 8.0));
    TailWindow window(5000, 10000);
    auto v = gmt::gp_otimes_verdict(seq, w, std::nullopt, 1e-3, window);
    double tail = std::max(std::abs(v.limit.mu() - 1.0 / 27.0), std::abs(v.limit.nu() - 7.0 / 8.0));
    auto plain = gmt::otimes_convergence_check(seq, IFN(1.0 / 27.0, 7.0 / 8.0), 1e-3, window);
    bool pass = first <= 1e-12 && v.pass && tail <= 1e-3 && !plain.converges && !plain.sandwich;
    return {pass, fmt("|h_1 - (1/27,7/8)| = %.3g, tail limit (%.6g, %.6g), plain check false", first, v.limit.mu(),
                      v.limit.nu())};
}

Outcome criterion10() {
    const std::size_t N = 10001;
    IFNSequence seq;
    for (std::size_t n = 0; n < N; ++n) seq.emplace_back(0.5 - 1.0 / (n + 3.0), 1.0 / 3.0 - 1.0 / (n + 3.0));
    TailWindow window(5000, 10000);
    const IFN xi1(0.5, 1.0 / 3.0);
    const IFN xi2(7.0 / 12.0, 5.0 / 12.0);
    auto eps = gmt::default_epsilon_grid();
    bool not_applicable =
        gmt::addition_limit_check(seq, xi1, gmt::EpsilonIFN(1e-3), window) == gmt::AdditionLimit::not_applicable;
    bool zx1 = gmt::zhangxu_limit_check(seq, xi1, eps, window);
    bool zx2 = gmt::zhangxu_limit_check(seq, xi2, eps, window);
    int segment_ok = 0, oplus_true = 0;
    for (int i = 0; i < 10; ++i) {
        double h = 5.0 / 6.0 + (1.0 / 6.0) * i / 9.0;
        IFN xi((h + 1.0 / 6.0) / 2, (h - 1.0 / 6.0) / 2);
        if (gmt::zhangxu_limit_check(seq, xi, eps, window)) ++segment_ok;
        if (gmt::oplus_convergence_check(seq, xi, 1e-3, window).converges) ++oplus_true;
    }
    bool oplus1 = gmt::oplus_convergence_check(seq, xi1, 1e-3, window).converges;
    bool oplus2 = gmt::oplus_convergence_check(seq, xi2, 1e-3, window).converges;
    // the segment's first point is xi1 itself
    bool pass = not_applicable && zx1 && zx2 && segment_ok == 10 && oplus1 && !oplus2 && oplus_true == 1;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "addition limit %s; total-order limit xi1 %d xi2 %d segment %d/10; componentwise xi1 %d xi2 %d "
                  "segment %d/10",
                  not_applicable ? "not applicable" : "applicable", zx1, zx2, segment_ok, oplus1, oplus2, oplus_true);
    return {pass, buf};
}

Outcome criterion11() {
    auto g = oracle::rng(20260011);
    const double slack = 1e-12;
    int violations = 0;
    for (int i = 0; i < 10000; ++i) {
        LogReal u = LogReal::from_log(oracle::uniform(g, -50, 50));
        LogReal v = LogReal::from_log(oracle::uniform(g, -50, 50));
        LogReal z = LogReal::from_log(oracle::uniform(g, -50, 50));
        LogReal b = LogReal::from_log(oracle::uniform(g, 0, 50));
        bool ok = true;
        ok &= gmt::mabs(u).log() >= -slack;
        ok &= std::abs(gmt::mabs(u.reciprocal()).log() - gmt::mabs(u).log()) <= slack;
        ok &= (gmt::mabs(u) <= b) == (b.reciprocal() <= u && u <= b);
        ok &= gmt::mabs(u * v).log() <= gmt::mabs(u).log() + gmt::mabs(v).log() + slack;
        ok &= gmt::mdist(u, v).log() >= -slack;
        ok &= gmt::mdist(u, u).log() == 0.0;
        ok &= (u == v) || gmt::mdist(u, v).log() > 0.0;
        ok &= std::abs(gmt::mdist(u, v).log() - gmt::mdist(v, u).log()) <= slack;
        ok &= gmt::mdist(u, v).log() <= gmt::mdist(u, z).log() + gmt::mdist(z, v).log() + slack;
        if (!ok) ++violations;
    }
    return {violations == 0, fmt("%g violations in 10000 draws", violations)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
        {"alternating e^{±(n+1)}: harmonic-weight transform and verdicts", criterion1},
        {"2^{±1}: plain and (2,1)-weighted limits", criterion2},
        {"decomposition identity on random instances", criterion3},
        {"regularity over random *convergent sequences and weight families", criterion4},
        {"Tauberian condition estimates separate recoverable from non-recoverable", criterion5},
        {"slow oscillation and Landau bound for n+1", criterion6},
        {"IFWA/IFWG closed forms against operation folds", criterion7},
        {"IFWA of the alternating IFN pair", criterion8},
        {"IFWG of the alternating IFN pair", criterion9},
        {"limit notions on the non-unique-limit IFN sequence", criterion10},
        {"multiplicative absolute value and distance properties", criterion11},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s AC%zu %s | %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
