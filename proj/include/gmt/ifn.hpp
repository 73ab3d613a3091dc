#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gmt/mcore.hpp"
#include "gmt/tauber.hpp"
#include "gmt/weights.hpp"

namespace gmt {

/// Slack used for simplex validation, tie detection in the orders and the subtraction guard.
inline constexpr double kIfnSlack = 1e-12;

/// Intuitionistic fuzzy number (mu, nu): mu, nu >= 0 and mu + nu <= 1.
class IFN {
public:
    /// Rejects values outside the simplex by more than kIfnSlack; smaller
    /// rounding overshoot is moved onto the boundary.
    IFN(double mu, double nu);

    double mu() const { return mu_; }
    double nu() const { return nu_; }
    double score() const { return mu_ - nu_; }
    double accuracy() const { return mu_ + nu_; }
    double hesitancy() const { return 1.0 - mu_ - nu_; }

    bool operator==(const IFN&) const = default;

    static IFN zero() { return IFN(0.0, 1.0); }  // additive identity (0,1)
    static IFN one() { return IFN(1.0, 0.0); }   // multiplicative identity (1,0)

private:
    double mu_;
    double nu_;
};

using IFNSequence = std::vector<IFN>;

enum class Ordering { less, equal, greater };
enum class PartialOrdering { less, equal, greater, incomparable };

/// Score first, accuracy as the tie-break. Differences within kIfnSlack count as ties.
Ordering total_order_cmp(const IFN& a, const IFN& b);

/// Componentwise order: a >_L b iff mu_a > mu_b and nu_a < nu_b.
PartialOrdering partial_order_cmp(const IFN& a, const IFN& b);

/// a <_L b
bool less_l(const IFN& a, const IFN& b);

IFN add(const IFN& a, const IFN& b);
/// Guarded inverse of add; (0,1) when the quotient form is not an IFN.
IFN subtract(const IFN& a, const IFN& b);
/// Whether subtract(a, b) takes the quotient branch.
bool subtraction_defined(const IFN& a, const IFN& b);
IFN multiply(const IFN& a, const IFN& b);
/// c a = (1 - (1-mu)^c, nu^c); requires a <_L (1,0) and c >= 0.
IFN scalar_mul(double c, const IFN& a);
/// a^c = (mu^c, 1 - (1-nu)^c); requires a >_L (0,1) and c >= 0.
IFN power(const IFN& a, double c);

/// eps-bar in (0, 1]; additive form (eps, 1-eps) and multiplicative form (1-eps, eps).
class EpsilonIFN {
public:
    explicit EpsilonIFN(double eps);
    double value() const { return eps_; }
    IFN additive() const { return IFN(eps_, 1.0 - eps_); }
    IFN multiplicative() const { return IFN(1.0 - eps_, eps_); }

private:
    double eps_;
};

/// a = xi (+) beta for some IFN beta, witnessed by beta = a (-) xi.
bool in_addition_region(const IFN& a, const IFN& xi);

enum class AdditionLimit { holds, not_applicable, fails };

/// Addition-limit test on the window: not_applicable unless every term lies in the
/// addition region of xi; otherwise holds iff alpha_n (-) xi <_L eps-bar throughout.
AdditionLimit addition_limit_check(std::span<const IFN> seq, const IFN& xi, EpsilonIFN eps, TailWindow window);

/// Total-order convergence test for one eps (eps != (0,1)):
///   alpha_n > xi  =>  alpha_n < xi (+) eps
///   alpha_n < xi  =>  xi < alpha_n (+) eps
bool zhangxu_limit_check(std::span<const IFN> seq, const IFN& xi, const IFN& eps, TailWindow window);
/// Conjunction over a grid of eps values.
bool zhangxu_limit_check(std::span<const IFN> seq, const IFN& xi, std::span<const IFN> eps_grid, TailWindow window);
/// Sample of eps values, several of them close to (0,1).
std::vector<IFN> default_epsilon_grid();

struct ComponentConvergence {
    /// |mu_n - mu_xi| < tol and |nu_n - nu_xi| < tol on the window
    bool converges;
    /// The order-based eps-bar sandwich with eps = tol, evaluated independently.
    bool sandwich;
    double max_mu_deviation;
    double max_nu_deviation;
};

/// Requires xi <_L (1,0).
ComponentConvergence oplus_convergence_check(std::span<const IFN> seq, const IFN& xi, double tol, TailWindow window);
/// Requires xi >_L (0,1).
ComponentConvergence otimes_convergence_check(std::span<const IFN> seq, const IFN& xi, double tol, TailWindow window);

/// t_n = (1 - W(1-mu)_n, W(nu)_n), W the weighted geometric mean; every term must be <_L (1,0).
IFNSequence ifwa_means(std::span<const IFN> seq, const WeightSequence& w);
/// h_n = (W(mu)_n, 1 - W(1-nu)_n); every term must be >_L (0,1).
IFNSequence ifwg_means(std::span<const IFN> seq, const WeightSequence& w);

struct IfnVerdict {
    bool pass;
    IFN limit;
    ComponentConvergence evidence;
    TailWindow window;
    double tolerance;
};

/// (N,p)-(+) convergence of the IFWA means towards xi (defaults to t at the window end).
IfnVerdict np_oplus_verdict(std::span<const IFN> seq, const WeightSequence& w, std::optional<IFN> xi, double tol,
                            TailWindow window);
/// (G,p)-(x) convergence of the IFWG means towards xi (defaults to h at the window end).
IfnVerdict gp_otimes_verdict(std::span<const IFN> seq, const WeightSequence& w, std::optional<IFN> xi, double tol,
                             TailWindow window);

enum class MeanMode { oplus, otimes };

struct IfnTauberReport {
    MeanMode mode;
    /// oplus: (1 - mu_n); otimes: (mu_n)
    TauberReport first;
    /// oplus: (nu_n); otimes: (1 - nu_n)
    TauberReport second;
    bool recovery;
};

/// Component sequences that the given mode runs through the real-valued machinery.
std::pair<LogSequence, LogSequence> component_sequences(std::span<const IFN> seq, MeanMode mode);

IfnTauberReport ifn_tauber_report(std::span<const IFN> seq, const WeightSequence& w, const LambdaGrid& grid,
                                  TailWindow window, MeanMode mode, TauberThresholds thresholds = {});

}  // namespace gmt
