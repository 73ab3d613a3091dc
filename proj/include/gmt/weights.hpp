#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "gmt/mcore.hpp"

namespace gmt {

/// Nonnegative weights p_n with p_0 > 0 and their cumulative sums P_n.
class WeightSequence {
public:
    explicit WeightSequence(std::vector<double> weights);

    static WeightSequence ones(std::size_t length);
    /// p_n = 1/(n+1)
    static WeightSequence harmonic(std::size_t length);
    /// p_n = even_weight for even n, odd_weight for odd n.
    static WeightSequence alternating(double even_weight, double odd_weight, std::size_t length);
    /// One decimal weight per line; blank lines and '#' comments are skipped.
    static WeightSequence from_file(const std::filesystem::path& path);

    std::size_t size() const { return p_.size(); }
    double weight(std::size_t n) const;
    /// P_n; throws std::out_of_range past the materialized length.
    double partial_sum(std::size_t n) const;

    std::span<const double> weights() const { return p_; }
    std::span<const double> partial_sums() const { return cumulative_; }

    /// First `length` weights as a new sequence.
    WeightSequence prefix(std::size_t length) const;

private:
    std::vector<double> p_;
    std::vector<double> cumulative_;
};

/// floor(lambda * n)
std::size_t lambda_index(double lambda, std::size_t n);

/// Finite sample of lambda values standing in for lambda -> 1 from either side.
class LambdaGrid {
public:
    explicit LambdaGrid(std::vector<double> values);

    /// {1 +- 2^-j : j = 1..finest} together with {1/2, 2}.
    static LambdaGrid dyadic(int finest = 6);
    static LambdaGrid default_grid() { return dyadic(6); }

    std::span<const double> values() const { return values_; }
    /// lambda > 1, descending towards 1.
    std::vector<double> above_one() const;
    /// lambda < 1, ascending towards 1.
    std::vector<double> below_one() const;

private:
    std::vector<double> values_;
};

struct LambdaRatioEstimate {
    double lambda;
    /// min over the window of |P_{lambda_n}/P_n - 1|
    double infimum;
};

struct SvaPlusEstimate {
    std::vector<LambdaRatioEstimate> per_lambda;
    double floor;
    /// Every per-lambda infimum exceeds the floor. An estimate, not a proof.
    bool verdict;
};

struct SvaPlusOptions {
    double floor = 1e-3;
};

SvaPlusEstimate sva_plus_estimate(const WeightSequence& w, const LambdaGrid& grid, TailWindow window,
                                  SvaPlusOptions options = {});

}  // namespace gmt
