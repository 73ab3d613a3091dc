#include "gmt/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <fstream>
#include <stdexcept>
#include <string>

#include "gmt/numeric.hpp"
#include "gmt/text.hpp"

namespace gmt {

WeightSequence::WeightSequence(std::vector<double> weights) : p_(std::move(weights)) {
    if (p_.empty()) throw std::invalid_argument("weight sequence is empty");
    if (!(p_[0] > 0.0)) throw std::invalid_argument("weight p_0 must be positive");
    cumulative_.reserve(p_.size());
    CompensatedSum sum;
    for (std::size_t n = 0; n < p_.size(); ++n) {
        if (!std::isfinite(p_[n]) || p_[n] < 0.0) {
            throw std::invalid_argument("weight p_" + std::to_string(n) + " must be finite and nonnegative");
        }
        sum.add(p_[n]);
        cumulative_.push_back(sum.value());
    }
}

WeightSequence WeightSequence::ones(std::size_t length) { return WeightSequence(std::vector<double>(length, 1.0)); }

WeightSequence WeightSequence::harmonic(std::size_t length) {
    std::vector<double> p(length);
    for (std::size_t n = 0; n < length; ++n) p[n] = 1.0 / static_cast<double>(n + 1);
    return WeightSequence(std::move(p));
}

WeightSequence WeightSequence::alternating(double even_weight, double odd_weight, std::size_t length) {
    std::vector<double> p(length);
    for (std::size_t n = 0; n < length; ++n) p[n] = (n % 2 == 0) ? even_weight : odd_weight;
    return WeightSequence(std::move(p));
}

WeightSequence WeightSequence::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open weight file " + path.string());
    std::vector<double> p;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto text = trim(line);
        if (text.empty() || text.front() == '#') continue;
        p.push_back(parse_double(text, path.string() + ":" + std::to_string(line_no)));
    }
    return WeightSequence(std::move(p));
}

double WeightSequence::weight(std::size_t n) const {
    if (n >= p_.size()) throw std::out_of_range("weight index out of range");
    return p_[n];
}

double WeightSequence::partial_sum(std::size_t n) const {
    if (n >= cumulative_.size()) throw std::out_of_range("partial sum index out of range");
    return cumulative_[n];
}

WeightSequence WeightSequence::prefix(std::size_t length) const {
    if (length > p_.size()) throw std::out_of_range("weight prefix longer than sequence");
    return WeightSequence(std::vector<double>(p_.begin(), p_.begin() + static_cast<std::ptrdiff_t>(length)));
}

std::size_t lambda_index(double lambda, std::size_t n) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("lambda must be positive");
    return static_cast<std::size_t>(std::floor(lambda * static_cast<double>(n)));
}

LambdaGrid::LambdaGrid(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("lambda grid is empty");
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v) || v == 1.0) {
            throw std::invalid_argument("lambda grid values must be positive and different from 1");
        }
    }
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

LambdaGrid LambdaGrid::dyadic(int finest) {
    if (finest < 1) throw std::invalid_argument("dyadic grid needs at least one level");
    std::vector<double> v{0.5, 2.0};
    for (int j = 1; j <= finest; ++j) {
        double step = std::ldexp(1.0, -j);
        v.push_back(1.0 + step);
        v.push_back(1.0 - step);
    }
    return LambdaGrid(std::move(v));
}

std::vector<double> LambdaGrid::above_one() const {
    std::vector<double> out;
    for (auto it = values_.rbegin(); it != values_.rend(); ++it) {
        if (*it > 1.0) out.push_back(*it);
    }
    return out;
}

std::vector<double> LambdaGrid::below_one() const {
    std::vector<double> out;
    for (double v : values_) {
        if (v < 1.0) out.push_back(v);
    }
    return out;
}

SvaPlusEstimate sva_plus_estimate(const WeightSequence& w, const LambdaGrid& grid, TailWindow window,
                                  SvaPlusOptions options) {
    window.require_within(w.size());
    SvaPlusEstimate result{{}, options.floor, true};
    for (double lambda : grid.values()) {
        double inf = std::numeric_limits<double>::infinity();
        for (std::size_t n = window.start(); n <= window.end(); ++n) {
            std::size_t m = lambda_index(lambda, n);
            if (m >= w.size()) {
                throw std::out_of_range("lambda index " + std::to_string(m) + " for lambda=" +
                                        std::to_string(lambda) + " exceeds available weights");
            }
            inf = std::min(inf, std::abs(w.partial_sum(m) / w.partial_sum(n) - 1.0));
        }
        result.per_lambda.push_back({lambda, inf});
        if (!(inf > options.floor)) result.verdict = false;
    }
    return result;
}

}  // namespace gmt
