#include "gmt/mcore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gmt {

LogReal LogReal::from_value(double value) {
    if (!std::isfinite(value) || value <= 0.0) {
        throw std::invalid_argument("LogReal requires a finite positive value, got " + std::to_string(value));
    }
    return LogReal(std::log(value));
}

double LogReal::value() const { return std::exp(log_); }

LogSequence to_log_sequence(std::span<const double> values) {
    LogSequence out;
    out.reserve(values.size());
    for (double v : values) out.push_back(LogReal::from_value(v));
    return out;
}

MTolerance::MTolerance(double value) : value_(value), log_(std::log(value)) {
    if (!(value > 1.0) || !std::isfinite(value)) {
        throw std::invalid_argument("multiplicative tolerance must be a finite value > 1");
    }
}

TailWindow::TailWindow(std::size_t start, std::size_t end) : start_(start), end_(end) {
    if (start > end) throw std::invalid_argument("window start exceeds window end");
}

TailWindow TailWindow::last_half(std::size_t length) {
    if (length == 0) throw std::invalid_argument("cannot window an empty sequence");
    return TailWindow(length / 2, length - 1);
}

void TailWindow::require_within(std::size_t length) const {
    if (end_ >= length) {
        throw std::out_of_range("window [" + std::to_string(start_) + ", " + std::to_string(end_) +
                                "] exceeds sequence of length " + std::to_string(length));
    }
}

LogReal mdelta(std::span<const LogReal> seq, std::size_t n) {
    if (n >= seq.size()) throw std::out_of_range("mdelta index out of range");
    if (n == 0) return seq[0];
    return seq[n] / seq[n - 1];
}

double max_log_deviation(std::span<const LogReal> seq, LogReal limit, TailWindow window) {
    window.require_within(seq.size());
    double worst = 0.0;
    for (std::size_t n = window.start(); n <= window.end(); ++n) {
        worst = std::max(worst, mdist(seq[n], limit).log());
    }
    return worst;
}

bool star_converges_to(std::span<const LogReal> seq, LogReal limit, MTolerance tol, TailWindow window) {
    return max_log_deviation(seq, limit, window) < tol.log();
}

bool is_mstar_bounded(std::span<const LogReal> seq, LogReal bound, TailWindow window) {
    if (!(bound.log() > 0.0)) throw std::invalid_argument("*bound must exceed 1");
    window.require_within(seq.size());
    for (std::size_t n = window.start(); n <= window.end(); ++n) {
        if (!(mabs(seq[n]) < bound)) return false;
    }
    return true;
}

}  // namespace gmt
