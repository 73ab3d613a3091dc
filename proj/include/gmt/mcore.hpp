#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

namespace gmt {

/// A strictly positive real held as its natural logarithm.
///
/// Every finite log value is a valid element of (0, inf), so sequences such as
/// e^{(-1)^n (n+1)} stay representable long after exp() would overflow.
class LogReal {
public:
    constexpr LogReal() = default;

    static constexpr LogReal from_log(double log_value) { return LogReal(log_value); }
    /// Throws std::invalid_argument unless value is finite and > 0.
    static LogReal from_value(double value);

    constexpr double log() const { return log_; }
    /// Plain-real view for I/O; may overflow to inf or underflow to 0.
    double value() const;

    constexpr LogReal operator*(LogReal o) const { return LogReal(log_ + o.log_); }
    constexpr LogReal operator/(LogReal o) const { return LogReal(log_ - o.log_); }
    constexpr LogReal reciprocal() const { return LogReal(-log_); }
    constexpr LogReal pow(double c) const { return LogReal(c * log_); }

    constexpr auto operator<=>(const LogReal&) const = default;

private:
    constexpr explicit LogReal(double l) : log_(l) {}
    double log_ = 0.0;
};

using LogSequence = std::vector<LogReal>;

LogSequence to_log_sequence(std::span<const double> values);

/// Multiplicative epsilon; always > 1.
class MTolerance {
public:
    explicit MTolerance(double value);
    double value() const { return value_; }
    double log() const { return log_; }

    static MTolerance exact_default() { return MTolerance(1.0 + 1e-6); }

private:
    double value_;
    double log_;
};

/// Inclusive index range used as finite evidence for statements about n -> inf.
class TailWindow {
public:
    TailWindow(std::size_t start, std::size_t end);

    std::size_t start() const { return start_; }
    std::size_t end() const { return end_; }
    std::size_t size() const { return end_ - start_ + 1; }

    /// Last half of a sequence of the given length: [length/2, length-1].
    static TailWindow last_half(std::size_t length);

    /// Throws std::out_of_range if the window does not fit a sequence of this length.
    void require_within(std::size_t length) const;

    bool operator==(const TailWindow&) const = default;

private:
    std::size_t start_;
    std::size_t end_;
};

// |u|*: u if u >= 1, else 1/u.
constexpr LogReal mabs(LogReal u) { return LogReal::from_log(u.log() < 0 ? -u.log() : u.log()); }

// d*(u, v) = |u/v|*.
constexpr LogReal mdist(LogReal u, LogReal v) { return mabs(u / v); }

/// u_n / u_{n-1} for n >= 1, u_0 for n = 0.
LogReal mdelta(std::span<const LogReal> seq, std::size_t n);

bool star_converges_to(std::span<const LogReal> seq, LogReal limit, MTolerance tol, TailWindow window);

/// True iff |u_n|* < bound for every n in the window. bound must exceed 1.
bool is_mstar_bounded(std::span<const LogReal> seq, LogReal bound, TailWindow window);

/// Largest log-distance log d*(u_n, limit) over the window.
double max_log_deviation(std::span<const LogReal> seq, LogReal limit, TailWindow window);

}  // namespace gmt
