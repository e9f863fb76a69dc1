#pragma once

#include <ofms/qnum.hpp>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ofms {

enum class NumericMode { Exact, Float };

inline std::string_view numeric_mode_name(NumericMode m) {
    return m == NumericMode::Exact ? "exact" : "float";
}

/// Count of float-mode comparisons that were decided "equal" by tolerance
/// while the operands were not bit-identical. Thread-local so parallel fuzz
/// workers do not interfere; reset before a run to detect near-threshold
/// decisions in that run.
inline thread_local std::uint64_t g_float_near_ties = 0;

inline std::uint64_t float_near_tie_count() { return g_float_near_ties; }
inline void reset_float_near_ties() { g_float_near_ties = 0; }

/// Binary64 stand-in for QNum used by the float numeric mode. All threshold
/// comparisons treat values within 1e-9 relative distance as equal; exact
/// mode has no such fuzz. Infinity semantics mirror QNum (no negative
/// infinity, no infinite multiplication/division).
class FNum {
public:
    static constexpr double kTolerance = 1e-9;

    FNum() : v_(0.0) {}
    FNum(long n) : v_(static_cast<double>(n)) {}
    explicit FNum(double v) : v_(v) {}

    static FNum infinity() { return FNum(std::numeric_limits<double>::infinity()); }
    static FNum phi() { return FNum((1.0 + std::sqrt(5.0)) / 2.0); }
    static FNum from_ratio(long num, long den) {
        if (den == 0) throw std::domain_error("FNum: zero denominator");
        return FNum(static_cast<double>(num) / static_cast<double>(den));
    }
    static FNum from_qnum(const QNum& q) {
        return q.is_infinite() ? infinity() : FNum(q.to_double());
    }

    bool is_infinite() const { return std::isinf(v_); }
    bool is_zero() const { return compare(FNum()) == 0; }
    double value() const { return v_; }

    int sign() const { return compare(FNum()); }

    int compare(const FNum& o) const {
        if (v_ == o.v_) return 0;
        if (std::isinf(v_) || std::isinf(o.v_)) return v_ < o.v_ ? -1 : 1;
        const double scale = std::max({1.0, std::fabs(v_), std::fabs(o.v_)});
        if (std::fabs(v_ - o.v_) <= kTolerance * scale) {
            ++g_float_near_ties;
            return 0;
        }
        return v_ < o.v_ ? -1 : 1;
    }

    FNum operator-() const {
        if (is_infinite()) throw std::domain_error("FNum: cannot negate infinity");
        return FNum(-v_);
    }
    FNum& operator+=(const FNum& o) {
        v_ += o.v_;
        return *this;
    }
    FNum& operator-=(const FNum& o) {
        if (o.is_infinite()) throw std::domain_error("FNum: cannot subtract infinity");
        v_ -= o.v_;
        return *this;
    }
    FNum& operator*=(const FNum& o) {
        if (is_infinite() || o.is_infinite())
            throw std::domain_error("FNum: cannot multiply infinity");
        v_ *= o.v_;
        return *this;
    }
    FNum& operator/=(const FNum& o) {
        if (is_infinite() || o.is_infinite())
            throw std::domain_error("FNum: cannot divide infinity");
        if (o.v_ == 0.0) throw std::domain_error("FNum: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend FNum operator+(FNum x, const FNum& y) { return x += y; }
    friend FNum operator-(FNum x, const FNum& y) { return x -= y; }
    friend FNum operator*(FNum x, const FNum& y) { return x *= y; }
    friend FNum operator/(FNum x, const FNum& y) { return x /= y; }

    friend bool operator==(const FNum& x, const FNum& y) { return x.compare(y) == 0; }
    friend bool operator!=(const FNum& x, const FNum& y) { return !(x == y); }
    friend bool operator<(const FNum& x, const FNum& y) { return x.compare(y) < 0; }
    friend bool operator>(const FNum& x, const FNum& y) { return y < x; }
    friend bool operator<=(const FNum& x, const FNum& y) { return !(y < x); }
    friend bool operator>=(const FNum& x, const FNum& y) { return !(x < y); }

    double to_double() const {
        if (is_infinite()) throw std::domain_error("FNum: infinity has no float value");
        return v_;
    }

    std::string str() const {
        if (is_infinite()) return "inf";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v_);
        return buf;
    }

    static FNum parse(std::string_view text) { return from_qnum(QNum::parse(text)); }

private:
    double v_;
};

/// Numeric scalar usable throughout the simulator: QNum (exact mode) or
/// FNum (float mode).
template <typename N>
concept Numeric = requires(const N& x, const N& y) {
    { x.compare(y) } -> std::same_as<int>;
    { x.is_infinite() } -> std::same_as<bool>;
    { N::infinity() } -> std::same_as<N>;
    { N::phi() } -> std::same_as<N>;
    { N::from_ratio(1L, 2L) } -> std::same_as<N>;
    { x.to_double() } -> std::same_as<double>;
    { x.str() } -> std::same_as<std::string>;
    { x + y } -> std::same_as<N>;
    { x * y } -> std::same_as<N>;
};

} // namespace ofms
