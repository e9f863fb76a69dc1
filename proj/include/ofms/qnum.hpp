#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace ofms {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;

/// Exact element of the field Q(sqrt5): value = a + b*sqrt5 with rational
/// a, b, plus a distinguished +infinity.
///
/// Because sqrt5 is irrational, the (a, b) pair is a canonical
/// representation: two finite values are equal iff their pairs are equal.
/// Infinity compares strictly greater than every finite value, absorbs
/// addition/subtraction with finite values, and is rejected by
/// multiplication, division and negation.
class QNum {
public:
    QNum() : a_(0), b_(0) {}
    QNum(long n) : a_(n), b_(0) {}
    explicit QNum(Rational a) : a_(std::move(a)), b_(0) { canon(); }
    QNum(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) { canon(); }

    static QNum infinity();
    /// The golden ratio (1 + sqrt5)/2, the positive root of x = 1 + 1/x.
    static QNum phi();
    static QNum from_ratio(long num, long den);

    bool is_infinite() const { return inf_; }
    bool is_zero() const { return !inf_ && a_ == 0 && b_ == 0; }
    /// Rational component a; only meaningful for finite values.
    const Rational& rational_part() const { return a_; }
    /// Coefficient b of sqrt5; only meaningful for finite values.
    const Rational& surd_part() const { return b_; }

    /// Exact sign: -1, 0 or +1. Infinity yields +1. When a and b disagree
    /// in sign, decided by comparing a^2 against 5 b^2.
    int sign() const;
    /// Exact three-way comparison; total order with infinity on top.
    int compare(const QNum& other) const;

    QNum operator-() const;
    QNum& operator+=(const QNum& o);
    QNum& operator-=(const QNum& o);
    QNum& operator*=(const QNum& o);
    QNum& operator/=(const QNum& o);

    friend QNum operator+(QNum x, const QNum& y) { return x += y; }
    friend QNum operator-(QNum x, const QNum& y) { return x -= y; }
    friend QNum operator*(QNum x, const QNum& y) { return x *= y; }
    friend QNum operator/(QNum x, const QNum& y) { return x /= y; }

    friend bool operator==(const QNum& x, const QNum& y) {
        return x.compare(y) == 0;
    }
    friend bool operator!=(const QNum& x, const QNum& y) { return !(x == y); }
    friend bool operator<(const QNum& x, const QNum& y) {
        return x.compare(y) < 0;
    }
    friend bool operator>(const QNum& x, const QNum& y) { return y < x; }
    friend bool operator<=(const QNum& x, const QNum& y) { return !(y < x); }
    friend bool operator>=(const QNum& x, const QNum& y) { return !(x < y); }

    /// Nearest binary64 approximation. Reporting only, never used in
    /// decisions. Throws std::domain_error on infinity.
    double to_double() const;

    /// Canonical textual encoding: "inf", "3/2", "-5", or "1/2+1/2*sqrt5".
    std::string str() const;

    /// Parses any of the accepted encodings: decimal ("1.5"), rational
    /// ("3/2"), sqrt5 form ("1/2+1/2*sqrt5", "2*sqrt5", "1-1/2*sqrt5"),
    /// or "inf". Decimal strings become exact rationals.
    /// Throws std::invalid_argument on malformed input.
    static QNum parse(std::string_view text);

private:
    void canon() {
        a_.canonicalize();
        b_.canonicalize();
    }

    Rational a_;
    Rational b_;
    bool inf_ = false;
};

std::ostream& operator<<(std::ostream& os, const QNum& q);

} // namespace ofms
