#include <ofms/qnum.hpp>

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ofms {

QNum QNum::infinity() {
    QNum q;
    q.inf_ = true;
    return q;
}

QNum QNum::phi() {
    return QNum(Rational(1, 2), Rational(1, 2));
}

QNum QNum::from_ratio(long num, long den) {
    if (den == 0) throw std::domain_error("QNum: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return QNum(std::move(r));
}

int QNum::sign() const {
    if (inf_) return 1;
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Signs disagree: the sign of a + b*sqrt5 follows whichever of
    // a^2 and 5 b^2 is larger (they cannot be equal, sqrt5 is irrational).
    const Rational aa = a_ * a_;
    const Rational bb = 5 * b_ * b_;
    const int c = cmp(aa, bb);
    return c >= 0 ? sa : sb;
}

int QNum::compare(const QNum& other) const {
    if (inf_ && other.inf_) return 0;
    if (inf_) return 1;
    if (other.inf_) return -1;
    return QNum(a_ - other.a_, b_ - other.b_).sign();
}

QNum QNum::operator-() const {
    if (inf_) throw std::domain_error("QNum: cannot negate infinity");
    return QNum(-a_, -b_);
}

QNum& QNum::operator+=(const QNum& o) {
    if (inf_ || o.inf_) {
        *this = infinity();
        return *this;
    }
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QNum& QNum::operator-=(const QNum& o) {
    if (o.inf_) throw std::domain_error("QNum: cannot subtract infinity");
    if (inf_) return *this;
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QNum& QNum::operator*=(const QNum& o) {
    if (inf_ || o.inf_) throw std::domain_error("QNum: cannot multiply infinity");
    // (a1 + b1*sqrt5)(a2 + b2*sqrt5) = (a1 a2 + 5 b1 b2) + (a1 b2 + a2 b1)*sqrt5
    Rational a = a_ * o.a_ + 5 * b_ * o.b_;
    Rational b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

QNum& QNum::operator/=(const QNum& o) {
    if (inf_ || o.inf_) throw std::domain_error("QNum: cannot divide infinity");
    if (o.is_zero()) throw std::domain_error("QNum: division by zero");
    // Multiply by the conjugate: 1/(a + b*sqrt5) = (a - b*sqrt5)/(a^2 - 5 b^2).
    Rational norm = o.a_ * o.a_ - 5 * o.b_ * o.b_;
    QNum conj(o.a_ / norm, -o.b_ / norm);
    return *this *= conj;
}

double QNum::to_double() const {
    if (inf_) throw std::domain_error("QNum: infinity has no float value");
    static const double kSqrt5 = std::sqrt(5.0);
    return a_.get_d() + b_.get_d() * kSqrt5;
}

namespace {

std::string rational_str(const Rational& r) {
    return r.get_str();
}

void skip_ws(std::string_view s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

// Parses a signed rational: digits, digits/digits, or digits.digits.
Rational parse_rational(std::string_view s, size_t& pos) {
    skip_ws(s, pos);
    bool neg = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        neg = (s[pos] == '-');
        ++pos;
    }
    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        digits += s[pos++];
    }
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        std::string frac;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            frac += s[pos++];
        }
        if (digits.empty() && frac.empty())
            throw std::invalid_argument("QNum: malformed decimal");
        if (digits.empty()) digits = "0";
        mpz_class num(digits + frac);
        mpz_class den(1);
        for (size_t i = 0; i < frac.size(); ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    if (digits.empty()) throw std::invalid_argument("QNum: expected a number");
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        std::string den;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            den += s[pos++];
        }
        if (den.empty()) throw std::invalid_argument("QNum: malformed fraction");
        mpz_class d(den);
        if (d == 0) throw std::invalid_argument("QNum: zero denominator");
        Rational r(mpz_class(digits), d);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    Rational r{mpz_class(digits)};
    return neg ? Rational(-r) : r;
}

bool consume(std::string_view s, size_t& pos, std::string_view word) {
    if (s.substr(pos, word.size()) == word) {
        pos += word.size();
        return true;
    }
    return false;
}

} // namespace

std::string QNum::str() const {
    if (inf_) return "inf";
    if (b_ == 0) return rational_str(a_);
    std::string surd = rational_str(abs(b_)) + "*sqrt5";
    if (a_ == 0) return (sgn(b_) < 0 ? "-" : "") + surd;
    return rational_str(a_) + (sgn(b_) < 0 ? "-" : "+") + surd;
}

QNum QNum::parse(std::string_view text) {
    size_t pos = 0;
    skip_ws(text, pos);
    if (consume(text, pos, "inf")) {
        skip_ws(text, pos);
        if (pos != text.size()) throw std::invalid_argument("QNum: trailing input");
        return infinity();
    }

    // term := [sign] (rational ["*sqrt5"] | "sqrt5")
    auto parse_term = [&](bool allow_sign_prefix, int forced_sign, Rational& a,
                          Rational& b, bool& saw_surd) {
        int sign = forced_sign;
        skip_ws(text, pos);
        if (allow_sign_prefix && pos < text.size() &&
            (text[pos] == '+' || text[pos] == '-')) {
            sign = (text[pos] == '-') ? -1 : 1;
            ++pos;
        }
        skip_ws(text, pos);
        Rational mag;
        if (consume(text, pos, "sqrt5")) {
            mag = 1;
            if (saw_surd) throw std::invalid_argument("QNum: repeated sqrt5 term");
            saw_surd = true;
            b += sign < 0 ? Rational(-mag) : mag;
            return;
        }
        mag = parse_rational(text, pos);
        if (consume(text, pos, "*sqrt5")) {
            if (saw_surd) throw std::invalid_argument("QNum: repeated sqrt5 term");
            saw_surd = true;
            b += sign < 0 ? Rational(-mag) : mag;
        } else {
            a += sign < 0 ? Rational(-mag) : mag;
        }
    };

    Rational a(0), b(0);
    bool saw_surd = false;
    parse_term(true, 1, a, b, saw_surd);
    skip_ws(text, pos);
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        parse_term(true, 1, a, b, saw_surd);
    }
    skip_ws(text, pos);
    if (pos != text.size()) throw std::invalid_argument("QNum: trailing input");
    return QNum(std::move(a), std::move(b));
}

std::ostream& operator<<(std::ostream& os, const QNum& q) {
    return os << q.str();
}

} // namespace ofms
