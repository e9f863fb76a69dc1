#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <ofms/numeric.hpp>
#include <ofms/qnum.hpp>

#include <gmpxx.h>

#include <random>

using namespace ofms;

namespace {

QNum q(long num, long den = 1) { return QNum::from_ratio(num, den); }

// Independent high-precision oracle: evaluate a + b*sqrt5 with 256-bit
// floats (roughly 77 decimal digits).
mpf_class hp_value(const QNum& x) {
    mpf_class sqrt5(5, 256);
    sqrt5 = sqrt(sqrt5);
    mpf_class a(x.rational_part(), 256);
    mpf_class b(x.surd_part(), 256);
    return a + b * sqrt5;
}

QNum random_qnum(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 40);
    return QNum(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
}

} // namespace

TEST_CASE("componentwise addition") {
    CHECK(QNum(Rational(1), Rational(0)) + QNum(Rational(0), Rational(1)) ==
          QNum(Rational(1), Rational(1)));
}

TEST_CASE("phi squares to phi plus one") {
    const QNum phi = QNum::phi();
    CHECK(phi == QNum(Rational(1, 2), Rational(1, 2)));
    CHECK(phi * phi == QNum(Rational(3, 2), Rational(1, 2)));
    CHECK(phi * phi == phi + QNum(1));
}

TEST_CASE("sqrt5 squares to 5") {
    const QNum sqrt5(Rational(0), Rational(1));
    CHECK(sqrt5 * sqrt5 == QNum(5));
}

TEST_CASE("reciprocal of phi is phi minus one") {
    const QNum phi = QNum::phi();
    CHECK(QNum(1) / phi == phi - QNum(1));
}

TEST_CASE("exact sign") {
    CHECK(QNum(Rational(2), Rational(-1)).sign() == -1); // 4 < 5
    CHECK(QNum().sign() == 0);
    const QNum phi_minus_one = QNum::phi() - QNum(1);
    CHECK(phi_minus_one == QNum(Rational(-1, 2), Rational(1, 2)));
    CHECK(phi_minus_one.sign() == +1);
    CHECK((QNum::phi() - q(8, 5)).sign() == +1);
    CHECK(QNum::infinity().sign() == +1);
}

TEST_CASE("sign agrees with a high-precision oracle on random pairs") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 10000; ++i) {
        const QNum x = random_qnum(rng);
        const QNum y = random_qnum(rng);
        const int via_sign = (x - y).sign();
        const int via_oracle = cmp(hp_value(x), hp_value(y));
        const int expected = via_oracle > 0 ? 1 : (via_oracle < 0 ? -1 : 0);
        REQUIRE(via_sign == expected);
        REQUIRE(x.compare(y) == expected);
    }
}

TEST_CASE("field axioms hold exactly on random triples") {
    std::mt19937_64 rng(7);
    auto same_repr = [](const QNum& a, const QNum& b) {
        return a.rational_part() == b.rational_part() && a.surd_part() == b.surd_part();
    };
    for (int i = 0; i < 2000; ++i) {
        const QNum x = random_qnum(rng);
        const QNum y = random_qnum(rng);
        const QNum z = random_qnum(rng);
        REQUIRE(same_repr((x + y) + z, x + (y + z)));
        REQUIRE(same_repr(x + y, y + x));
        REQUIRE(same_repr((x * y) * z, x * (y * z)));
        REQUIRE(same_repr(x * y, y * x));
        REQUIRE(same_repr(x * (y + z), x * y + x * z));
        if (!z.is_zero()) REQUIRE(same_repr((x / z) * z, x));
    }
}

TEST_CASE("float approximation") {
    CHECK(QNum(1).to_double() == 1.0);
    // Reference digits: phi = 1.61803398874989484820..., sqrt5 = 2.23606797749978969640...
    CHECK(QNum::phi().to_double() == doctest::Approx(1.6180339887498948482).epsilon(1e-12));
    CHECK(QNum(Rational(0), Rational(1)).to_double() ==
          doctest::Approx(2.2360679774997896964).epsilon(1e-12));
    CHECK_THROWS_AS((void)QNum::infinity().to_double(), std::domain_error);
}

TEST_CASE("infinity semantics") {
    const QNum inf = QNum::infinity();
    CHECK(inf.is_infinite());
    CHECK(inf > QNum(1000000));
    CHECK(inf.compare(inf) == 0);
    CHECK((inf + QNum(3)).is_infinite());
    CHECK((inf - QNum(3)).is_infinite());
    CHECK((QNum(3) + inf).is_infinite());
    CHECK_THROWS_AS(QNum(3) - inf, std::domain_error);
    CHECK_THROWS_AS(inf * QNum(2), std::domain_error);
    CHECK_THROWS_AS(QNum(2) * inf, std::domain_error);
    CHECK_THROWS_AS(inf / QNum(2), std::domain_error);
    CHECK_THROWS_AS(QNum(2) / inf, std::domain_error);
    CHECK_THROWS_AS(-inf, std::domain_error);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(QNum(1) / QNum(), std::domain_error);
}

TEST_CASE("division via conjugate is exact") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const QNum x = random_qnum(rng);
        const QNum y = random_qnum(rng);
        if (y.is_zero()) continue;
        CHECK((x / y) * y == x);
    }
}

TEST_CASE("textual encoding") {
    CHECK(QNum::parse("1.5") == q(3, 2));
    CHECK(QNum::parse("3/2") == q(3, 2));
    CHECK(QNum::parse("0.75") == q(3, 4));
    CHECK(QNum::parse("-1.5") == q(-3, 2));
    CHECK(QNum::parse("1/2+1/2*sqrt5") == QNum::phi());
    CHECK(QNum::parse("-11/10+1/2*sqrt5") == QNum(Rational(-11, 10), Rational(1, 2)));
    CHECK(QNum::parse("1-1/2*sqrt5") == QNum(Rational(1), Rational(-1, 2)));
    CHECK(QNum::parse("2*sqrt5") == QNum(Rational(0), Rational(2)));
    CHECK(QNum::parse("sqrt5") == QNum(Rational(0), Rational(1)));
    CHECK(QNum::parse("inf").is_infinite());
    CHECK(QNum::parse(" 42 ") == QNum(42));

    CHECK(QNum::phi().str() == "1/2+1/2*sqrt5");
    CHECK(q(3, 2).str() == "3/2");
    CHECK(QNum(5).str() == "5");
    CHECK(QNum::infinity().str() == "inf");
    CHECK(QNum(Rational(1), Rational(-1, 2)).str() == "1-1/2*sqrt5");
    CHECK(QNum(Rational(0), Rational(-2)).str() == "-2*sqrt5");

    CHECK_THROWS_AS(QNum::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1+2+3"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1*sqrt5+2*sqrt5"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(QNum::parse("1.5x"), std::invalid_argument);
}

TEST_CASE("encoding round-trips") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 2000; ++i) {
        const QNum x = random_qnum(rng);
        CHECK(QNum::parse(x.str()) == x);
    }
    CHECK(QNum::parse(QNum::infinity().str()).is_infinite());
}

TEST_CASE("float-mode scalar applies the comparison tolerance") {
    const FNum a(1.0);
    const FNum b(1.0 + 1e-12);
    reset_float_near_ties();
    CHECK(a.compare(b) == 0);
    CHECK(float_near_tie_count() == 1);
    CHECK(FNum(1.0).compare(FNum(1.1)) < 0);
    CHECK(FNum::infinity() > FNum(1e308));
    CHECK(FNum::infinity().compare(FNum::infinity()) == 0);
    CHECK(FNum::phi().value() == doctest::Approx(1.6180339887498949));
    CHECK(FNum::parse("1/2+1/2*sqrt5").value() == doctest::Approx(1.6180339887498949));
    CHECK_THROWS_AS(FNum::infinity() * FNum(2), std::domain_error);
    CHECK(FNum::parse(FNum(0.1).str()).value() == 0.1);
}
