#include <doctest.h>

#include <limits>
#include <random>

#include "cgobstruct/rational.hpp"

using cgo::Rational;

TEST_CASE("rational normalises sign and common factors")
{
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(-6725, 83).to_string() == "-6725/83");
    CHECK(Rational(14, 7).to_string() == "2");
    CHECK(Rational(-5, 3).den() == 3);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering")
{
    CHECK(Rational(-3) + Rational(4, 3) == Rational(-5, 3));
    CHECK(Rational(1, 6) - Rational(1, 3) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK(Rational(5, 7) < Rational(3, 4));
    CHECK(Rational(-6725, 83) < Rational(-81));
    CHECK(Rational::parse("-59/7") == Rational(-59, 7));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
}

TEST_CASE("rational escalates past 64 bits and comes back")
{
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    Rational a(big);
    Rational wide = a * a;
    CHECK_FALSE(wide.is_small());
    CHECK_THROWS_AS(wide.num(), std::overflow_error);
    CHECK(wide.big_num() == cgo::BigInt(big) * big);
    Rational back = wide / a;
    CHECK(back.is_small());
    CHECK(back == a);
    CHECK(wide > a);
    CHECK((a + a) - a == a);
    CHECK((Rational(1, big) * Rational(1, big)).big_den() == cgo::BigInt(big) * big);
}

TEST_CASE("rational ring laws on random small fractions")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
    std::uniform_int_distribution<std::int64_t> den(1, 500);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        const double diff = (a + b).to_double() - (a.to_double() + b.to_double());
        CHECK(std::abs(diff) < 1e-9);
    }
}
