#include <doctest.h>

#include <random>

#include "awbench/rational.hpp"

using awbench::Rational;

TEST_CASE("rational normal form") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(2, 4) == Rational(1, 2));
}

TEST_CASE("rational parse") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK(Rational::parse("-10/3").str() == "-10/3");
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    // a/b + c/d computed two ways agrees bit for bit.
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 50);
    for (int trial = 0; trial < 500; ++trial) {
        long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational direct = Rational(a, b) + Rational(c, d);
        Rational common(a * d + c * b, b * d);
        CHECK(direct == common);
        CHECK(direct.str() == common.str());
    }
}

TEST_CASE("rational field laws on random samples") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        Rational x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == Rational(0));
        if (!x.is_zero()) CHECK(x / x == Rational(1));
    }
}

TEST_CASE("rational does not overflow machine words") {
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(1000000);
    Rational inv = Rational(1) / big;
    CHECK(big * inv == Rational(1));
    CHECK(big.denominator() == "1");
}
