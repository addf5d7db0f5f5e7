#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <stdexcept>

#include "hcent/errors.hpp"
#include "hcent/rational.hpp"
#include "hcent/verify.hpp"

using hcent::Rational;
using hcent::SplitMix64;

TEST_CASE("construction normalizes to lowest terms, positive denominator") {
    CHECK(Rational() == Rational(0, 1));
    CHECK(Rational().to_string() == "0/1");
    CHECK(Rational(6, 4).to_string() == "3/2");
    CHECK(Rational(-6, 4).to_string() == "-3/2");
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational(-6, -4).to_string() == "3/2");
    CHECK(Rational(0, -7).to_string() == "0/1");
    CHECK(Rational(5).to_string() == "5/1");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("arithmetic matches brute cross-multiplication on random triples") {
    SplitMix64 rng(0x5eedu);
    const auto small = [&rng] {
        const long num = static_cast<long>(rng.next() % 41) - 20;
        const long den = 1 + static_cast<long>(rng.next() % 24);
        return std::pair(num, den);
    };
    for (int trial = 0; trial < 500; ++trial) {
        const auto [a, b] = small();
        const auto [c, d] = small();
        const auto [e, f] = small();

        // brute-force addition: cross multiply, then reduce by gcd
        long num = a * d + c * b;
        long den = b * d;
        const long g = std::gcd(num, den);
        Rational brute(num / g, den / g);
        CHECK(Rational(a, b) + Rational(c, d) == brute);

        // commutativity and associativity
        const Rational x(a, b), y(c, d), z(e, f);
        CHECK(x + y == y + x);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("subtraction, division, comparisons") {
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3) > Rational(1, 2));
    CHECK(Rational(5, 10) <= Rational(1, 2));
    CHECK(Rational(5, 10) >= Rational(1, 2));
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("serialization round trips") {
    CHECK(Rational::parse("5/6") == Rational(5, 6));
    CHECK(Rational::parse("-5/6") == Rational(-5, 6));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("4/6") == Rational(2, 3)); // normalized on parse

    SplitMix64 rng(0xf00du);
    for (int trial = 0; trial < 200; ++trial) {
        const long num = static_cast<long>(rng.next() % 2001) - 1000;
        const long den = 1 + static_cast<long>(rng.next() % 999);
        const Rational r(num, den);
        CHECK(Rational::parse(r.to_string()) == r);
    }

    CHECK_THROWS_AS(Rational::parse(""), hcent::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), hcent::ParseError);
    CHECK_THROWS_AS(Rational::parse("a/b"), hcent::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), hcent::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), hcent::ParseError);
}

TEST_CASE("decimal rendering is 12 significant digits, presentation only") {
    CHECK(Rational(2, 3).to_decimal() == "0.666666666667");
    CHECK(Rational(5, 6).to_decimal() == "0.833333333333");
    CHECK(Rational(3, 4).to_decimal() == "0.75");
    CHECK(Rational(1).to_decimal() == "1");
    CHECK(Rational(0).to_decimal() == "0");
    CHECK(Rational(-1, 3).to_decimal() == "-0.333333333333");
}

TEST_CASE("huge intermediate values stay exact") {
    // sum of 1/k over [1, 200] has a denominator far beyond 64 bits
    Rational sum;
    for (long k = 1; k <= 200; ++k)
        sum += Rational(1, k);
    Rational back(sum);
    for (long k = 200; k >= 1; --k)
        back -= Rational(1, k);
    CHECK(back == Rational(0));
}
