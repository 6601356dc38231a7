#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/rational.hpp"

#include <random>
#include <stdexcept>

using nuplus::BigInt;
using nuplus::Rational;

TEST_CASE("construction reduces to canonical form") {
    CHECK(Rational(BigInt(210), BigInt(60)).str() == "7/2");
    CHECK(Rational(BigInt(-6), BigInt(-24)).str() == "1/4");
    CHECK(Rational(BigInt(0), BigInt(5)).str() == "0");
    CHECK(Rational(BigInt(3), BigInt(-6)).str() == "-1/2");

    Rational r(BigInt(210), BigInt(60));
    CHECK(r.num() == 7);
    CHECK(r.den() == 2);
}

TEST_CASE("zero denominator is a construction error") {
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
}

TEST_CASE("rendering omits unit denominators") {
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(-3).str() == "-3");
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(BigInt(-1), BigInt(10)).str() == "-1/10");
    CHECK(Rational(BigInt(7), BigInt(2)).str() == "7/2");
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(BigInt(2), BigInt(5)) + Rational(BigInt(1), BigInt(6)) ==
          Rational(BigInt(17), BigInt(30)));
    CHECK(Rational(BigInt(7), BigInt(2)) - Rational(BigInt(7), BigInt(2)) == Rational(0));
    CHECK(Rational(BigInt(2), BigInt(3)) * Rational(BigInt(9), BigInt(4)) ==
          Rational(BigInt(3), BigInt(2)));
    CHECK(-Rational(BigInt(1), BigInt(3)) == Rational(BigInt(-1), BigInt(3)));
}

TEST_CASE("comparison is a total order on values") {
    CHECK(Rational(BigInt(-1), BigInt(10)) < Rational(BigInt(1), BigInt(6)));
    CHECK(Rational(BigInt(1), BigInt(3)) > Rational(BigInt(1), BigInt(4)));
    CHECK(Rational(BigInt(2), BigInt(6)) <= Rational(BigInt(1), BigInt(3)));
    CHECK(Rational(0) < Rational(1));
    CHECK(Rational(-2) < Rational(BigInt(-1), BigInt(2)));
}

TEST_CASE("equal values have identical representations") {
    Rational a(BigInt(2), BigInt(6));
    Rational b(BigInt(1), BigInt(3));
    CHECK(a == b);
    CHECK(a.num() == b.num());
    CHECK(a.den() == b.den());
}

TEST_CASE("no overflow on large operands") {
    Rational big(BigInt("123456789012345678901234567890"), BigInt(7));
    Rational sum = big + big;
    CHECK(sum.str() == "246913578024691357802469135780/7");
    CHECK(big * Rational(BigInt(7), BigInt("123456789012345678901234567890")) == Rational(1));
}

namespace {

std::mt19937_64 rng(20240811);

Rational random_rational() {
    std::uniform_int_distribution<long long> num(-999, 999);
    std::uniform_int_distribution<long long> den(1, 999);
    return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

bool canonical(const Rational& r) {
    if (r.den() <= 0) return false;
    if (r.num() == 0) return r.den() == 1;
    return gcd(abs(r.num()), r.den()) == 1;
}

} // namespace

TEST_CASE("ring laws hold against the cross-multiplication oracle") {
    for (int t = 0; t < 5000; ++t) {
        Rational a = random_rational();
        Rational b = random_rational();
        Rational c = random_rational();
        Rational sum = a + b;
        // Oracle result before any reduction.
        BigInt raw_num = a.num() * b.den() + b.num() * a.den();
        BigInt raw_den = a.den() * b.den();
        REQUIRE(sum.num() * raw_den == raw_num * sum.den());
        REQUIRE(sum == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a - b) + b == a);
    }
}

TEST_CASE("canonical form survives a million random operations") {
    const int kChains = 40000;
    const int kOpsPerChain = 25;
    std::uniform_int_distribution<int> op(0, 2);
    for (int chain = 0; chain < kChains; ++chain) {
        Rational acc = random_rational();
        for (int step = 0; step < kOpsPerChain; ++step) {
            Rational x = random_rational();
            switch (op(rng)) {
                case 0: acc = acc + x; break;
                case 1: acc = acc - x; break;
                default: acc = acc * x; break;
            }
            REQUIRE(canonical(acc));
        }
    }
}
