#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/lens.hpp"

#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

using nuplus::BigInt;
using nuplus::d_lens;
using nuplus::Rational;
using nuplus::SpincIndex;

namespace {
Rational rat(long long n, long long d) {
    return Rational(BigInt(n), BigInt(d));
}
} // namespace

TEST_CASE("reference correction terms") {
    CHECK(d_lens(15, 1, 0) == rat(7, 2));
    CHECK(d_lens(5, 3, 3) == rat(-2, 5));
    CHECK(d_lens(3, 5, 2) == rat(-1, 2));
    CHECK(d_lens(1, 1, 0) == Rational(0));
    CHECK(d_lens(2, 1, 1) == rat(-1, 4));  // hand-evaluated ((2*1-2)^2 - 2)/8
}

TEST_CASE("full reference rows i = 0..6") {
    const char* l15[] = {"7/2", "77/30", "53/30", "11/10", "17/30", "1/6", "-1/10"};
    const char* l53[] = {"2/5", "0", "2/5", "-2/5", "-2/5", "2/5", "0"};
    const char* l35[] = {"1/6", "1/6", "-1/2", "1/6", "1/6", "-1/2", "1/6"};
    for (int i = 0; i < 7; ++i) {
        CHECK(d_lens(15, 1, i).str() == l15[i]);
        CHECK(d_lens(5, 3, i).str() == l53[i]);
        CHECK(d_lens(3, 5, i).str() == l35[i]);
    }
}

TEST_CASE("label 6 of L(5,3) reduces to label 1") {
    // The printed reference row has 2/5 here; the recursion disagrees.
    CHECK(d_lens(5, 3, 6) == d_lens(5, 3, 1));
    CHECK(d_lens(5, 3, 6) == Rational(0));
}

TEST_CASE("frozen spot rows") {
    const char* l72[] = {"9/14", "9/14", "-3/14", "1/14", "-1/2", "1/14", "-3/14"};
    for (int i = 0; i < 7; ++i)
        CHECK(d_lens(7, 2, i).str() == l72[i]);
    const char* l138[] = {"6/13", "2/13", "8/13", "-2/13", "-2/13", "8/13"};
    for (int i = 0; i < 6; ++i)
        CHECK(d_lens(13, 8, i).str() == l138[i]);
}

TEST_CASE("labels and parameters normalize") {
    CHECK(d_lens(7, 2, -5) == d_lens(7, 2, 2));
    CHECK(d_lens(7, 2, 700) == d_lens(7, 2, 0));
    for (int i = 0; i < 3; ++i)
        CHECK(d_lens(3, 5, i) == d_lens(3, 2, i));  // q reduced mod p
    CHECK(d_lens(1, 7, 123) == Rational(0));        // S^3
}

TEST_CASE("million-scale parameters stay exact") {
    CHECK(d_lens(1000003, 999999, 123456).str() == "-70891815423/2000006");
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(d_lens(4, 2, 0), std::domain_error);
    CHECK_THROWS_AS(d_lens(0, 1, 0), std::domain_error);
    CHECK_THROWS_AS(d_lens(5, -3, 0), std::domain_error);
    CHECK_THROWS_AS(nuplus::LensSpace::make(6, 4), std::domain_error);
}

TEST_CASE("lens space canonical view") {
    nuplus::LensSpace l = nuplus::LensSpace::make(3, 5);
    CHECK(l.canonical().q == 2);
    CHECK(nuplus::LensSpace::make(1, 9).canonical().q == 9);
}

TEST_CASE("conjugated labels") {
    CHECK(nuplus::conj_label(5, 3, 0) == 2);
    CHECK(nuplus::conj_label(5, 3, 1) == 1);  // fixed point: 7 mod 5 ... 6 mod 5 = 1
    CHECK(nuplus::conj_label(1, 1, 0) == 0);

    SpincIndex i{0, 5};
    SpincIndex j = nuplus::conj_label(5, 3, i);
    CHECK(j == SpincIndex{2, 5});
    CHECK_THROWS_AS(nuplus::conj_label(5, 3, SpincIndex{0, 7}), std::domain_error);
    CHECK_THROWS_AS(nuplus::conj_label(5, 3, 5), std::domain_error);
    CHECK_THROWS_AS(nuplus::conj_label(5, 3, -1), std::domain_error);
}

TEST_CASE("SpincIndex reduces with true mod") {
    CHECK(SpincIndex::reduce(-4, 5) == SpincIndex{1, 5});
    CHECK(SpincIndex::reduce(12, 5) == SpincIndex{2, 5});
    CHECK_THROWS_AS(SpincIndex::reduce(0, 0), std::domain_error);
}

TEST_CASE("conjugation symmetry of d") {
    for (std::int64_t p = 2; p <= 12; ++p)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t i = 0; i < p; ++i)
                REQUIRE(d_lens(p, q, i) == d_lens(p, q, nuplus::conj_label(p, q, i)));
        }
}

TEST_CASE("extended window agrees with reduced labels") {
    for (std::int64_t p = 2; p <= 12; ++p)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t i = p; i < p + q; ++i)
                REQUIRE(nuplus::lens_detail::d_lens_extended(p, q, i) == d_lens(p, q, i % p));
        }
    CHECK_THROWS_AS(nuplus::lens_detail::d_lens_extended(5, 3, 8), std::domain_error);
    CHECK_THROWS_AS(nuplus::lens_detail::d_lens_extended(3, 5, 0), std::domain_error);
}

TEST_CASE("step identity, sign-adjusted") {
    for (std::int64_t p = 2; p <= 12; ++p)
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t j = 0; j < p; ++j)
                REQUIRE(d_lens(p, q, (j + q) % p) - d_lens(p, q, j) ==
                        rat(2 * j + 1 - p, p));
        }
}

TEST_CASE("memo stays within the Euclidean cell budget") {
    nuplus::lens_detail::memo_clear();
    for (std::int64_t i = 0; i < 34; ++i)
        d_lens(34, 21, i);
    CHECK(nuplus::lens_detail::memo_size() <= 34 + 3 * 21 + 8);
}

TEST_CASE("concurrent sweeps agree with the serial answer") {
    const std::int64_t p = 89, q = 55;
    std::vector<Rational> serial;
    for (std::int64_t i = 0; i < p; ++i)
        serial.push_back(d_lens(p, q, i));
    nuplus::lens_detail::memo_clear();

    std::vector<std::vector<Rational>> results(8);
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&, t] {
            for (std::int64_t i = 0; i < p; ++i)
                results[static_cast<std::size_t>(t)].push_back(d_lens(p, q, i));
        });
    for (auto& w : workers)
        w.join();
    for (const auto& r : results)
        REQUIRE(r == serial);
}
