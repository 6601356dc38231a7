#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/spinc.hpp"

#include <numeric>
#include <stdexcept>

using nuplus::CableParams;
using nuplus::conj_label;
using nuplus::phi1;
using nuplus::phi2;
using nuplus::SpincIndex;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(CableParams::make(2, 4), std::domain_error);
    CHECK_THROWS_AS(CableParams::make(0, 3), std::domain_error);
    CHECK_THROWS_AS(CableParams::make(3, -1), std::domain_error);
    CHECK_THROWS_AS(CableParams::make((std::int64_t{1} << 40) + 1, std::int64_t{1} << 40),
                    std::domain_error);  // p*q overflows
    CHECK(CableParams::make(3, 5).genus_term() == 4);
    CHECK(CableParams::make(1, 9).genus_term() == 0);
    CHECK(CableParams::make(2, 7).genus_term() == 3);
}

TEST_CASE("projection rows for (3,5)") {
    CableParams params = CableParams::make(3, 5);
    const std::int64_t expected_phi1[] = {1, 2, 3, 4, 0, 1, 2};
    const std::int64_t expected_phi2[] = {2, 0, 1, 2, 0, 1, 2};
    for (std::int64_t i = 0; i < 7; ++i) {
        CHECK(phi1(params, i) == expected_phi1[i]);
        CHECK(phi2(params, i) == expected_phi2[i]);
    }
}

TEST_CASE("degenerate parameters") {
    CableParams flat = CableParams::make(1, 6);
    for (std::int64_t i = 0; i < 6; ++i) {
        CHECK(phi1(flat, i) == i % 6);  // genus term vanishes at p = 1
        CHECK(phi2(flat, i) == 0);      // modulus 1
    }
    CHECK(phi1(CableParams::make(1, 1), 0) == 0);
}

TEST_CASE("labels must lie in [0, pq)") {
    CableParams params = CableParams::make(3, 5);
    CHECK_THROWS_AS(phi1(params, 15), std::domain_error);
    CHECK_THROWS_AS(phi1(params, -1), std::domain_error);
    CHECK_THROWS_AS(phi2(params, 100), std::domain_error);
}

TEST_CASE("SpincIndex overloads carry moduli") {
    CableParams params = CableParams::make(3, 5);
    SpincIndex i{0, 15};
    CHECK(phi1(params, i) == SpincIndex{1, 5});
    CHECK(phi2(params, i) == SpincIndex{2, 3});
    CHECK_THROWS_AS(phi1(params, SpincIndex{0, 14}), std::domain_error);
}

TEST_CASE("affine step") {
    for (std::int64_t p = 1; p <= 8; ++p)
        for (std::int64_t q = 1; q <= 8; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CableParams params = CableParams::make(p, q);
            std::int64_t n = p * q;
            for (std::int64_t i = 0; i < n; ++i) {
                REQUIRE(((phi1(params, (i + 1) % n) - phi1(params, i)) % q + q) % q == 1 % q);
                REQUIRE(((phi2(params, (i + 1) % n) - phi2(params, i)) % p + p) % p == 1 % p);
            }
        }
}

TEST_CASE("projections commute with conjugation") {
    for (std::int64_t p = 1; p <= 8; ++p)
        for (std::int64_t q = 1; q <= 8; ++q) {
            if (std::gcd(p, q) != 1) continue;
            CableParams params = CableParams::make(p, q);
            std::int64_t n = p * q;
            for (std::int64_t i = 0; i < n; ++i) {
                std::int64_t conj = conj_label(n, 1, i);
                REQUIRE(phi1(params, conj) == conj_label(q, p, phi1(params, i)));
                REQUIRE(phi2(params, conj) == conj_label(p, q, phi2(params, i)));
            }
        }
}
