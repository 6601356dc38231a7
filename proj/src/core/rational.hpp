#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace nuplus {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with arbitrary-precision parts.
//
// Canonical form is an invariant, not a convention: den > 0,
// gcd(|num|, den) = 1, and zero is stored as 0/1. Every operation
// re-canonicalizes eagerly, so equal values have identical representations
// and operator== can be structural.
class Rational {
public:
    Rational() = default;                                  // 0/1
    Rational(long long n) : num_(n) {}                     // integers embed
    Rational(BigInt n) : num_(std::move(n)) {}
    Rational(BigInt num, BigInt den);                      // den must be nonzero

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);

    // Total order consistent with the real values.
    std::strong_ordering operator<=>(const Rational& o) const;
    bool operator==(const Rational& o) const = default;

    // "7/2", "0", "-1/10"; the denominator is omitted when it is 1.
    std::string str() const;

private:
    void canonicalize();

    BigInt num_ = 0;
    BigInt den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace nuplus
