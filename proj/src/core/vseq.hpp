#pragma once

#include "rational.hpp"
#include "spinc.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nuplus {

// A non-increasing, eventually-zero sequence of nonnegative integers {V_k}.
//
// Stored up to and including its first zero; reads beyond the stored prefix
// return the implicit zero tail. Construction validates the invariants, so a
// VSequence value is always well-formed and nu_plus() is total.
class VSequence {
public:
    explicit VSequence(std::vector<std::int64_t> values);

    static VSequence zero();  // (0), the unknot

    std::int64_t at(std::int64_t k) const;
    std::span<const std::int64_t> values() const { return values_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    // min { k | V_k = 0 }; after trimming this is the last stored index.
    std::int64_t nu_plus() const { return size() - 1; }

    std::string str() const;  // comma list, e.g. "2,1,1,1,0"

    bool operator==(const VSequence&) const = default;

private:
    std::vector<std::int64_t> values_;
};

// V-sequence of the torus knot T_{p,q}, computed from the three-term
// correction-term identity
//
//     V_i = [ d(L(pq,1), i) - d(L(q,p), phi1(i)) - d(L(p,q), phi2(i)) ] / 2
//
// over 0 <= i <= (p-1)(q-1)/2. Each halving must be exact, entries before
// the genus term must be positive, and the final entry must be zero;
// violations raise inconsistency_error.
VSequence v_torus(std::int64_t p, std::int64_t q);

// Independent route to the same sequence: torsion coefficients
// t_k = sum_{j>=1} j*a_{k+j} of the symmetrized Alexander polynomial of
// T_{p,q}, obtained by exact division of (x^{pq}-1)(x-1) by (x^p-1)(x^q-1).
// Valid as a V-sequence for L-space knots; shipped for cross-verification
// of v_torus, not as a general-knot API.
VSequence v_torus_oracle(std::int64_t p, std::int64_t q);

// Correction term d(S^3_{p/q}(K), i) of the p/q-surgery on a knot with
// V-sequence v:  d(L(p,q), i) - 2 max{ V_{floor(i/q)}, V_{floor((p+q-1-i)/q)} }.
Rational d_surgery(std::int64_t p, std::int64_t q, std::int64_t i, const VSequence& v);

// Lint: successive drops V_k - V_{k+1} <= 1. True for every sequence this
// library produces; not an invariant of the type, so only ever a warning.
bool unit_drop_lint(const VSequence& v);

// s/2 when s is an even integer; inconsistency_error otherwise.
std::int64_t exact_half_integer(const Rational& s);

} // namespace nuplus
