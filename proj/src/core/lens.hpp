#pragma once

#include "rational.hpp"

#include <cstddef>
#include <cstdint>

namespace nuplus {

// A Spin^c structure on a surgered manifold, identified with a residue class.
struct SpincIndex {
    std::int64_t value;    // in [0, modulus)
    std::int64_t modulus;  // > 0

    // True mathematical reduction (result always in [0, modulus)).
    static SpincIndex reduce(std::int64_t raw, std::int64_t modulus);

    bool operator==(const SpincIndex&) const = default;
};

// L(p,q): the result of p/q-surgery on the unknot. p = 1 denotes S^3.
struct LensSpace {
    std::int64_t p;
    std::int64_t q;

    // Validates p,q >= 1 and gcd(p,q) = 1.
    static LensSpace make(std::int64_t p, std::int64_t q);

    // (p, q mod p) for p > 1; identity for p = 1.
    LensSpace canonical() const;
};

// Correction term d(L(p,q), i).
//
// The label i may be any integer and is reduced mod p; q is reduced mod p
// when q >= p (p > 1). Evaluation is the Euclidean recursion
//
//     d(L(p,q), i) = ((2i+1-p-q)^2 - pq) / (4pq) - d(L(q,r), j),
//     r = p mod q,  j = i mod q,
//
// with base cases d = 0 for p = 1 and d(L(p,1), i) = ((2i-p)^2 - p) / (4p).
// Results are memoized on the normalized (p, q, i); concurrent callers
// observe a single value per key.
Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i);

// Spin^c conjugation on surgery labels: i -> p+q-1-i (mod p).
std::int64_t conj_label(std::int64_t p, std::int64_t q, std::int64_t i);
SpincIndex conj_label(std::int64_t p, std::int64_t q, SpincIndex i);

namespace lens_detail {

// The recursion body without top-level normalization, on its extended label
// window: requires p > q >= 1 and 0 <= i < p+q. Agrees with
// d_lens(p, q, i mod p) everywhere on the window.
Rational d_lens_extended(std::int64_t p, std::int64_t q, std::int64_t i);

// Memo-table introspection for tests and the verification suites.
std::size_t memo_size();
void memo_clear();

} // namespace lens_detail

} // namespace nuplus
