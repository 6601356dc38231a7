#pragma once

#include "lens.hpp"

#include <cstdint>

namespace nuplus {

// Cable parameters (p,q): p longitudes, q meridians, coprime and positive.
struct CableParams {
    std::int64_t p;
    std::int64_t q;

    // Validates positivity, coprimality, and that p*q fits in 64 bits.
    static CableParams make(std::int64_t p, std::int64_t q);

    // (p-1)(q-1)/2; an integer because p and q are coprime.
    std::int64_t genus_term() const;
};

// Projections of Spin^c structures under the reducible-surgery splitting:
// a label mod pq maps to labels mod q and mod p by subtracting the genus
// term, reduced by true mathematical mod into [0, modulus).
std::int64_t phi1(CableParams params, std::int64_t i);  // 0 <= i < pq, result mod q
std::int64_t phi2(CableParams params, std::int64_t i);  // 0 <= i < pq, result mod p
SpincIndex phi1(CableParams params, SpincIndex i);
SpincIndex phi2(CableParams params, SpincIndex i);

} // namespace nuplus
