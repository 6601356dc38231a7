#pragma once

#include "vseq.hpp"

#include <cstdint>
#include <vector>

namespace nuplus {

// Prefix of a cable's V-sequence over labels 0..floor(pq/2), the window on
// which the reducible-surgery identity pins the values. A complete prefix
// reached zero inside the window and therefore determines the whole
// sequence; an incomplete one only bounds nu^+ from below.
struct CablePrefix {
    std::vector<std::int64_t> values;
    bool complete;

    VSequence to_vsequence() const;  // requires complete
    std::int64_t nu_plus() const;    // requires complete

    // First index not yet shown to be zero: exact nu^+ when complete,
    // otherwise the window-derived lower bound.
    std::int64_t nu_plus_lower_bound() const;
};

// V-sequence transform under cabling:
//
//   V_i(K_{p,q}) = V_i(T_{p,q})
//                  + max{ V_{floor(phi1(i)/p)}(K), V_{floor((p+q-1-phi1(i))/p)}(K) }
//
// for 0 <= i <= floor(pq/2), with phi1(i) represented in [0, q). The prefix
// stops at its first zero. A (1,q)-cable is the companion itself and returns
// the companion's sequence, complete.
CablePrefix cable_v(const VSequence& companion, CableParams params);

// Validity regime of the closed cabling formula for nu^+.
enum class CableRegime {
    proof_backed,       // q >= (2 nu - 1) p + 1
    paper_stated_gap,   // q in { (2 nu - 1) p - 1, (2 nu - 1) p }: stated, not derivable here
};
const char* regime_name(CableRegime r);

struct CableNu {
    std::int64_t value;
    CableRegime regime;
};

// nu^+(K_{p,q}) = p*nu^+(K) + (p-1)(q-1)/2 in the regimes above. Below the
// gap, throws regime_error carrying the unconditional bound ceil(pq/2).
CableNu nu_plus_cable(std::int64_t nu_companion, CableParams params);

// ceil(pq/2), valid when q < (2 nu - 1) p + 1; regime_error otherwise
// (the closed formula applies there instead).
std::int64_t nu_plus_cable_lower_bound(std::int64_t nu_companion, CableParams params);

// 4-ball genus of the cable when the companion satisfies nu^+ = g_4 = n;
// same regime handling as nu_plus_cable.
CableNu g4_cable(std::int64_t n, CableParams params);

// p*g_4(K) + (p-1)(q-1)/2: the band-construction upper bound, unconditional.
std::int64_t g4_cable_upper_bound(std::int64_t g4_companion, CableParams params);

// nu^+ of a quasi-alternating knot from its (even) signature: max(0, -sigma/2).
std::int64_t nu_plus_quasi_alternating(std::int64_t sigma);

} // namespace nuplus
