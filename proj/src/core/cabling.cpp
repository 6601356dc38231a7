#include "cabling.hpp"

#include "errors.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace nuplus {

namespace {

constexpr std::int64_t kMaxEntries = 10'000'000;

// q - (2 nu - 1) p, computed overflow-free; positive means proof-backed.
__int128 regime_margin(std::int64_t nu, CableParams params) {
    return (__int128)params.q - ((__int128)2 * nu - 1) * params.p;
}

std::int64_t ceil_half_pq(CableParams params) {
    return (params.p * params.q + 1) / 2;
}

CableNu nu_cable_impl(std::int64_t nu, CableParams params, const char* what) {
    if (nu < 0)
        throw std::domain_error(std::string(what) + ": companion invariant must be nonnegative");
    __int128 margin = regime_margin(nu, params);
    if (margin < -1)
        throw regime_error(std::string(what) + ": q=" + std::to_string(params.q) +
                               " is below the formula regime q >= (2*" + std::to_string(nu) +
                               "-1)*" + std::to_string(params.p) +
                               "-1; only the bound ceil(pq/2) = " +
                               std::to_string(ceil_half_pq(params)) + " holds",
                           ceil_half_pq(params));
    CableRegime regime =
        margin >= 1 ? CableRegime::proof_backed : CableRegime::paper_stated_gap;
    __int128 value = (__int128)params.p * nu + params.genus_term();
    if (value > std::numeric_limits<std::int64_t>::max())
        throw std::domain_error(std::string(what) + ": result overflows 64 bits");
    return CableNu{static_cast<std::int64_t>(value), regime};
}

} // namespace

VSequence CablePrefix::to_vsequence() const {
    if (!complete)
        throw std::domain_error("incomplete cable prefix does not determine a V-sequence");
    return VSequence(values);
}

std::int64_t CablePrefix::nu_plus() const {
    if (!complete)
        throw std::domain_error("incomplete cable prefix only bounds nu^+; lower bound is " +
                                std::to_string(nu_plus_lower_bound()));
    return static_cast<std::int64_t>(values.size()) - 1;
}

std::int64_t CablePrefix::nu_plus_lower_bound() const {
    if (complete)
        return static_cast<std::int64_t>(values.size()) - 1;
    return static_cast<std::int64_t>(values.size());
}

CablePrefix cable_v(const VSequence& companion, CableParams params) {
    if (params.p == 1) {
        // A (1,q)-cable is isotopic to the companion.
        auto vals = companion.values();
        return CablePrefix{std::vector<std::int64_t>(vals.begin(), vals.end()), true};
    }
    std::int64_t p = params.p, q = params.q;
    std::int64_t window = p * q / 2;
    if (window >= kMaxEntries)
        throw std::domain_error("cable prefix would need " + std::to_string(window + 1) +
                                " entries; limit is " + std::to_string(kMaxEntries));
    VSequence torus = v_torus(p, q);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(window) + 1);
    for (std::int64_t i = 0; i <= window; ++i) {
        std::int64_t f1 = phi1(params, i);
        std::int64_t companion_term =
            std::max(companion.at(f1 / p), companion.at((p + q - 1 - f1) / p));
        std::int64_t v = torus.at(i) + companion_term;
        out.push_back(v);
        if (v == 0)
            return CablePrefix{std::move(out), true};
    }
    return CablePrefix{std::move(out), false};
}

const char* regime_name(CableRegime r) {
    switch (r) {
        case CableRegime::proof_backed: return "proof-backed";
        case CableRegime::paper_stated_gap: return "paper-stated, proof-gap";
    }
    return "unknown";
}

CableNu nu_plus_cable(std::int64_t nu_companion, CableParams params) {
    return nu_cable_impl(nu_companion, params, "nu_plus_cable");
}

std::int64_t nu_plus_cable_lower_bound(std::int64_t nu_companion, CableParams params) {
    if (nu_companion < 0)
        throw std::domain_error("nu_plus_cable_lower_bound: nu must be nonnegative");
    if (regime_margin(nu_companion, params) >= 1)
        throw regime_error("nu_plus_cable_lower_bound: q=" + std::to_string(params.q) +
                               " satisfies the formula regime; use nu_plus_cable",
                           ceil_half_pq(params));
    return ceil_half_pq(params);
}

CableNu g4_cable(std::int64_t n, CableParams params) {
    return nu_cable_impl(n, params, "g4_cable");
}

std::int64_t g4_cable_upper_bound(std::int64_t g4_companion, CableParams params) {
    if (g4_companion < 0)
        throw std::domain_error("g4_cable_upper_bound: genus must be nonnegative");
    return params.p * g4_companion + params.genus_term();
}

std::int64_t nu_plus_quasi_alternating(std::int64_t sigma) {
    if (sigma % 2 != 0)
        throw std::domain_error("knot signatures are even, got " + std::to_string(sigma));
    return std::max<std::int64_t>(0, -sigma / 2);
}

} // namespace nuplus
