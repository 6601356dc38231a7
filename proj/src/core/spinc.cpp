#include "spinc.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nuplus {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void check_label(std::int64_t i, std::int64_t modulus) {
    if (i < 0 || i >= modulus)
        throw std::domain_error("label " + std::to_string(i) + " out of range for modulus " +
                                std::to_string(modulus));
}

} // namespace

CableParams CableParams::make(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0)
        throw std::domain_error("cable parameters must be positive, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    if (std::gcd(p, q) != 1)
        throw std::domain_error("cable parameters must be coprime: gcd(" + std::to_string(p) +
                                "," + std::to_string(q) + ") = " +
                                std::to_string(std::gcd(p, q)));
    if (p > std::numeric_limits<std::int64_t>::max() / q)
        throw std::domain_error("cable parameters too large: p*q overflows");
    return CableParams{p, q};
}

std::int64_t CableParams::genus_term() const {
    // (p-1)(q-1) is even for coprime p,q; it fits because p*q does.
    return (p - 1) * (q - 1) / 2;
}

std::int64_t phi1(CableParams params, std::int64_t i) {
    check_label(i, params.p * params.q);
    return floor_mod(i - params.genus_term(), params.q);
}

std::int64_t phi2(CableParams params, std::int64_t i) {
    check_label(i, params.p * params.q);
    return floor_mod(i - params.genus_term(), params.p);
}

SpincIndex phi1(CableParams params, SpincIndex i) {
    if (i.modulus != params.p * params.q)
        throw std::domain_error("Spin^c modulus mismatch: expected " +
                                std::to_string(params.p * params.q) + ", got " +
                                std::to_string(i.modulus));
    return SpincIndex{phi1(params, i.value), params.q};
}

SpincIndex phi2(CableParams params, SpincIndex i) {
    if (i.modulus != params.p * params.q)
        throw std::domain_error("Spin^c modulus mismatch: expected " +
                                std::to_string(params.p * params.q) + ", got " +
                                std::to_string(i.modulus));
    return SpincIndex{phi2(params, i.value), params.p};
}

} // namespace nuplus
