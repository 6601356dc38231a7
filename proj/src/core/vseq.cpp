#include "vseq.hpp"

#include "errors.hpp"
#include "lens.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nuplus {

namespace {

// Resource guard for sequence-producing operations; 10M entries is far past
// any practical sweep and still a sane allocation.
constexpr std::int64_t kMaxEntries = 10'000'000;

} // namespace

VSequence::VSequence(std::vector<std::int64_t> values) : values_(std::move(values)) {
    if (values_.empty())
        throw std::domain_error("malformed V-sequence: empty");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] < 0)
            throw std::domain_error("malformed V-sequence: negative entry at index " +
                                    std::to_string(k));
        if (k + 1 < values_.size() && values_[k] < values_[k + 1])
            throw std::domain_error("malformed V-sequence: increases at index " +
                                    std::to_string(k));
    }
    if (values_.back() != 0)
        throw std::domain_error("malformed V-sequence: does not stabilize at 0");
    // Trim to the first zero; the rest is the implicit tail.
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (values_[k] == 0) {
            values_.resize(k + 1);
            break;
        }
    }
}

VSequence VSequence::zero() {
    return VSequence(std::vector<std::int64_t>{0});
}

std::int64_t VSequence::at(std::int64_t k) const {
    if (k < 0)
        throw std::domain_error("V-sequence index must be nonnegative");
    if (k >= size())
        return 0;
    return values_[static_cast<std::size_t>(k)];
}

std::string VSequence::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (k) os << ',';
        os << values_[k];
    }
    return os.str();
}

std::int64_t exact_half_integer(const Rational& s) {
    if (!s.is_integer())
        throw inconsistency_error("expected an integer, got " + s.str());
    if (s.num() % 2 != 0)
        throw inconsistency_error("expected an even integer, got " + s.str());
    BigInt half = s.num() / 2;
    if (half < std::numeric_limits<std::int64_t>::min() ||
        half > std::numeric_limits<std::int64_t>::max())
        throw std::domain_error("value out of 64-bit range: " + half.str());
    return half.convert_to<std::int64_t>();
}

VSequence v_torus(std::int64_t p, std::int64_t q) {
    CableParams params = CableParams::make(p, q);
    std::int64_t g = params.genus_term();
    if (g >= kMaxEntries)
        throw std::domain_error("torus V-sequence would need " + std::to_string(g + 1) +
                                " entries; limit is " + std::to_string(kMaxEntries));
    // g <= pq/2, so every label used below stays inside the identity's window.
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(g) + 1);
    for (std::int64_t i = 0; i <= g; ++i) {
        Rational s = d_lens(p * q, 1, i) - d_lens(q, p, phi1(params, i)) -
                     d_lens(p, q, phi2(params, i));
        std::int64_t v = exact_half_integer(s);
        if (v < 0)
            throw inconsistency_error("torus V-sequence entry " + std::to_string(i) +
                                      " is negative (" + std::to_string(v) + ")");
        if (i < g && v == 0)
            throw inconsistency_error("torus V-sequence hits zero at index " +
                                      std::to_string(i) + " before the genus term " +
                                      std::to_string(g));
        if (i == g && v != 0)
            throw inconsistency_error("torus V-sequence is " + std::to_string(v) +
                                      " at the genus term " + std::to_string(g) +
                                      ", expected 0");
        out.push_back(v);
    }
    return VSequence(std::move(out));
}

VSequence v_torus_oracle(std::int64_t p, std::int64_t q) {
    CableParams params = CableParams::make(p, q);
    std::int64_t g = params.genus_term();
    if (g >= kMaxEntries)
        throw std::domain_error("torus V-sequence would need " + std::to_string(g + 1) +
                                " entries; limit is " + std::to_string(kMaxEntries));

    // Alexander polynomial of T_{p,q} by exact long division:
    //   (x^{pq}-1)(x-1) / ((x^p-1)(x^q-1)),  degree (p-1)(q-1) = 2g.
    // The divisor has only four nonzero terms, so each step touches four cells.
    std::int64_t pq = p * q;
    std::vector<std::int64_t> rem(static_cast<std::size_t>(pq) + 2, 0);
    // Terms accumulate: for pq = 1 the x and x^{pq} cells coincide.
    rem[0] += 1;
    rem[1] -= 1;
    rem[static_cast<std::size_t>(pq)] -= 1;
    rem[static_cast<std::size_t>(pq) + 1] += 1;

    const std::pair<std::int64_t, std::int64_t> divisor[] = {
        {0, 1}, {p, -1}, {q, -1}, {p + q, 1}};
    std::int64_t deg_div = p + q;
    std::int64_t deg_quot = pq + 1 - deg_div;  // = 2g
    std::vector<std::int64_t> a(static_cast<std::size_t>(deg_quot) + 1, 0);
    for (std::int64_t k = deg_quot; k >= 0; --k) {
        std::int64_t c = rem[static_cast<std::size_t>(k + deg_div)];
        a[static_cast<std::size_t>(k)] = c;
        if (c == 0)
            continue;
        for (auto [idx, coef] : divisor)
            rem[static_cast<std::size_t>(k + idx)] -= c * coef;
    }
    for (std::int64_t v : rem)
        if (v != 0)
            throw inconsistency_error("Alexander polynomial division left a remainder");

    // a[k] is the coefficient of x^k; symmetrize so a_m = a[m+g] for
    // m in [-g, g], then t_k = sum_{j>=1} j*a_{k+j} via suffix sums.
    std::vector<std::int64_t> t(static_cast<std::size_t>(g) + 1, 0);
    std::int64_t s0 = 0;  // sum of a_m        for m > k
    std::int64_t s1 = 0;  // sum of m*a_m      for m > k
    for (std::int64_t k = g; k >= 0; --k) {
        t[static_cast<std::size_t>(k)] = s1 - k * s0;
        if (k > 0) {
            std::int64_t am = a[static_cast<std::size_t>(k + g)];
            s0 += am;
            s1 += k * am;
        }
    }
    return VSequence(std::move(t));
}

Rational d_surgery(std::int64_t p, std::int64_t q, std::int64_t i, const VSequence& v) {
    if (p <= 0 || q <= 0)
        throw std::domain_error("surgery parameters must be positive");
    if (std::gcd(p, q) != 1)
        throw std::domain_error("surgery parameters must be coprime: gcd(" + std::to_string(p) +
                                "," + std::to_string(q) + ") != 1");
    if (i < 0 || i > p - 1)
        throw std::domain_error("label " + std::to_string(i) + " out of range for modulus " +
                                std::to_string(p));
    auto idx1 = i / q;
    auto idx2 = static_cast<std::int64_t>(((__int128)p + q - 1 - i) / q);
    std::int64_t m = std::max(v.at(idx1), v.at(idx2));
    return d_lens(p, q, i) - Rational(2 * m);
}

bool unit_drop_lint(const VSequence& v) {
    auto vals = v.values();
    for (std::size_t k = 0; k + 1 < vals.size(); ++k)
        if (vals[k] - vals[k + 1] > 1)
            return false;
    return true;
}

} // namespace nuplus
