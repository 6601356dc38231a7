#include "lens.hpp"

#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace nuplus {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void check_lens_domain(std::int64_t p, std::int64_t q) {
    if (p <= 0 || q <= 0)
        throw std::domain_error("lens space parameters must be positive, got p=" +
                                std::to_string(p) + " q=" + std::to_string(q));
    if (std::gcd(p, q) != 1)
        throw std::domain_error("invalid lens space: gcd(" + std::to_string(p) + "," +
                                std::to_string(q) + ") = " +
                                std::to_string(std::gcd(p, q)));
}

struct MemoKey {
    std::int64_t p, q, i;
    bool operator==(const MemoKey&) const = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& k) const {
        std::size_t h = std::hash<std::int64_t>{}(k.p);
        h ^= std::hash<std::int64_t>{}(k.q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= std::hash<std::int64_t>{}(k.i) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

std::unordered_map<MemoKey, Rational, MemoKeyHash> g_memo;
std::mutex g_memo_mutex;

// d(L(p,1), i) = ((2i-p)^2 - p) / (4p), accepted for 0 <= i <= p.
// (The extended window can pass i = p; anything else is reduced mod p.)
Rational closed_form_q1(std::int64_t p, std::int64_t i) {
    if (i < 0 || i > p)
        i = floor_mod(i, p);
    BigInt t = BigInt(2) * i - p;
    return Rational(t * t - p, BigInt(4) * p);
}

// Recursion on normalized input: 1 <= q < p, 0 <= i < p+q (extended window).
// Recursive calls always land back inside the window of the child.
Rational d_rec(std::int64_t p, std::int64_t q, std::int64_t i) {
    if (q == 1)
        return closed_form_q1(p, i);

    MemoKey key{p, q, i};
    {
        std::lock_guard<std::mutex> lk(g_memo_mutex);
        auto it = g_memo.find(key);
        if (it != g_memo.end())
            return it->second;
    }

    BigInt t = BigInt(2) * i + 1 - p - q;
    Rational quad(t * t - BigInt(p) * q, BigInt(4) * p * q);
    Rational value = quad - d_rec(q, p % q, i % q);

    std::lock_guard<std::mutex> lk(g_memo_mutex);
    return g_memo.emplace(key, std::move(value)).first->second;
}

} // namespace

SpincIndex SpincIndex::reduce(std::int64_t raw, std::int64_t modulus) {
    if (modulus <= 0)
        throw std::domain_error("Spin^c modulus must be positive");
    return SpincIndex{floor_mod(raw, modulus), modulus};
}

LensSpace LensSpace::make(std::int64_t p, std::int64_t q) {
    check_lens_domain(p, q);
    return LensSpace{p, q};
}

LensSpace LensSpace::canonical() const {
    if (p == 1)
        return *this;
    return LensSpace{p, floor_mod(q, p)};
}

Rational d_lens(std::int64_t p, std::int64_t q, std::int64_t i) {
    check_lens_domain(p, q);
    if (p == 1)
        return Rational(0);
    i = floor_mod(i, p);
    if (q >= p)
        q %= p;  // gcd(p,q) = 1 and p > 1 keep q >= 1 here
    return d_rec(p, q, i);
}

std::int64_t conj_label(std::int64_t p, std::int64_t q, std::int64_t i) {
    check_lens_domain(p, q);
    if (i < 0 || i >= p)
        throw std::domain_error("label " + std::to_string(i) + " out of range for modulus " +
                                std::to_string(p));
    // p+q-1-i computed overflow-free
    BigInt conj = (BigInt(p) + q - 1 - i) % p;
    if (conj < 0)
        conj += p;
    return conj.convert_to<std::int64_t>();
}

SpincIndex conj_label(std::int64_t p, std::int64_t q, SpincIndex i) {
    if (i.modulus != p)
        throw std::domain_error("Spin^c modulus mismatch: label lives in Z/" +
                                std::to_string(i.modulus) + " but the surgery has " +
                                std::to_string(p) + " structures");
    return SpincIndex{conj_label(p, q, i.value), p};
}

namespace lens_detail {

Rational d_lens_extended(std::int64_t p, std::int64_t q, std::int64_t i) {
    check_lens_domain(p, q);
    if (q >= p && p != 1)
        throw std::domain_error("extended window requires p > q");
    if (i < 0 || i >= p + q)
        throw std::domain_error("label " + std::to_string(i) + " outside extended window [0, " +
                                std::to_string(p + q) + ")");
    if (p == 1)
        return Rational(0);
    return d_rec(p, q, i);
}

std::size_t memo_size() {
    std::lock_guard<std::mutex> lk(g_memo_mutex);
    return g_memo.size();
}

void memo_clear() {
    std::lock_guard<std::mutex> lk(g_memo_mutex);
    g_memo.clear();
}

} // namespace lens_detail

} // namespace nuplus
