// Exact integer number theory: gcd, deterministic primality, prime-in-range
// search, and Pillai windows (runs of consecutive integers in which no
// element is coprime to all the others).
#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace primeweave {

// Arithmetic helpers that refuse to wrap around.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("checked_add: 64-bit overflow");
    return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("checked_mul: 64-bit overflow");
    return r;
}

inline std::int64_t checked_add_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("checked_add_i64: 64-bit overflow");
    return r;
}

inline std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("checked_mul_i64: 64-bit overflow");
    return r;
}

// Greatest common divisor. gcd(0, 0) has no greatest element and is rejected.
inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    if (a == 0 && b == 0)
        throw std::domain_error("gcd(0, 0) is undefined");
    return std::gcd(a, b);
}

inline bool coprime(std::uint64_t a, std::uint64_t b) { return gcd(a, b) == 1; }

// Deterministic primality by trial division up to sqrt(n). The divisor bound
// is computed as d <= n / d, so no intermediate product can overflow.
inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 4) return n >= 2;
    if (n % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Largest prime p with lo_exclusive < p <= hi_inclusive, if any. Called with
// (2^i - 1, 2^(i+1) - 2) the result is nonempty for i >= 2 by Bertrand's
// postulate: some prime lies strictly between n and 2n for every n >= 2.
inline std::optional<std::uint64_t> largest_prime_in_range(std::uint64_t lo_exclusive,
                                                           std::uint64_t hi_inclusive) {
    if (lo_exclusive < 1 || hi_inclusive <= lo_exclusive)
        throw std::domain_error("largest_prime_in_range: need 1 <= lo_exclusive < hi_inclusive");
    for (std::uint64_t p = hi_inclusive; p > lo_exclusive; --p)
        if (is_prime(p)) return p;
    return std::nullopt;
}

// A window of `length` consecutive integers starting at `start` in which
// every element shares a divisor > 1 with at least one other element.
struct PillaiRun {
    std::uint64_t start = 0;
    std::uint64_t length = 0;
    friend bool operator==(const PillaiRun&, const PillaiRun&) = default;
};

// True iff every x in {start, ..., start+length-1} has gcd(x, y) > 1 for some
// other y in the window. Checked by pairwise gcd; windows are short, so
// clarity wins over cleverness here.
inline bool window_is_pillai(std::uint64_t start, std::uint64_t length) {
    if (start < 1)
        throw std::domain_error("window_is_pillai: start must be positive");
    if (length < 2)
        throw std::domain_error("window_is_pillai: length must be at least 2");
    const std::uint64_t last = checked_add(start, length - 1);
    for (std::uint64_t x = start; x <= last; ++x) {
        bool has_partner = false;
        for (std::uint64_t y = start; y <= last; ++y) {
            if (y != x && std::gcd(x, y) > 1) {
                has_partner = true;
                break;
            }
        }
        if (!has_partner) return false;
    }
    return true;
}

// Smallest start <= start_limit whose window qualifies, or nullopt if the
// scan comes up empty. An empty scan bounds nothing beyond the limit.
inline std::optional<PillaiRun> find_pillai_run(std::uint64_t length, std::uint64_t start_limit) {
    if (length < 2)
        throw std::domain_error("find_pillai_run: length must be at least 2");
    if (start_limit < 1)
        throw std::domain_error("find_pillai_run: start_limit must be positive");
    checked_add(start_limit, length - 1);
    for (std::uint64_t s = 1; s <= start_limit; ++s)
        if (window_is_pillai(s, length)) return PillaiRun{s, length};
    return std::nullopt;
}

}  // namespace primeweave
