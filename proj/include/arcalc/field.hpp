#pragma once

#include <cstdint>

#include "arcalc/errors.hpp"

namespace arcalc {

// Prime field GF(p) with p < 2^15.  The bound keeps every product of two
// canonical residues below 2^30, so the vector kernels can work in 32-bit
// lanes without overflow.  Elements are canonical residues in [0, p).
class Field {
public:
    Field() : p_(0) {}

    explicit Field(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= 32768 || !is_prime(p))
            throw InvalidInput("field modulus must be a prime below 32768, got " +
                               std::to_string(p));
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return (a * b) % p_;  // a*b < 2^30
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t r = 1 % p_;
        a %= p_;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a % p_ == 0) throw InternalCheckFailure("inverse of zero in GF(p)");
        return pow(a, p_ - 2);
    }

    std::uint32_t reduce64(std::uint64_t v) const { return std::uint32_t(v % p_); }

    std::uint32_t from_int(long long v) const {
        long long r = v % (long long)p_;
        if (r < 0) r += p_;
        return std::uint32_t(r);
    }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    static bool is_prime(std::uint32_t n) {
        if (n < 2) return false;
        for (std::uint32_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

} // namespace arcalc
