#pragma once

#include <cstdint>
#include <vector>

#include "arcalc/field.hpp"

// Dense univariate polynomials over the prime field, little endian
// coefficient order.  Internal helper shared by the endomorphism ring
// analysis and the summand splitting; not part of the public headers.

namespace arcalc::polyfp {

using Poly = std::vector<uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline bool is_zero(const Poly& a) { return a.empty(); }

inline std::size_t degree(const Poly& a) { return a.empty() ? 0 : a.size() - 1; }

inline Poly sub(const Poly& a, const Poly& b, Field f) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        uint32_t x = i < a.size() ? a[i] : 0;
        uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = f.sub(x, y);
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, Field f) {
    if (is_zero(a) || is_zero(b)) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, uint32_t c, Field f) {
    Poly r = a;
    for (auto& x : r) x = f.mul(x, c);
    trim(r);
    return r;
}

// Remainder and quotient of a by b; b must be nonzero.
inline void divmod(const Poly& a, const Poly& b, Field f, Poly& quo, Poly& rem) {
    quo.clear();
    rem = a;
    trim(rem);
    if (rem.size() < b.size()) return;
    quo.assign(rem.size() - b.size() + 1, 0);
    uint32_t lead_inv = f.inv(b.back());
    for (std::size_t k = rem.size(); k-- > b.size() - 1;) {
        if (!rem[k]) continue;
        uint32_t c = f.mul(rem[k], lead_inv);
        std::size_t shift = k - (b.size() - 1);
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = f.sub(rem[shift + i], f.mul(c, b[i]));
    }
    trim(rem);
    trim(quo);
}

inline Poly mod(const Poly& a, const Poly& b, Field f) {
    Poly q, r;
    divmod(a, b, f, q, r);
    return r;
}

inline Poly make_monic(const Poly& a, Field f) {
    if (is_zero(a)) return a;
    return scale(a, f.inv(a.back()), f);
}

inline Poly gcd(Poly a, Poly b, Field f) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        Poly r = mod(a, b, f);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, f);
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, Field f) {
    return mod(mul(a, b, f), m, f);
}

// X^e mod m by square and multiply.
inline Poly xpowmod(uint64_t e, const Poly& m, Field f) {
    Poly base = mod(Poly{0, 1}, m, f);
    Poly acc = mod(Poly{1}, m, f);
    while (e) {
        if (e & 1) acc = mulmod(acc, base, m, f);
        base = mulmod(base, base, m, f);
        e >>= 1;
    }
    return acc;
}

inline uint32_t eval(const Poly& a, uint32_t x, Field f) {
    uint32_t r = 0;
    for (std::size_t i = a.size(); i-- > 0;) r = f.add(f.mul(r, x), a[i]);
    return r;
}

} // namespace arcalc::polyfp
