/*
   Copyright 2026 The sqdisc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

// Word-size prime field arithmetic used by the multi-modular resultant.

#include "sqdisc/bigint.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sqdisc::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod_slow(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

inline u64 powmod_slow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e != 0) {
        if (e & 1) {
            r = mulmod_slow(r, a, p);
        }
        a = mulmod_slow(a, a, p);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime_u64(u64 n) {
    if (n < 2) {
        return false;
    }
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) {
            return n == small;
        }
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
        u64 x = powmod_slow(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) {
            continue;
        }
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_slow(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) {
            return false;
        }
    }
    return true;
}

/// The first `count` primes below 2^62, in descending order. Computed once.
inline const std::vector<u64>& large_primes() {
    static const std::vector<u64> primes = [] {
        constexpr std::size_t kCount = 2048;
        std::vector<u64> out;
        out.reserve(kCount);
        for (u64 n = (u64{1} << 62) - 1; out.size() < kCount; n -= 2) {
            if (is_prime_u64(n)) {
                out.push_back(n);
            }
        }
        return out;
    }();
    return primes;
}

/**
 * Montgomery arithmetic modulo an odd p < 2^62.
 * Elements are stored in Montgomery form a*2^64 mod p, in [0, p).
 */
class MontgomeryField {
public:
    explicit MontgomeryField(u64 p) : p_(p) {
        if ((p & 1) == 0 || p >= (u64{1} << 62)) {
            throw std::domain_error("MontgomeryField: modulus must be odd and below 2^62");
        }
        u64 inv = p;
        for (int i = 0; i < 6; ++i) {
            inv *= 2 - p * inv;
        }
        neg_inv_ = ~inv + 1;
        const u64 r = (~p + 1) % p;  // 2^64 mod p
        r2_ = mulmod_slow(r, r, p);
        one_ = r;
    }

    u64 modulus() const { return p_; }
    u64 one() const { return one_; }

    u64 reduce(u128 t) const {
        const u64 m = static_cast<u64>(t) * neg_inv_;
        const u64 u = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
        return u >= p_ ? u - p_ : u;
    }

    u64 mul(u64 a, u64 b) const { return reduce(static_cast<u128>(a) * b); }
    u64 add(u64 a, u64 b) const {
        const u64 s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }

    u64 to_mont(u64 a) const { return mul(a % p_, r2_); }
    u64 from_mont(u64 a) const { return reduce(a); }

    u64 to_mont(const BigInt& a) const {
        return to_mont(static_cast<u64>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p_))));
    }

    u64 pow(u64 a, u64 e) const {
        u64 r = one_;
        while (e != 0) {
            if (e & 1) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    u64 inv(u64 a) const {
        if (a == 0) {
            throw std::domain_error("MontgomeryField: inverse of zero");
        }
        return pow(a, p_ - 2);
    }

private:
    u64 p_ = 0;
    u64 neg_inv_ = 0;
    u64 r2_ = 0;
    u64 one_ = 0;
};

inline void trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

/// a <- a mod b in place; b must be nonzero with trimmed top coefficient.
inline void remainder_in_place(const MontgomeryField& F, std::vector<u64>& a, std::span<const u64> b) {
    const std::size_t db = b.size() - 1;
    const u64 lc_inv = F.inv(b[db]);
    while (a.size() > db) {
        const std::size_t top = a.size() - 1;
        const u64 q = F.mul(a[top], lc_inv);
        if (q != 0) {
            const std::size_t off = top - db;
            for (std::size_t j = 0; j < db; ++j) {
                a[off + j] = F.sub(a[off + j], F.mul(q, b[j]));
            }
        }
        a.pop_back();
        trim(a);
    }
}

/**
 * Resultant modulo p of two polynomials given in Montgomery form with nonzero
 * top coefficients, by the Euclidean algorithm:
 *   Res(A, B) = (-1)^{deg A deg B} lc(B)^{deg A - deg R} Res(B, R),   R = A mod B,
 *   Res(A, c) = c^{deg A}.
 * Returns the value in Montgomery form.
 */
inline u64 resultant_mod(const MontgomeryField& F, std::vector<u64> a, std::vector<u64> b) {
    u64 res = F.one();
    while (b.size() > 1) {
        const std::size_t da = a.size() - 1;
        const std::size_t db = b.size() - 1;
        remainder_in_place(F, a, b);
        if (a.empty()) {
            return 0;
        }
        const std::size_t dr = a.size() - 1;
        if ((da & 1) && (db & 1)) {
            res = F.neg(res);
        }
        res = F.mul(res, F.pow(b[db], da - dr));
        std::swap(a, b);
    }
    return F.mul(res, F.pow(b[0], a.size() - 1));
}

}  // namespace sqdisc::modular
