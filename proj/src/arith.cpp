#include "cbc/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cbc {

namespace {

constexpr u64 kMaxSieveBound = 100'000'000; // memory cap (~400 MB of u32)

} // namespace

int symbol3(i64 a) {
    i64 r = a % 3;
    if (r < 0) r += 3;
    return r == 2 ? -1 : static_cast<int>(r);
}

u64 ipow(u64 base, u32 exp) {
    u64 r = 1;
    for (u32 i = 0; i < exp; ++i) {
        if (base != 0 && r > std::numeric_limits<u64>::max() / base)
            throw std::overflow_error("ipow: 64-bit overflow");
        r *= base;
    }
    return r;
}

u128 ipow128(u64 base, u32 exp) {
    u128 r = 1;
    const u128 cap = ~static_cast<u128>(0);
    for (u32 i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base)
            throw std::overflow_error("ipow128: 128-bit overflow");
        r *= base;
    }
    return r;
}

PrimePower prime_power(u64 p, u32 a) {
    if (!is_prime(p)) throw std::invalid_argument("prime_power: p is not prime");
    if (a == 0) throw std::invalid_argument("prime_power: a must be positive");
    return PrimePower{p, a, ipow(p, a)};
}

std::vector<PrimePower> prime_powers_up_to(u64 p, u64 cap) {
    std::vector<PrimePower> out;
    u64 pa = p;
    for (u32 a = 1; pa <= cap; ++a) {
        out.push_back(PrimePower{p, a, pa});
        if (pa > cap / p) break;
        pa *= p;
    }
    return out;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

SpfTable sieve_spf(u64 bound) {
    if (bound < 2) throw std::invalid_argument("sieve_spf: bound must be >= 2");
    if (bound > kMaxSieveBound) throw std::length_error("sieve_spf: bound exceeds memory cap");
    SpfTable spf(bound + 1, 0);
    for (u64 i = 2; i <= bound; ++i) {
        if (spf[i] != 0) continue;
        for (u64 j = i; j <= bound; j += i)
            if (spf[j] == 0) spf[j] = static_cast<u32>(i);
    }
    return spf;
}

Factorization factorize(u64 n, const SpfTable& spf) {
    if (n < 2 || n >= spf.size())
        throw std::out_of_range("factorize: n outside sieve range");
    Factorization f{n, {}};
    u64 m = n;
    while (m > 1) {
        u64 p = spf[m];
        u32 e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    return f;
}

u64 mod_pow(u64 base, u64 exp, u64 modulus) {
    if (modulus < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    u64 b = base % modulus;
    u64 r = 1;
    while (exp > 0) {
        if (exp & 1) r = static_cast<u64>((static_cast<u128>(r) * b) % modulus);
        b = static_cast<u64>((static_cast<u128>(b) * b) % modulus);
        exp >>= 1;
    }
    return r;
}

u64 mod_inv(u64 u, u64 modulus) {
    if (modulus < 2) throw std::invalid_argument("mod_inv: modulus must be >= 2");
    i64 r0 = static_cast<i64>(modulus), r1 = static_cast<i64>(u % modulus);
    i64 x0 = 0, x1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        x0 -= q * x1;
        std::swap(x0, x1);
    }
    if (r0 != 1)
        throw non_invertible_error("mod_inv: element is not a unit mod " + std::to_string(modulus));
    i64 v = x0 % static_cast<i64>(modulus);
    if (v < 0) v += static_cast<i64>(modulus);
    return static_cast<u64>(v);
}

u64 fermat_quotient(u64 b, u64 p, u32 prec) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("fermat_quotient: p must be an odd prime");
    if (b % p == 0) throw std::invalid_argument("fermat_quotient: base divisible by p");
    if (prec == 0) throw std::invalid_argument("fermat_quotient: prec must be positive");
    u64 m = ipow(p, prec + 1);
    u64 t = mod_pow(b, p - 1, m); // = 1 (mod p) by Fermat
    return (t - 1) / p % ipow(p, prec);
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string i128_to_string(i128 v) {
    if (v < 0) return "-" + u128_to_string(static_cast<u128>(-v));
    return u128_to_string(static_cast<u128>(v));
}

} // namespace cbc
