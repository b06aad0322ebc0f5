// Test-only oracles: exact big-integer and big-rational evaluation,
// independent of the scaled-residue pipeline under test.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline BigInt big_catalan(std::uint64_t n) { return big_binom(2 * n, n) / (n + 1); }

inline std::uint64_t big_mod(const BigInt& x, std::uint64_t m) {
    BigInt r = x % m;
    if (r < 0) r += m;
    return r.convert_to<std::uint64_t>();
}

inline std::uint32_t big_ord_p(BigInt x, std::uint64_t p) {
    if (x == 0) throw std::invalid_argument("big_ord_p: zero");
    if (x < 0) x = -x;
    std::uint32_t o = 0;
    while (x % p == 0) {
        x /= p;
        ++o;
    }
    return o;
}

inline std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline std::uint64_t big_inv_mod(const BigInt& x, std::uint64_t m) {
    BigInt a = x % m, b = m, x0 = 0, x1 = 1;
    if (a < 0) a += m;
    BigInt r0 = b, r1 = a;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        r0 -= q * r1;
        r0.swap(r1);
        x0 -= q * x1;
        x0.swap(x1);
    }
    if (r0 != 1) throw std::invalid_argument("big_inv_mod: not a unit");
    BigInt v = x0 % m;
    if (v < 0) v += m;
    return v.convert_to<std::uint64_t>();
}

// Reduce a rational with p-unit denominator mod p^k.
inline std::uint64_t rational_mod(const BigRat& q, std::uint64_t p, std::uint32_t k) {
    std::uint64_t pk = pow_u64(p, k);
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    if (den % p == 0) throw std::invalid_argument("rational_mod: denominator not a p-unit");
    std::uint64_t n = big_mod(num, pk);
    std::uint64_t d = big_inv_mod(den, pk);
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(n) * d % pk);
}

inline int sym3(long long a) {
    long long r = a % 3;
    if (r < 0) r += 3;
    return r == 2 ? -1 : static_cast<int>(r);
}

// S_d as an exact big rational.
inline BigRat big_S(std::uint64_t d) {
    BigRat s = 0;
    for (std::uint64_t k = 1; k < d; ++k) {
        int sign = (k - 1) % 2 == 0 ? 1 : -1;
        s += BigRat(sign * sym3(static_cast<long long>(d - k)), k);
    }
    return s;
}

} // namespace oracle
