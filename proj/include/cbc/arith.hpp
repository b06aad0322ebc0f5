#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cbc {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i32 = std::int32_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Thrown by mod_inv when the element is not a unit. The binomial engines
/// depend on this error to surface valuation bookkeeping bugs, so it must
/// never be downgraded to a silent return value.
class non_invertible_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// The symbol (a/3): the unique s in {-1,0,+1} with s = a (mod 3).
int symbol3(i64 a);

constexpr int iverson(bool condition) { return condition ? 1 : 0; }

/// (-1)^e evaluated as written, no parity assumptions on the caller side.
constexpr int neg_one_pow(u64 e) { return (e & 1) ? -1 : 1; }

u64 ipow(u64 base, u32 exp);     // overflow-checked
u128 ipow128(u64 base, u32 exp); // overflow-checked

struct PrimePower {
    u64 p;
    u32 a;
    u64 pa; // p^a
};

PrimePower prime_power(u64 p, u32 a);
std::vector<PrimePower> prime_powers_up_to(u64 p, u64 cap);

bool is_prime(u64 n);

/// spf[i] = least prime factor of i (spf[i] == i iff i prime); spf[0] = spf[1] = 0.
using SpfTable = std::vector<u32>;
SpfTable sieve_spf(u64 bound);

struct Factorization {
    u64 n;
    std::vector<std::pair<u64, u32>> factors; // (prime, exponent), primes increasing
};

Factorization factorize(u64 n, const SpfTable& spf);

u64 mod_pow(u64 base, u64 exp, u64 modulus);
u64 mod_inv(u64 u, u64 modulus);

/// Fermat quotient (b^(p-1) - 1)/p as a residue mod p^prec,
/// computed from b^(p-1) mod p^(prec+1).
u64 fermat_quotient(u64 b, u64 p, u32 prec);

std::string u128_to_string(u128 v);
std::string i128_to_string(i128 v);

} // namespace cbc
