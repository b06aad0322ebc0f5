#pragma once

#include "cbc/padic.hpp"

namespace cbc {

/// Streams binom(2k, k+d) mod p^prec with exact valuation tracking.
/// Values are canonical zeros for k < d; the stream seeds with 1 at k = d
/// so the recurrence never divides by zero.
class ShiftedCursor {
  public:
    ShiftedCursor(PrimePower pp, u32 prec, u64 d);

    const ScaledResidue& value() const { return cur_; }
    u64 index() const { return k_; }
    void advance();

  private:
    PrimePower pp_;
    u32 prec_;
    u64 d_;
    u64 k_ = 0;
    ScaledResidue cur_;
};

std::vector<ScaledResidue> shifted_seq(PrimePower pp, u32 prec, u64 d, u64 count);

/// binom(n, k) as a ScaledResidue via the exact product
/// prod_{i=1..k} (n-k+i)/i; val equals ord_p of the binomial.
ScaledResidue binom_direct(u64 n, u64 k, u64 p, u32 prec);

/// Streams binom(p^a m + 2k, p^a n + k + d) mod p^prec. Zero until both
/// divisor factors of the step ratio turn positive, then seeded from
/// binom_direct.
class GeneralCursor {
  public:
    GeneralCursor(PrimePower pp, u32 prec, u64 m, u64 n, u64 d);

    const ScaledResidue& value() const { return cur_; }
    u64 index() const { return k_; }
    void advance();

  private:
    PrimePower pp_;
    u32 prec_;
    u64 big_m_, big_n_, d_;
    u64 k0_; // first index with a nonzero binomial
    u64 k_ = 0;
    ScaledResidue cur_;
};

std::vector<ScaledResidue> general_seq(PrimePower pp, u32 prec, u64 m, u64 n, u64 d, u64 count);

/// Catalan numbers C_{p^a n_offset + k} as the difference
/// binom(2N,N) - binom(2N,N+1); valuations are recovered from the
/// difference residue at full precision, so everything stays in the
/// integer ring even when p divides N+1.
std::vector<ScaledResidue> catalan_seq(PrimePower pp, u32 prec, u64 n_offset, u64 count);

/// Streams binom(2k, k+shift) mod n^2 for a composite modulus n: prime
/// factors of n are tracked in an exponent vector, the coprime cofactor
/// lives in a unit residue mod n^2.
class CompositeCursor {
  public:
    CompositeCursor(const Factorization& fac, u32 shift);

    u64 index() const { return k_; }
    u64 modulus() const { return n2_; }
    u64 reduce() const;
    void advance();

  private:
    void strip(u64& x, int sign);

    u64 n_, n2_;
    u32 shift_;
    u64 k_ = 0;
    u64 unit_ = 1;
    std::vector<u64> primes_;
    std::vector<i32> exps_;
    std::vector<std::vector<u64>> pw_; // pw_[i][e] = primes_[i]^e mod n^2
    i32 exp_cap_;
};

std::vector<u64> composite_central_seq(u64 n, const Factorization& fac, u64 count);

} // namespace cbc
