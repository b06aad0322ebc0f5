#pragma once

#include "cbc/arith.hpp"

#include <limits>
#include <span>

namespace cbc {

/// Thrown when a value with negative valuation is asked for an integer
/// residue: the caller's expression was not p-integral, which is itself
/// a check failure rather than an arithmetic accident.
class not_p_integral_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

class precision_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A p-adic number written p^val * unit with unit a residue coprime to p.
/// Zero carries the sentinel valuation and no unit. Nonzero values keep
/// 0 < unit < p^prec and p does not divide unit.
struct ScaledResidue {
    static constexpr i32 kZeroVal = std::numeric_limits<i32>::max();

    u64 p = 0;
    u32 prec = 0;
    i32 val = kZeroVal;
    u128 unit = 0;

    bool is_zero() const { return val == kZeroVal; }
};

ScaledResidue vu_zero(u64 p, u32 prec);
ScaledResidue vu_from_int(i128 x, u64 p, u32 prec);

/// Rebuild (val, unit) from a canonical residue r mod p^prec. The result
/// represents the original value modulo p^prec only; r = 0 maps to the
/// zero sentinel even when the underlying value is merely divisible by
/// p^prec.
ScaledResidue vu_from_residue(u64 r, u64 p, u32 prec);

ScaledResidue vu_mul(const ScaledResidue& x, const ScaledResidue& y);
ScaledResidue vu_div(const ScaledResidue& x, const ScaledResidue& y);

/// Canonical residue of x mod p^k (k <= prec). Requires val >= 0.
u64 vu_reduce(const ScaledResidue& x, u32 k);

/// Sum of canonical residues mod p^k. Every term must have val >= 0; a
/// negative valuation aborts with the offending term index in the message.
u64 residue_sum(std::span<const ScaledResidue> terms, u32 k);

/// Decides lhs_num/denom = rhs (mod p^k) as p-adic numbers by testing
/// lhs_num = denom*rhs (mod p^(k + ord_p(denom))).
bool congruent_with_denominator(const ScaledResidue& lhs_num, const ScaledResidue& rhs,
                                u64 denom, u32 k);

/// Working precision policy: a check targeting modulus p^k runs at
/// prec = k + a + 2. Verifies the 128-bit cap (p^(2 prec) must fit).
u32 working_prec(const PrimePower& pp, u32 k_target);

} // namespace cbc
