#include "cbc/padic.hpp"

namespace cbc {

namespace {

// p^(2 prec) must fit in 128 bits so unit products never truncate.
u128 modulus_for(u64 p, u32 prec) {
    u128 pmod = ipow128(p, prec);
    if (pmod > (static_cast<u128>(1) << 62))
        throw precision_error("scaled residue: p^prec exceeds the 128-bit product cap");
    return pmod;
}

void require_same_frame(const ScaledResidue& x, const ScaledResidue& y, const char* op) {
    if (x.p != y.p || x.prec != y.prec)
        throw std::invalid_argument(std::string(op) + ": operands disagree on p or prec");
}

} // namespace

ScaledResidue vu_zero(u64 p, u32 prec) {
    modulus_for(p, prec);
    return ScaledResidue{p, prec, ScaledResidue::kZeroVal, 0};
}

ScaledResidue vu_from_int(i128 x, u64 p, u32 prec) {
    u128 pmod = modulus_for(p, prec);
    if (x == 0) return vu_zero(p, prec);
    i32 val = 0;
    while (x % static_cast<i128>(p) == 0) {
        x /= static_cast<i128>(p);
        ++val;
    }
    i128 r = x % static_cast<i128>(pmod);
    if (r < 0) r += static_cast<i128>(pmod);
    return ScaledResidue{p, prec, val, static_cast<u128>(r)};
}

ScaledResidue vu_from_residue(u64 r, u64 p, u32 prec) {
    u128 pmod = modulus_for(p, prec);
    u128 v = static_cast<u128>(r) % pmod;
    if (v == 0) return vu_zero(p, prec);
    i32 val = 0;
    while (v % p == 0) {
        v /= p;
        ++val;
    }
    return ScaledResidue{p, prec, val, v};
}

ScaledResidue vu_mul(const ScaledResidue& x, const ScaledResidue& y) {
    require_same_frame(x, y, "vu_mul");
    if (x.is_zero() || y.is_zero()) return vu_zero(x.p, x.prec);
    u128 pmod = modulus_for(x.p, x.prec);
    return ScaledResidue{x.p, x.prec, x.val + y.val, (x.unit * y.unit) % pmod};
}

ScaledResidue vu_div(const ScaledResidue& x, const ScaledResidue& y) {
    require_same_frame(x, y, "vu_div");
    if (y.is_zero()) throw std::domain_error("vu_div: division by zero");
    if (x.is_zero()) return vu_zero(x.p, x.prec);
    u128 pmod = modulus_for(x.p, x.prec);
    u128 inv = mod_inv(static_cast<u64>(y.unit), static_cast<u64>(pmod));
    return ScaledResidue{x.p, x.prec, x.val - y.val, (x.unit * inv) % pmod};
}

u64 vu_reduce(const ScaledResidue& x, u32 k) {
    if (k > x.prec) throw precision_error("vu_reduce: target exponent exceeds working precision");
    if (x.is_zero()) return 0;
    if (x.val < 0)
        throw not_p_integral_error("vu_reduce: negative valuation, value is not a p-adic integer");
    if (static_cast<u32>(x.val) >= k) return 0;
    u128 pk = ipow128(x.p, k);
    u128 r = (x.unit % pk) * ipow128(x.p, static_cast<u32>(x.val)) % pk;
    return static_cast<u64>(r);
}

u64 residue_sum(std::span<const ScaledResidue> terms, u32 k) {
    if (terms.empty()) return 0;
    u64 p = terms.front().p;
    u64 pk = static_cast<u64>(ipow128(p, k));
    u64 acc = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const ScaledResidue& t = terms[i];
        if (t.p != p) throw std::invalid_argument("residue_sum: mixed primes");
        if (!t.is_zero() && t.val < 0)
            throw not_p_integral_error("residue_sum: term " + std::to_string(i) +
                                       " has negative valuation");
        acc = (acc + vu_reduce(t, k)) % pk;
    }
    return acc;
}

bool congruent_with_denominator(const ScaledResidue& lhs_num, const ScaledResidue& rhs,
                                u64 denom, u32 k) {
    if (denom == 0) throw std::invalid_argument("congruent_with_denominator: zero denominator");
    ScaledResidue d = vu_from_int(static_cast<i128>(denom), lhs_num.p, lhs_num.prec);
    u32 shift = d.is_zero() ? 0 : static_cast<u32>(d.val);
    u32 target = k + shift;
    if (target > lhs_num.prec)
        throw precision_error("congruent_with_denominator: prec insufficient for k + ord_p(denom)");
    u64 lhs_red = vu_reduce(lhs_num, target);
    u64 rhs_red = 0;
    if (!rhs.is_zero()) {
        if (rhs.p != lhs_num.p || rhs.prec != lhs_num.prec)
            throw std::invalid_argument("congruent_with_denominator: operands disagree on p or prec");
        ScaledResidue scaled = vu_mul(rhs, d);
        if (scaled.val < 0) return false; // denom*rhs not p-integral while lhs_num is
        rhs_red = vu_reduce(scaled, target);
    }
    return lhs_red == rhs_red;
}

u32 working_prec(const PrimePower& pp, u32 k_target) {
    u32 prec = k_target + pp.a + 2;
    modulus_for(pp.p, prec); // enforce the cap loudly
    return prec;
}

} // namespace cbc
