#include "cbc/binom_engine.hpp"

#include <cassert>

namespace cbc {

namespace {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

// In-place mul/div of cur by a positive integer factor, valuation split off.
void mul_int(ScaledResidue& cur, u64 factor, u64 p, u128 pmod) {
    if (cur.is_zero()) return;
    while (factor % p == 0) {
        factor /= p;
        ++cur.val;
    }
    cur.unit = cur.unit * (static_cast<u128>(factor) % pmod) % pmod;
}

void div_int(ScaledResidue& cur, u64 factor, u64 p, u128 pmod) {
    if (cur.is_zero()) return;
    while (factor % p == 0) {
        factor /= p;
        --cur.val;
    }
    u128 inv = mod_inv(factor % static_cast<u64>(pmod), static_cast<u64>(pmod));
    cur.unit = cur.unit * inv % pmod;
}

} // namespace

ShiftedCursor::ShiftedCursor(PrimePower pp, u32 prec, u64 d) : pp_(pp), prec_(prec), d_(d) {
    cur_ = d == 0 ? vu_from_int(1, pp.p, prec) : vu_zero(pp.p, prec);
}

void ShiftedCursor::advance() {
    ++k_;
    if (k_ < d_) return;
    if (k_ == d_) {
        cur_ = vu_from_int(1, pp_.p, prec_); // binom(2d, 2d)
        return;
    }
    u128 pmod = ipow128(pp_.p, prec_);
    u64 k = k_ - 1; // step ratio from k to k+1
    mul_int(cur_, 2 * k + 1, pp_.p, pmod);
    mul_int(cur_, 2 * k + 2, pp_.p, pmod);
    div_int(cur_, k + 1 + d_, pp_.p, pmod);
    div_int(cur_, k + 1 - d_, pp_.p, pmod);
}

std::vector<ScaledResidue> shifted_seq(PrimePower pp, u32 prec, u64 d, u64 count) {
    std::vector<ScaledResidue> out;
    out.reserve(count);
    ShiftedCursor cur(pp, prec, d);
    for (u64 k = 0; k < count; ++k) {
        out.push_back(cur.value());
        cur.advance();
    }
    return out;
}

ScaledResidue binom_direct(u64 n, u64 k, u64 p, u32 prec) {
    if (k > n) throw std::invalid_argument("binom_direct: k > n");
    ScaledResidue acc = vu_from_int(1, p, prec);
    u128 pmod = ipow128(p, prec);
    for (u64 i = 1; i <= k; ++i) {
        mul_int(acc, n - k + i, p, pmod);
        div_int(acc, i, p, pmod);
    }
    return acc;
}

GeneralCursor::GeneralCursor(PrimePower pp, u32 prec, u64 m, u64 n, u64 d)
    : pp_(pp), prec_(prec), big_m_(pp.pa * m), big_n_(pp.pa * n), d_(d) {
    if (m < n) throw std::invalid_argument("general cursor: m < n");
    k0_ = big_n_ + d_ > big_m_ ? big_n_ + d_ - big_m_ : 0;
    cur_ = k0_ == 0 ? binom_direct(big_m_, big_n_ + d_, pp.p, prec) : vu_zero(pp.p, prec);
}

void GeneralCursor::advance() {
    ++k_;
    if (k_ < k0_) return;
    if (k_ == k0_) {
        cur_ = binom_direct(big_m_ + 2 * k0_, big_n_ + k0_ + d_, pp_.p, prec_);
        return;
    }
    u128 pmod = ipow128(pp_.p, prec_);
    u64 k = k_ - 1;
    mul_int(cur_, big_m_ + 2 * k + 1, pp_.p, pmod);
    mul_int(cur_, big_m_ + 2 * k + 2, pp_.p, pmod);
    div_int(cur_, big_n_ + k + 1 + d_, pp_.p, pmod);
    div_int(cur_, big_m_ - big_n_ + k + 1 - d_, pp_.p, pmod);
}

std::vector<ScaledResidue> general_seq(PrimePower pp, u32 prec, u64 m, u64 n, u64 d, u64 count) {
    if (d > pp.pa) throw std::invalid_argument("general_seq: d > p^a");
    std::vector<ScaledResidue> out;
    out.reserve(count);
    GeneralCursor cur(pp, prec, m, n, d);
    for (u64 k = 0; k < count; ++k) {
        out.push_back(cur.value());
        cur.advance();
    }
    return out;
}

std::vector<ScaledResidue> catalan_seq(PrimePower pp, u32 prec, u64 n_offset, u64 count) {
    GeneralCursor b0(pp, prec, 2 * n_offset, n_offset, 0);
    GeneralCursor b1(pp, prec, 2 * n_offset, n_offset, 1);
    u64 pmod = static_cast<u64>(ipow128(pp.p, prec));
    std::vector<ScaledResidue> out;
    out.reserve(count);
    for (u64 k = 0; k < count; ++k) {
        u64 a = vu_reduce(b0.value(), prec);
        u64 b = vu_reduce(b1.value(), prec);
        out.push_back(vu_from_residue((a + pmod - b) % pmod, pp.p, prec));
        b0.advance();
        b1.advance();
    }
    return out;
}

CompositeCursor::CompositeCursor(const Factorization& fac, u32 shift)
    : n_(fac.n), n2_(fac.n * fac.n), shift_(shift) {
    if (shift > 1) throw std::invalid_argument("composite cursor: shift must be 0 or 1");
    if (fac.n < 2 || fac.n > 100'000'000ULL)
        throw std::invalid_argument("composite cursor: modulus out of range");
    exp_cap_ = 2;
    for (u64 v = 1; v < n2_; v *= 2) ++exp_cap_; // 2*ceil(log2(n^2)) headroom
    exp_cap_ *= 2;
    for (const auto& [p, e] : fac.factors) {
        (void)e;
        primes_.push_back(p);
        exps_.push_back(0);
        std::vector<u64> tab(static_cast<std::size_t>(exp_cap_) + 1);
        tab[0] = 1 % n2_;
        for (std::size_t i = 1; i < tab.size(); ++i) tab[i] = mul_mod(tab[i - 1], p, n2_);
        pw_.push_back(std::move(tab));
    }
    unit_ = 1; // binom(0,0); for shift 1 the k=0 value is 0 and the state resets at the seed
}

void CompositeCursor::strip(u64& x, int sign) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        u64 p = primes_[i];
        while (x % p == 0) {
            x /= p;
            exps_[i] += sign;
        }
    }
}

u64 CompositeCursor::reduce() const {
    if (k_ < shift_) return 0;
    u64 v = unit_;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        assert(exps_[i] >= 0 && exps_[i] <= exp_cap_);
        v = mul_mod(v, pw_[i][static_cast<std::size_t>(exps_[i])], n2_);
    }
    return v;
}

void CompositeCursor::advance() {
    ++k_;
    if (k_ < shift_) return;
    if (k_ == shift_) { // binom(2 shift, 2 shift) = 1
        unit_ = 1 % n2_;
        std::fill(exps_.begin(), exps_.end(), 0);
        return;
    }
    u64 k = k_ - 1;
    u64 m1 = 2 * k + 1, m2 = 2 * k + 2;
    u64 g1 = k + 1 + shift_, g2 = k + 1 - shift_;
    strip(m1, +1);
    strip(m2, +1);
    strip(g1, -1);
    strip(g2, -1);
    unit_ = mul_mod(unit_, m1 % n2_, n2_);
    unit_ = mul_mod(unit_, m2 % n2_, n2_);
    u64 g = mul_mod(g1 % n2_, g2 % n2_, n2_);
    unit_ = mul_mod(unit_, mod_inv(g, n2_), n2_);
}

std::vector<u64> composite_central_seq(u64 n, const Factorization& fac, u64 count) {
    if (fac.n != n) throw std::invalid_argument("composite_central_seq: factorization mismatch");
    std::vector<u64> out;
    out.reserve(count);
    CompositeCursor cur(fac, 0);
    for (u64 k = 0; k < count; ++k) {
        out.push_back(cur.reduce());
        cur.advance();
    }
    return out;
}

} // namespace cbc
