#pragma once

#include "cbc/binom_engine.hpp"

#include <optional>
#include <string>

namespace cbc {

/// Exact rational in lowest terms, den > 0; all arithmetic overflow-checked.
struct Fraction {
    i128 num;
    i128 den;
};

std::string to_string(const Fraction& f);

/// S_d = sum_{0<k<d} (-1)^(k-1)/k * ((d-k)/3) as an exact fraction; d <= 25.
Fraction s_exact(u32 d);

/// Canonical residue of p^a * S_d mod p^k_target. Every term of the scaled
/// sum has valuation >= a - ord_p(k) >= 1, so the reduction never errors.
u64 s_scaled(PrimePower pp, u64 d, u32 k_target);

/// sums[d] = sum_{k=0}^{p^a-1} binom(2k, k+d) mod p^prec for d = 0..p^a.
/// Built once per (pp, prec), read-only afterwards.
struct ShiftedSumTable {
    PrimePower pp;
    u32 prec;
    std::vector<u64> sums;
};

ShiftedSumTable build_shifted_sums(PrimePower pp, u32 prec);

/// 2 F(d) as a canonical residue (multiply-through representation):
/// residue mod p^(k_target + ord_p(2)), denominator 2 understood.
struct TwoF {
    u64 residue;
    u32 mod_exp;
};

TwoF compute_F(PrimePower pp, u64 d, u32 k_target, const ShiftedSumTable* cache = nullptr);

struct CheckParams {
    std::optional<i64> p, a, d, m, n;
};

/// One check outcome. For congruence clauses lhs/rhs are canonical residues
/// in [0, modulus); modulus 0 marks an exact integer identity where the
/// sides are reported as plain (possibly negative) integers.
struct CongruenceReport {
    std::string check_id;
    CheckParams params;
    u64 modulus = 0;
    i64 lhs = 0;
    i64 rhs = 0;
    bool pass = false;
    std::string note;
};

enum class Thm11Clause { Eq12, Eq13, Eq14 };
CongruenceReport check_theorem_1_1(PrimePower pp, u64 d, Thm11Clause clause,
                                   const ShiftedSumTable* cache = nullptr);

enum class Cor11Clause { Eq15, Eq16, Eq17, Eq18, Eq19, Adamchuk };
CongruenceReport check_corollary_1_1(PrimePower pp, u64 d, Cor11Clause clause,
                                     const ShiftedSumTable* cache = nullptr);

enum class Thm12Clause { Eq110, Eq111 };
CongruenceReport check_theorem_1_2(PrimePower pp, u64 d, u64 m, u64 n, Thm12Clause clause);

enum class Cor12Clause { Eq112, Eq113 };
CongruenceReport check_corollary_1_2(PrimePower pp, u64 n, Cor12Clause clause);

CongruenceReport check_lemma_2_1(PrimePower pp, u64 m, u64 n);
CongruenceReport check_lemma_2_2(PrimePower pp);
CongruenceReport check_lemma_2_3(i64 n, i64 d); // exact integer identity
CongruenceReport check_lemma_2_4(PrimePower pp);
CongruenceReport check_wolstenholme(u64 p);

enum class LehmerSum { Half, Third, Sixth };
CongruenceReport check_lehmer(u64 p, LehmerSum which);

CongruenceReport check_ternary(u64 n, u64 r); // exact integer identity

/// Both asserted congruences of the telescoped F-sum: the mod p^3 closed
/// form and the mod p^2 vanishing, multiplied through by 2.
std::vector<CongruenceReport> check_lemma_3_1(PrimePower pp, u64 d,
                                              const ShiftedSumTable* cache = nullptr);

} // namespace cbc
