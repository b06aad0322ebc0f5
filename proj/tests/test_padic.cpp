#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cbc/padic.hpp"

#include "oracle.hpp"

#include <random>

using namespace cbc;
using oracle::BigRat;

namespace {

u64 unit64(const ScaledResidue& x) { return static_cast<u64>(x.unit); }

// Exact-rational shadow of a scaled residue for oracle comparisons.
BigRat as_rational(i64 num, i64 den) { return BigRat(num, den); }

} // namespace

TEST_CASE("vu_from_int extracts valuation and unit") {
    ScaledResidue a = vu_from_int(75, 5, 2);
    CHECK(a.val == 2);
    CHECK(unit64(a) == 3);

    ScaledResidue b = vu_from_int(-15, 5, 2);
    CHECK(b.val == 1);
    CHECK(unit64(b) == 22);

    ScaledResidue z = vu_from_int(0, 7, 3);
    CHECK(z.is_zero());
}

TEST_CASE("vu_mul and vu_div") {
    ScaledResidue x = vu_from_int(5 * 2, 5, 2);
    ScaledResidue y = vu_from_int(5 * 3, 5, 2);
    ScaledResidue m = vu_mul(x, y);
    CHECK(m.val == 2);
    CHECK(unit64(m) == 6);

    ScaledResidue q = vu_div(vu_from_int(75, 5, 2), vu_from_int(2, 5, 2));
    CHECK(q.val == 2);
    CHECK(unit64(q) == 14);

    ScaledResidue self = vu_div(x, x);
    CHECK(self.val == 0);
    CHECK(unit64(self) == 1);

    CHECK_THROWS_AS(vu_div(x, vu_zero(5, 2)), std::domain_error);
}

TEST_CASE("vu_reduce canonical residues") {
    CHECK(vu_reduce(vu_from_int(75, 5, 2), 2) == 0);
    CHECK(vu_reduce(vu_from_int(15, 5, 2), 2) == 15);
    ScaledResidue bad = vu_div(vu_from_int(1, 5, 2), vu_from_int(5, 5, 2));
    CHECK_THROWS_AS(vu_reduce(bad, 2), not_p_integral_error);
}

TEST_CASE("residue_sum") {
    std::vector<ScaledResidue> terms = {vu_from_int(5, 5, 2), vu_from_int(20, 5, 2)};
    CHECK(residue_sum(terms, 2) == 0);
    CHECK(residue_sum(std::span<const ScaledResidue>{}, 2) == 0);
    std::vector<ScaledResidue> mixed = {vu_from_int(1, 5, 2), vu_zero(5, 2)};
    CHECK(residue_sum(mixed, 2) == 1);
    std::vector<ScaledResidue> neg = {vu_from_int(1, 5, 3),
                                      vu_div(vu_from_int(1, 5, 3), vu_from_int(5, 5, 3))};
    bool threw = false;
    try {
        residue_sum(neg, 2);
    } catch (const not_p_integral_error& e) {
        threw = true;
        CHECK(std::string(e.what()).find("term 1") != std::string::npos);
    }
    CHECK(threw);
}

TEST_CASE("congruent_with_denominator examples") {
    CHECK(congruent_with_denominator(vu_from_int(75, 5, 4), vu_zero(5, 4), 2, 2));
    CHECK(congruent_with_denominator(vu_from_int(2, 7, 3), vu_from_int(1, 7, 3), 2, 1));
    CHECK(congruent_with_denominator(vu_from_int(2, 2, 4), vu_from_int(1, 2, 4), 2, 1));
    CHECK_FALSE(congruent_with_denominator(vu_from_int(76, 5, 4), vu_zero(5, 4), 2, 2));
}

TEST_CASE("round trip through vu_from_int and vu_reduce") {
    for (u64 p : {2, 3, 5, 7}) {
        std::mt19937_64 rng(p * 7919);
        for (int i = 0; i < 2000; ++i) {
            i64 x = static_cast<i64>(rng() % 2000001) - 1000000;
            for (u32 prec = 1; prec <= 6; ++prec) {
                for (u32 k = 1; k <= prec; ++k) {
                    u64 pk = ipow(p, k);
                    u64 expect = static_cast<u64>(((x % static_cast<i64>(pk)) + static_cast<i64>(pk)) %
                                                  static_cast<i64>(pk));
                    CHECK(vu_reduce(vu_from_int(x, p, prec), k) == expect);
                }
            }
        }
    }
}

TEST_CASE("vu_mul and vu_div agree with exact rational arithmetic") {
    std::mt19937_64 rng(20260810);
    int cases = 0;
    while (cases < 10000) {
        u64 p = std::array<u64, 4>{2, 3, 5, 7}[rng() % 4];
        u32 prec = 2 + static_cast<u32>(rng() % 4);
        i64 xn = static_cast<i64>(rng() % 4001) - 2000;
        i64 yn = static_cast<i64>(rng() % 4000) + 1;
        if (xn == 0) continue;
        ++cases;

        ScaledResidue x = vu_from_int(xn, p, prec);
        ScaledResidue y = vu_from_int(yn, p, prec);
        ScaledResidue prod = vu_mul(x, y);
        ScaledResidue quot = vu_div(x, y);

        // product: exact integer reduced mod p^k
        for (u32 k = 1; k <= prec; ++k) {
            oracle::BigInt exact = oracle::BigInt(xn) * yn;
            CHECK(vu_reduce(prod, k) == oracle::big_mod(exact, ipow(p, k)));
        }
        // quotient: compare against the exact reduced fraction when p-integral
        BigRat exact_q = as_rational(xn, yn);
        oracle::BigInt den = boost::multiprecision::denominator(exact_q);
        if (quot.val >= 0 && den % p != 0) {
            for (u32 k = 1; k <= prec; ++k)
                CHECK(vu_reduce(quot, k) == oracle::rational_mod(exact_q, p, k));
        }
        // division undoes multiplication at every precision
        ScaledResidue back = vu_div(prod, y);
        CHECK(back.val == x.val);
        CHECK(unit64(back) == unit64(x));
    }
}

TEST_CASE("congruent_with_denominator matches exact rational congruence") {
    std::mt19937_64 rng(424242);
    for (int i = 0; i < 4000; ++i) {
        u64 p = std::array<u64, 4>{2, 3, 5, 7}[rng() % 4];
        u32 k = 1 + static_cast<u32>(rng() % 3);
        u64 denom = 1 + rng() % 12;
        i64 num = static_cast<i64>(rng() % 2001) - 1000;
        i64 rv = static_cast<i64>(rng() % 41) - 20;
        u32 prec = k + 8;

        ScaledResidue lhs = vu_from_int(num, p, prec);
        ScaledResidue rhs = vu_from_int(rv, p, prec);
        bool got = congruent_with_denominator(lhs, rhs, denom, k);

        // oracle: num/denom - rv must have p-adic valuation >= k
        BigRat diff = as_rational(num, static_cast<i64>(denom)) - rv;
        bool expect;
        if (diff == 0) {
            expect = true;
        } else {
            oracle::BigInt nu = boost::multiprecision::numerator(diff);
            oracle::BigInt de = boost::multiprecision::denominator(diff);
            i64 valuation = static_cast<i64>(oracle::big_ord_p(nu, p)) -
                            static_cast<i64>(oracle::big_ord_p(de, p));
            expect = valuation >= static_cast<i64>(k);
        }
        CHECK(got == expect);
    }
}

TEST_CASE("working precision policy and the 128-bit cap") {
    PrimePower pp = prime_power(5, 2);
    CHECK(working_prec(pp, 3) == 7);
    PrimePower big = prime_power(2, 30);
    CHECK_THROWS_AS(working_prec(big, 40), precision_error);
}
