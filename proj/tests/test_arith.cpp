#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cbc/arith.hpp"

#include <numeric>

using namespace cbc;

TEST_CASE("symbol3 on small and negative inputs") {
    CHECK(symbol3(5) == -1);
    CHECK(symbol3(6) == 0);
    CHECK(symbol3(-4) == -1);
    CHECK(symbol3(0) == 0);
    CHECK(symbol3(1) == 1);
    for (i64 a = -1000; a <= 1000; ++a) {
        int s = symbol3(a);
        CHECK(s >= -1);
        CHECK(s <= 1);
        CHECK((a - s) % 3 == 0);
    }
}

TEST_CASE("iverson bracket") {
    CHECK(iverson(true) == 1);
    CHECK(iverson(false) == 0);
    CHECK(iverson(7 % 3 != 0) == 1);
}

TEST_CASE("spf sieve marks least prime factors") {
    SpfTable spf = sieve_spf(10000);
    CHECK(spf[10] == 2);
    CHECK(spf[49] == 7);
    CHECK(spf[97] == 97);
    CHECK(spf[2] == 2);
    CHECK(spf[9999] == 3);
}

TEST_CASE("factorize reconstructs n across the range") {
    SpfTable spf = sieve_spf(10000);
    CHECK(factorize(12, spf).factors == std::vector<std::pair<u64, u32>>{{2, 2}, {3, 1}});
    CHECK(factorize(97, spf).factors == std::vector<std::pair<u64, u32>>{{97, 1}});
    CHECK(factorize(100, spf).factors == std::vector<std::pair<u64, u32>>{{2, 2}, {5, 2}});
    for (u64 n = 2; n <= 10000; ++n) {
        Factorization f = factorize(n, spf);
        u64 prod = 1;
        u64 prev = 0;
        for (auto [p, e] : f.factors) {
            CHECK(p > prev);
            CHECK(e >= 1);
            prev = p;
            prod *= ipow(p, e);
        }
        CHECK(prod == n);
    }
    CHECK_THROWS_AS(factorize(10001, spf), std::out_of_range);
    CHECK_THROWS_AS(factorize(1, spf), std::out_of_range);
}

TEST_CASE("mod_pow and mod_inv") {
    CHECK(mod_pow(2, 4, 25) == 16);
    CHECK(mod_inv(2, 25) == 13);
    CHECK_THROWS_AS(mod_inv(5, 25), non_invertible_error);
    for (u64 m = 2; m <= 500; ++m)
        for (u64 u = 1; u < m; ++u) {
            if (std::gcd(u, m) != 1) continue;
            CHECK(u * mod_inv(u, m) % m == 1);
        }
}

TEST_CASE("fermat quotients") {
    CHECK(fermat_quotient(2, 5, 1) == 3);
    CHECK(fermat_quotient(3, 5, 1) == 1);
    CHECK(fermat_quotient(1, 7, 2) == 0);
    CHECK_THROWS_AS(fermat_quotient(10, 5, 1), std::invalid_argument);
    // q_p(b) p + 1 = b^(p-1) (mod p^(prec+1))
    for (u64 p : {5, 7, 11, 13, 97}) {
        for (u64 b = 1; b < 30; ++b) {
            if (b % p == 0) continue;
            for (u32 prec : {1u, 2u, 3u}) {
                u64 m = ipow(p, prec + 1);
                u64 q = fermat_quotient(b, p, prec);
                CHECK((static_cast<u128>(q) * p + 1) % m == mod_pow(b, p - 1, m));
            }
        }
    }
}

TEST_CASE("prime power enumeration") {
    auto pps = prime_powers_up_to(2, 400);
    CHECK(pps.size() == 8);
    CHECK(pps.back().pa == 256);
    auto pps7 = prime_powers_up_to(7, 400);
    CHECK(pps7.size() == 3);
    CHECK(pps7.back().pa == 343);
}
