#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lucanomial/lucas.hpp"
#include "lucanomial/nt.hpp"
#include "oracles.hpp"

using namespace lucanomial;
using lucas::LucasSequence;

TEST_CASE("terms by forward iteration") {
    LucasSequence fib(1, -1);
    std::vector<std::int64_t> fib_expect{0, 1, 1, 2, 3, 5, 8};
    for (std::size_t n = 0; n < fib_expect.size(); ++n) CHECK(fib.term(n) == fib_expect[n]);

    LucasSequence u12(1, 2);
    std::vector<std::int64_t> u12_expect{0, 1, 1, -1, -3, -1, 5, 7, -3};
    for (std::size_t n = 0; n < u12_expect.size(); ++n) CHECK(u12.term(n) == u12_expect[n]);

    for (auto& u : {LucasSequence(3, 7), LucasSequence(10, -9)}) CHECK(u.term(1) == 1);
}

TEST_CASE("construction contracts and flags") {
    CHECK_THROWS_AS(LucasSequence(0, 2), std::domain_error);
    CHECK_THROWS_AS(LucasSequence(-1, -1), std::domain_error);
    CHECK_THROWS_AS(LucasSequence(3, 0), std::domain_error);

    LucasSequence degenerate(1, 1);  // U_6 = 0
    CHECK_FALSE(degenerate.regular());
    CHECK_THROWS_AS(degenerate.generalized_factorial(6), std::domain_error);
    CHECK_THROWS_AS(degenerate.lucasnomial(8, 3), std::domain_error);

    LucasSequence shared_factor(4, 2);
    CHECK_FALSE(shared_factor.regular());

    LucasSequence zero_disc(2, 1);  // U_n = n
    CHECK(zero_disc.regular());
    CHECK_FALSE(zero_disc.delta_regular());
    CHECK(zero_disc.discriminant() == 0);

    LucasSequence fib(1, -1);
    CHECK(fib.regular());
    CHECK(fib.delta_regular());
    CHECK(fib.discriminant() == 5);
}

TEST_CASE("rank of appearance") {
    LucasSequence u12(1, 2);
    CHECK(u12.rank(3).rho == 4);
    CHECK(u12.rank(271).rho == 17);
    CHECK_THROWS_AS(u12.rank(2), std::domain_error);  // 2 | Q

    LucasSequence fib(1, -1);
    auto two = fib.rank(2);
    CHECK(two.rho == 3);
    CHECK(two.val_u_rho == 1);
    CHECK(two.delta == 1);  // v_2((1+3)/2)

    CHECK(fib.rank(5).rho == 5);
    CHECK(fib.rank(11).rho == 10);
    CHECK(fib.rank(13).rho == 7);
    CHECK_THROWS_AS(fib.rank(4), std::domain_error);  // not prime
}

TEST_CASE("rank profile invariants over a small pool") {
    std::vector<LucasSequence> pool;
    for (std::int64_t P = 1; P <= 5; ++P)
        for (std::int64_t Q = -5; Q <= 5; ++Q) {
            if (Q == 0) continue;
            LucasSequence u(P, Q);
            if (u.delta_regular()) pool.push_back(u);
        }
    for (const auto& u : pool) {
        for (std::uint64_t p = 2; p <= 100; ++p) {
            if (!nt::is_prime(p)) continue;
            if (u.Q() % static_cast<std::int64_t>(p) == 0) continue;
            auto profile = u.rank(p);
            CHECK(profile.rho >= 2);
            CHECK(oracles::direct_valuation(u.term(profile.rho), p) == profile.val_u_rho);
            CHECK(profile.val_u_rho >= 1);
            for (std::uint64_t k = 1; k < profile.rho; ++k)
                CHECK(u.term(k) % static_cast<long>(p) != 0);
            if (p == 2) {
                bool even_disc = mpz_even_p(u.discriminant().get_mpz_t());
                CHECK(profile.rho == (even_disc ? 2u : 3u));
            } else if (u.discriminant() % static_cast<long>(p) == 0) {
                CHECK(profile.rho == p);
            } else {
                std::uint64_t target = p - nt::legendre_symbol(u.discriminant(), p);
                CHECK(target % profile.rho == 0);
            }
        }
    }
}

TEST_CASE("term valuation law") {
    LucasSequence fib(1, -1);
    CHECK(fib.term_valuation(2, 3) == 1);
    CHECK(fib.term_valuation(2, 6) == 3);  // v_2(U_3) + v_2(2) + delta = 1+1+1
    CHECK(fib.term_valuation(2, 7) == 0);
    CHECK(fib.term_valuation(2, 5) == 0);

    for (auto& u : {LucasSequence(1, -1), LucasSequence(1, 2), LucasSequence(3, 5),
                    LucasSequence(2, -3)}) {
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull}) {
            if (u.Q() % static_cast<std::int64_t>(p) == 0) continue;
            auto profile = u.rank(p);
            for (std::uint64_t n = 1; n <= 150; ++n) {
                mpz_class t = u.term(n);
                std::uint64_t direct = t % static_cast<long>(p) == 0
                                           ? oracles::direct_valuation(t, p)
                                           : 0;
                CHECK(u.term_valuation(profile, n) == direct);
            }
        }
    }
}

TEST_CASE("generalized factorials") {
    LucasSequence fib(1, -1);
    CHECK(fib.generalized_factorial(0) == 1);
    CHECK(fib.generalized_factorial(5) == 30);
    LucasSequence u12(1, 2);
    CHECK(u12.generalized_factorial(4) == 3);
    CHECK(u12.generalized_factorial(5) == -3);
}

TEST_CASE("lucasnomial coefficients") {
    LucasSequence fib(1, -1);
    CHECK(fib.lucasnomial(9, 0) == 1);
    CHECK(fib.lucasnomial(3, 5) == 0);
    CHECK(fib.lucasnomial(6, 3) == 60);

    // strong divisibility keeps every quotient exact
    for (auto& u : {LucasSequence(1, -1), LucasSequence(1, 2), LucasSequence(2, 3)}) {
        for (std::uint64_t m = 0; m <= 120; ++m)
            for (std::uint64_t n = 0; n <= m; n += 7)
                CHECK_NOTHROW(u.lucasnomial(m, n));
    }

    std::mt19937_64 eng(2024);
    for (int rep = 0; rep < 100; ++rep) {
        std::int64_t q = static_cast<std::int64_t>(eng() % 9) - 4;
        if (q == 0) continue;
        LucasSequence u(1 + eng() % 4, q);
        if (!u.delta_regular()) continue;
        std::uint64_t m = eng() % 80, n = eng() % 80;
        CHECK(u.lucasnomial(m, n) == oracles::lucasnomial_by_factorials(u, m, n));
    }
}

TEST_CASE("generalized multinomials") {
    LucasSequence fib(1, -1);
    std::vector<std::uint64_t> single{11};
    CHECK(fib.l_lucasnomial(single) == 1);
    std::vector<std::uint64_t> ones{1, 1, 1};
    CHECK(fib.l_lucasnomial(ones) == 2);
    std::vector<std::uint64_t> sevens(7, 5);
    CHECK(oracles::direct_valuation(fib.l_lucasnomial(sevens), 2) == 17);
    CHECK(fib.l_lucasnomial(sevens) == oracles::l_lucasnomial_by_factorials(fib, sevens));

    std::mt19937_64 eng(77);
    for (int rep = 0; rep < 50; ++rep) {
        std::int64_t q = static_cast<std::int64_t>(eng() % 7) - 3;
        if (q == 0) continue;
        LucasSequence u(1 + eng() % 3, q);
        if (!u.delta_regular()) continue;
        std::vector<std::uint64_t> parts(1 + eng() % 5);
        for (auto& a : parts) a = eng() % 30;
        CHECK(u.l_lucasnomial(parts) == oracles::l_lucasnomial_by_factorials(u, parts));
    }
}

TEST_CASE("multinomial valuation splits over the telescoping factors") {
    std::mt19937_64 eng(555);
    for (int rep = 0; rep < 60; ++rep) {
        std::int64_t q = static_cast<std::int64_t>(eng() % 9) - 4;
        if (q == 0) continue;
        LucasSequence u(1 + eng() % 4, q);
        if (!u.delta_regular()) continue;
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[eng() % 4];
        if (u.Q() % static_cast<std::int64_t>(p) == 0) continue;
        auto profile = u.rank(p);
        std::vector<std::uint64_t> parts(2 + eng() % 4);
        for (auto& a : parts) a = 1 + eng() % 40;
        std::uint64_t summed = 0, prefix = parts[0];
        for (std::size_t i = 1; i < parts.size(); ++i) {
            summed += u.lucasnomial_valuation(profile, prefix, parts[i]);
            prefix += parts[i];
        }
        CHECK(summed == oracles::direct_valuation(u.l_lucasnomial(parts), p));
    }
}

TEST_CASE("carry-rule valuation of Lucasnomials") {
    LucasSequence fib(1, -1);
    CHECK(fib.lucasnomial_valuation(2, 3, 3) == 2);
    CHECK(oracles::direct_valuation(fib.lucasnomial(6, 3), 2) == 2);

    LucasSequence u12(1, 2);
    CHECK(u12.lucasnomial_valuation(3, 4, 4) == 0);
    CHECK(oracles::direct_valuation(u12.lucasnomial(8, 4), 3) == 0);

    // rank beyond m+n means no contribution at all
    CHECK(u12.lucasnomial_valuation(271, 8, 8) == 0);

    std::mt19937_64 eng(31);
    for (int rep = 0; rep < 400; ++rep) {
        std::int64_t q = static_cast<std::int64_t>(eng() % 11) - 5;
        if (q == 0) continue;
        LucasSequence u(1 + eng() % 5, q);
        if (!u.delta_regular()) continue;
        std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13}[eng() % 6];
        if (u.Q() % static_cast<std::int64_t>(p) == 0) continue;
        std::uint64_t n = 1 + eng() % 149, m = 1 + eng() % 149;
        CHECK(u.lucasnomial_valuation(p, m, n) ==
              oracles::direct_valuation(u.lucasnomial(m + n, n), p));
    }
}
