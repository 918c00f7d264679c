#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "lucanomial/lcatalan.hpp"
#include "lucanomial/nt.hpp"
#include "lucanomial/tables.hpp"
#include "oracles.hpp"

using namespace lucanomial;
using lucas::LucasSequence;

namespace {

// Rule-derived exception sets for the dataset C pairs, frozen ahead of the
// scans. Keyed by (l, P, Q).
const std::map<std::tuple<std::uint64_t, std::int64_t, std::int64_t>, std::set<std::uint64_t>>
    kFrozenExceptions = {
        {{3, 1, -5}, {2}}, {{3, 1, -2}, {2}}, {{3, 1, -1}, {}},  {{3, 1, 2}, {}},
        {{3, 1, 3}, {}},   {{3, 1, 4}, {2}}, {{3, 1, 7}, {2}},  {{3, 2, 3}, {}},
        {{3, 2, 5}, {}},   {{3, 2, 7}, {2}}, {{3, 3, 7}, {1}},  {{3, 3, 8}, {1}},
        {{3, 3, 10}, {1}}, {{3, 3, 11}, {1}}, {{3, 6, 35}, {1}}, {{3, 6, 37}, {1}},
        {{4, 1, -1}, {}},  {{4, 1, 2}, {}},  {{5, 1, -1}, {4}}, {{5, 1, 2}, {}},
        {{5, 1, 3}, {3}},  {{6, 1, -1}, {5}}, {{6, 1, 2}, {}},  {{7, 1, 2}, {6}},
        {{8, 1, 2}, {}},
};

}  // namespace

TEST_CASE("exact generalized Catalan values over a Lucas sequence") {
    LucasSequence fib(1, -1);
    for (std::uint64_t n = 1; n <= 60; ++n) CHECK(lcatalan::c_ul(fib, 1, n, false).is_integer);

    auto headline = lcatalan::c_ul(fib, 6, 5);
    CHECK_FALSE(headline.is_integer);
    CHECK(headline.denominator == 2);
    CHECK(headline.ledger_complete);
    CHECK(headline.ledger.count(2) == 1);
    CHECK(headline.ledger.at(2).numerator_valuation == 17);
    CHECK(headline.ledger.at(2).denominator_valuation == 18);

    // unit denominator: U_13(1,2) = -1
    LucasSequence u12(1, 2);
    CHECK(u12.term(13) == -1);
    CHECK(lcatalan::c_ul(u12, 4, 12).is_integer);
}

TEST_CASE("valuation of C_{U,l}(n) by carry arithmetic") {
    LucasSequence fib(1, -1);
    CHECK(lcatalan::c_ul_valuation(fib, 6, 2, 5) == -1);

    LucasSequence u12(1, 2);
    // rank of 271 is 17 > (l+1)n
    CHECK(lcatalan::c_ul_valuation(u12, 2, 271, 5) == 0);
    for (std::uint64_t n = 1; n <= 150; ++n) CHECK(lcatalan::c_ul_valuation(u12, 8, 3, n) >= 0);

    // matches the exact ledger where the value is materialized
    for (std::uint64_t l = 1; l <= 4; ++l) {
        for (std::uint64_t n = 1; n <= 20; ++n) {
            auto value = lcatalan::c_ul(fib, l, n);
            auto v2 = lcatalan::c_ul_valuation(fib, l, 2, n);
            std::uint64_t den_v2 = oracles::direct_valuation(value.denominator, 2);
            if (v2 < 0) {
                CHECK(den_v2 == static_cast<std::uint64_t>(-v2));
            } else {
                CHECK(den_v2 == 0);
                CHECK(oracles::direct_valuation(value.numerator, 2) ==
                      static_cast<std::uint64_t>(v2));
            }
        }
    }
}

TEST_CASE("closed-form summand valuations") {
    LucasSequence fib(1, -1);
    auto profile = fib.rank(2);  // rho 3, v 1, delta 1

    // lambda=1, j=0, i=1: n = 2, binom(2n,n)_U = binom(4,2)_F = 6
    auto low = lcatalan::valuation_contribution_low(profile, 1, 0, 1);
    CHECK(low.contribution == 1);
    CHECK(low.contribution == oracles::direct_valuation(fib.lucasnomial(4, 2), 2));

    // i = rho, j = 0: only the two-summand carries survive
    auto at_rho = lcatalan::valuation_contribution_low(profile, 1, 0, 3);
    CHECK(at_rho.contribution == at_rho.carries);

    // i = 2 rho, p = 2, j = 1: the contribution collapses to c_i
    auto top = lcatalan::valuation_contribution_high(profile, 1, 1, 6);
    CHECK(top.contribution == top.carries);
    CHECK(top.contribution == 0);
    CHECK(oracles::direct_valuation(fib.lucasnomial(35, 5), 2) == 0);

    CHECK_THROWS_AS(lcatalan::valuation_contribution_low(profile, 1, 0, 4), std::domain_error);
    CHECK_THROWS_AS(lcatalan::valuation_contribution_high(profile, 1, 0, 3), std::domain_error);
    CHECK_THROWS_AS(lcatalan::valuation_contribution_low(profile, 2, 0, 1), std::domain_error);

    // small grid against the carry rule and exact values
    for (auto& u : {LucasSequence(1, -1), LucasSequence(1, 2), LucasSequence(1, 3),
                    LucasSequence(3, -1), LucasSequence(2, 3)}) {
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            if (u.Q() % static_cast<std::int64_t>(p) == 0) continue;
            auto prof = u.rank(p);
            for (std::uint64_t lambda = 1; lambda <= 6; ++lambda) {
                if (lambda % p == 0) continue;
                for (std::uint32_t j = 0; j <= 2; ++j) {
                    std::uint64_t pj = 1;
                    for (std::uint32_t k = 0; k < j; ++k) pj *= p;
                    std::uint64_t n = lambda * prof.rho * pj - 1;
                    if (n == 0) continue;
                    for (std::uint64_t i = 1; i <= 2 * prof.rho; ++i) {
                        auto breakdown =
                            i <= prof.rho
                                ? lcatalan::valuation_contribution_low(prof, lambda, j, i)
                                : lcatalan::valuation_contribution_high(prof, lambda, j, i);
                        CHECK(breakdown.contribution ==
                              u.lucasnomial_valuation(prof, i * n, n));
                        if ((i + 1) * n <= 250)
                            CHECK(breakdown.contribution ==
                                  oracles::direct_valuation(u.lucasnomial((i + 1) * n, n), p));
                    }
                }
            }
        }
    }
}

TEST_CASE("witness families") {
    LucasSequence fib(1, -1);

    // rank of 13 in Fibonacci is 7
    auto w = lcatalan::nonintegral_witnesses_rank_l(fib, 7, 13, 2);
    CHECK(w == std::vector<std::uint64_t>{6, 90, 1182});
    for (auto n : w)
        CHECK(lcatalan::c_ul_valuation(fib, 7, 13, n) ==
              -static_cast<std::int64_t>(fib.rank(13).val_u_rho));
    CHECK_THROWS_AS(lcatalan::nonintegral_witnesses_rank_l(fib, 5, 13, 1), std::domain_error);
    CHECK_THROWS_AS(lcatalan::nonintegral_witnesses_rank_l(fib, 13, 13, 1), std::domain_error);

    // rho(7) = 8 = 7+1 and rho(13) = 7 give the paired family at l = 8
    auto paired = lcatalan::nonintegral_witnesses_paired_ranks(fib, 7, 13, 2);
    CHECK(paired == std::vector<std::uint64_t>{6, 90, 1182});
    CHECK_THROWS_AS(lcatalan::nonintegral_witnesses_paired_ranks(fib, 11, 13, 1),
                    std::domain_error);

    // the large-prime mid-range family: rho(271) = 17 in U(1,2), l = 30
    LucasSequence u12(1, 2);
    auto window = lcatalan::nonintegral_witnesses_rank_window(u12, 30, 271, 1);
    CHECK(window == std::vector<std::uint64_t>{4606});
    CHECK(lcatalan::c_ul_valuation(u12, 30, 271, 4606) < 0);
    CHECK_THROWS_AS(lcatalan::nonintegral_witnesses_rank_window(u12, 40, 271, 1),
                    std::domain_error);
    CHECK_THROWS_AS(lcatalan::nonintegral_witnesses_rank_window(u12, 30, 2, 1),
                    std::domain_error);
}

TEST_CASE("window guarantee and its exceptional corners") {
    // rho = p = l = 3 for U(1,-2): U_3 = 3
    LucasSequence u(1, -2);
    CHECK(u.rank(3).rho == 3);
    CHECK_FALSE(lcatalan::window_integrality_guarantee(u, 3, 3, 1, 0));
    CHECK(lcatalan::window_integrality_guarantee(u, 3, 3, 2, 0));
    CHECK(lcatalan::c_ul_valuation(u, 3, 3, 2 * 3 - 1) >= 0);
    CHECK(lcatalan::window_integrality_guarantee(u, 3, 3, 1, 1));
    CHECK(lcatalan::c_ul_valuation(u, 3, 3, 3 * 3 - 1) >= 0);
    CHECK_THROWS_AS(lcatalan::window_integrality_guarantee(u, 3, 3, 3, 0), std::domain_error);

    // rho = p-1, l = p for U(1,3): U_4 = -5, rank of 5 is 4
    LucasSequence u13(1, 3);
    CHECK(u13.rank(5).rho == 4);
    CHECK_FALSE(lcatalan::window_integrality_guarantee(u13, 5, 5, 1, 0));
    CHECK(lcatalan::c_ul_valuation(u13, 5, 5, 4 - 1) < 0);
    CHECK(lcatalan::window_integrality_guarantee(u13, 5, 5, 2, 0));
    CHECK(lcatalan::c_ul_valuation(u13, 5, 5, 2 * 4 - 1) >= 0);
}

TEST_CASE("defectivity by gcd stripping") {
    LucasSequence u12(1, 2);
    CHECK(lcatalan::check_defective(u12, 30));
    CHECK(lcatalan::check_defective(u12, 13));
    CHECK(lcatalan::check_defective(u12, 18));

    LucasSequence fib(1, -1);
    CHECK(lcatalan::check_defective(fib, 12));
    CHECK_FALSE(lcatalan::check_defective(fib, 11));

    LucasSequence u27(2, 11);
    CHECK(lcatalan::check_defective(u27, 5));

    LucasSequence one7(1, 7);
    CHECK(lcatalan::check_defective(one7, 2));  // U_2 = 1

    CHECK_THROWS_AS(lcatalan::check_defective(fib, 31), std::domain_error);
    CHECK_THROWS_AS(lcatalan::check_defective(fib, 1), std::domain_error);
}

TEST_CASE("low rank primes and scans") {
    LucasSequence fib(1, -1);
    auto profiles = lcatalan::low_rank_primes(fib, 6);
    std::set<std::uint64_t> primes;
    for (auto& pr : profiles) primes.insert(pr.p);
    CHECK(primes == std::set<std::uint64_t>{2, 3, 5});

    CHECK(lcatalan::nonintegral_set_u(fib, 6, 150) == std::set<std::uint64_t>{5});
    CHECK(lcatalan::nonintegral_set_u(LucasSequence(1, 2), 8, 150).empty());
}

TEST_CASE("ledger reconciles with the reduced fraction") {
    for (auto& u : {LucasSequence(1, -1), LucasSequence(1, 2), LucasSequence(2, 3)}) {
        for (std::uint64_t l = 1; l <= 5; ++l) {
            for (std::uint64_t n = 1; n <= 25; ++n) {
                auto value = lcatalan::c_ul(u, l, n);
                CHECK(value.ledger_complete);
                for (auto& [p, entry] : value.ledger) {
                    std::uint64_t den_v = entry.denominator_valuation > entry.numerator_valuation
                                              ? entry.denominator_valuation -
                                                    entry.numerator_valuation
                                              : 0;
                    std::uint64_t num_v = entry.numerator_valuation - entry.denominator_valuation +
                                          den_v;
                    CHECK(nt::valuation(value.denominator, p) == den_v);
                    CHECK(nt::valuation(value.numerator, p) == num_v);
                }
            }
        }
    }
}

TEST_CASE("l = 1 always yields integers") {
    for (auto& u : {LucasSequence(1, -1), LucasSequence(1, 2), LucasSequence(2, 3),
                    LucasSequence(3, -5)}) {
        for (std::uint64_t n = 1; n <= 200; ++n)
            CHECK(lcatalan::c_ul(u, 1, n, false).is_integer);
    }
}

TEST_CASE("primes of rank above l never go negative") {
    for (auto& u : {LucasSequence(1, -1), LucasSequence(1, 2), LucasSequence(2, 3),
                    LucasSequence(1, 4), LucasSequence(5, 2)}) {
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
            if (u.Q() % static_cast<std::int64_t>(p) == 0) continue;
            auto profile = u.rank(p);
            if (profile.rho < 2) continue;
            std::uint64_t l = profile.rho - 1;
            if (l < 1) continue;
            for (std::uint64_t n = 1; n <= 200; ++n)
                CHECK(lcatalan::c_ul_valuation(u, profile, l, n) >= 0);
        }
    }
}

TEST_CASE("valuation sign matches the exact verdict") {
    for (auto& u : {LucasSequence(1, -1), LucasSequence(1, 2), LucasSequence(1, 3),
                    LucasSequence(2, 3)}) {
        for (std::uint64_t l = 1; l <= 6; ++l) {
            auto profiles = lcatalan::low_rank_primes(u, l);
            for (std::uint64_t n = 1; (l + 1) * n <= 400; ++n) {
                std::int64_t least = 0;
                for (auto& profile : profiles)
                    least = std::min(least, lcatalan::c_ul_valuation(u, profile, l, n));
                CHECK((least >= 0) == lcatalan::c_ul(u, l, n, false).is_integer);
            }
        }
    }
}

TEST_CASE("rule-derived exception sets match the frozen fixtures") {
    for (auto& [key, expected] : kFrozenExceptions) {
        auto [l, P, Q] = key;
        LucasSequence u(P, Q);
        CHECK_MESSAGE(lcatalan::expected_exception_set(u, l) == expected, "l=", l, " P=", P,
                      " Q=", Q);
    }
    // family instances at l = 2
    for (std::int64_t Q : {-7, -3, 2, 3, 5, 9}) {
        LucasSequence u(1, Q);
        CHECK(lcatalan::expected_exception_set(u, 2).empty());
    }
    for (std::int64_t Q : {-5, -1, 3, 7, 11}) {
        LucasSequence u(2, Q);
        CHECK(lcatalan::expected_exception_set(u, 2) == std::set<std::uint64_t>{1});
    }
}

TEST_CASE("dataset verification") {
    for (auto& entry : lcatalan::verify_table_b())
        CHECK_MESSAGE(entry.verdict == tables::Verdict::confirmed, entry.payload, ": ",
                      entry.note);

    for (auto& entry : lcatalan::verify_table_a(4))
        CHECK_MESSAGE(entry.verdict != tables::Verdict::refuted, entry.payload, ": ", entry.note);

    for (auto& entry : lcatalan::verify_table_c(60, 6))
        CHECK_MESSAGE(entry.verdict != tables::Verdict::refuted, entry.payload, ": ", entry.note);
}
