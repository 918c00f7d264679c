#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "lucanomial/lucas.hpp"
#include "lucanomial/mcatalan.hpp"
#include "lucanomial/tables.hpp"

namespace lucanomial::lcatalan {

using mcatalan::CatalanValue;

/// One summand's share of v_p of a central l-Lucasnomial at n = lambda *
/// rho * p^j - 1, evaluated in closed form. `contribution` reproduces the
/// corresponding valuation formula exactly and always matches the carry-rule
/// valuation of binom((i+1)n, n)_U.
struct ValuationBreakdown {
    std::uint64_t p = 0;
    std::uint64_t rho = 0;
    std::uint64_t lambda = 0;
    std::uint32_t j = 0;
    std::uint64_t i = 0;
    std::uint64_t Lambda_i = 0;   // lambda*(i+1) - 1
    std::uint64_t Lambda_ij = 0;  // lambda*(i+1) - 1 - [j == 0]
    std::uint64_t carries = 0;    // c_i
    std::uint64_t delta_j = 0;    // delta * [j > 0]
    std::uint64_t contribution = 0;
};

/// C_{U,l}(n) = l_lucasnomial((l+1) parts n) / U_{n+1}^l, exactly reduced.
/// The ledger runs over primes dividing U_{n+1} found by bounded
/// factorization; pass want_ledger = false to skip factoring in bulk scans.
CatalanValue c_ul(const lucas::LucasSequence& U, std::uint64_t l, std::uint64_t n,
                  bool want_ledger = true);

/// v_p(C_{U,l}(n)) by carry-rule valuations only; may be negative. Never
/// materializes a big integer.
std::int64_t c_ul_valuation(const lucas::LucasSequence& U, std::uint64_t l, std::uint64_t p,
                            std::uint64_t n);
std::int64_t c_ul_valuation(const lucas::LucasSequence& U, const lucas::RankProfile& profile,
                            std::uint64_t l, std::uint64_t n);

/// Closed-form valuation of binom((i+1)n, n)_U at n = lambda*rho*p^j - 1 for
/// summand indices 1 <= i <= rho.
ValuationBreakdown valuation_contribution_low(const lucas::RankProfile& profile,
                                              std::uint64_t lambda, std::uint32_t j,
                                              std::uint64_t i);

/// Same for rho < i <= 2*rho, including the three-case i = 2*rho formula.
ValuationBreakdown valuation_contribution_high(const lucas::RankProfile& profile,
                                               std::uint64_t lambda, std::uint32_t j,
                                               std::uint64_t i);

/// Witness family n = l*p^j - 1 for a prime p > l of rank exactly l: every
/// listed n has C_{U,l}(n) non-integral (verified before returning).
std::vector<std::uint64_t> nonintegral_witnesses_rank_l(const lucas::LucasSequence& U,
                                                        std::uint64_t l, std::uint64_t p,
                                                        std::uint32_t j_max);

/// Witness family n = p*q^j - 1 with rho(p) = p+1, rho(q) = p, p > 3, for
/// l = p + 1.
std::vector<std::uint64_t> nonintegral_witnesses_paired_ranks(const lucas::LucasSequence& U,
                                                              std::uint64_t p, std::uint64_t q,
                                                              std::uint32_t j_max);

/// Witness family n = rho*p^j - 1, j >= 1, for an odd prime p with
/// rho <= l <= min(2*rho, p-1).
std::vector<std::uint64_t> nonintegral_witnesses_rank_window(const lucas::LucasSequence& U,
                                                             std::uint64_t l, std::uint64_t p,
                                                             std::uint32_t j_max);

/// For rho = p - (D|p), v_p(U_rho) = 1 and max(rho, p) <= l < 2*rho: true
/// unless (lambda, j) is one of the finitely many exceptional corners, in
/// which case v_p(C_{U,l}(lambda*rho*p^j - 1)) < 0 is possible.
bool window_integrality_guarantee(const lucas::LucasSequence& U, std::uint64_t l, std::uint64_t p,
                                  std::uint64_t lambda, std::uint32_t j);

/// True when |U_n| has no prime factor p with p !| discriminant and rank
/// exactly n. Decided by repeated gcd stripping against the discriminant and
/// all earlier terms; no integer factorization.
bool check_defective(const lucas::LucasSequence& U, std::uint64_t n);

/// The rule-derived set of n with C_{U,l}(n) non-integral, for a dataset C
/// pair (finitely many, all below l).
std::set<std::uint64_t> expected_exception_set(const lucas::LucasSequence& U, std::uint64_t l);

/// Primes with rank at most l in U (the only primes that can make
/// C_{U,l}(n) non-integral), with their profiles.
std::vector<lucas::RankProfile> low_rank_primes(const lucas::LucasSequence& U, std::uint64_t l);

/// The exact set { n <= bound : C_{U,l}(n) not an integer }, by carry-rule
/// valuations over the low-rank primes.
std::set<std::uint64_t> nonintegral_set_u(const lucas::LucasSequence& U, std::uint64_t l,
                                          std::uint64_t bound);

std::vector<tables::TableEntry> verify_table_a(unsigned max_param);
std::vector<tables::TableEntry> verify_table_b();
std::vector<tables::TableEntry> verify_table_c(std::uint64_t n_max, unsigned family_param = 10);

}  // namespace lucanomial::lcatalan
