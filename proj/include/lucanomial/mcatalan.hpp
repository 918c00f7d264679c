#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace lucanomial::mcatalan {

struct LedgerEntry {
    std::uint64_t numerator_valuation = 0;    // v_p of the (Lucasnomial) multinomial
    std::uint64_t denominator_valuation = 0;  // v_p of the unreduced denominator
};

/// Exact reduced value of a generalized Catalan number together with its
/// integrality verdict and a per-prime valuation ledger. The fraction
/// numerator/denominator is fully reduced with denominator > 0; the value is
/// an integer exactly when denominator == 1.
struct CatalanValue {
    std::uint64_t l = 0;
    std::uint64_t n = 0;
    mpz_class numerator;
    mpz_class denominator;
    bool is_integer = false;
    std::map<mpz_class, LedgerEntry> ledger;
    /// False when a large cofactor of the unreduced denominator resisted the
    /// factorization budget; every prime of the reduced denominator is always
    /// present regardless.
    bool ledger_complete = true;
};

/// Exact binomial coefficient C(n, k), multiplicative form with exact
/// division at every step.
mpz_class binomial(const mpz_class& n, std::uint64_t k);

/// Exact multinomial coefficient, computed as the telescoping product of
/// binomials of prefix sums.
mpz_class multinomial(std::span<const std::uint64_t> parts);

/// C_l(n) = multinomial((l+1) parts n) / (n+1)^l, exactly.
CatalanValue catalan_multi(std::uint64_t l, std::uint64_t n);

/// Integrality of C_l(n) by carry counting alone; never materializes the
/// multinomial. Agrees with catalan_multi(l, n).is_integer.
bool is_integral_fast(std::uint64_t l, std::uint64_t n);

/// Sufficient condition: v_p(n+1) >= log_p(l+1) for every prime p <= l
/// dividing n+1. Implies is_integral_fast(l, n).
bool sufficient_integral(std::uint64_t l, std::uint64_t n);

/// All n = p^j - 1 with p^j <= l such that l+1 is not a * p^(k*j) for any
/// k >= 1 and a in [1, p-1]. A necessary form for non-integrality; members
/// need not be genuine counterexamples.
std::set<std::uint64_t> exceptional_candidates(std::uint64_t l);

/// The exact set { n <= bound : C_l(n) is not an integer }, by fast
/// valuations. Always a subset of exceptional_candidates(l).
std::set<std::uint64_t> nonintegral_set(std::uint64_t l, std::uint64_t bound, unsigned jobs = 1);

}  // namespace lucanomial::mcatalan
