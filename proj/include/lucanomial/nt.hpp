#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include <gmpxx.h>

namespace lucanomial::nt {

/// Deterministic Miller-Rabin primality test, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Prime factorization of n >= 1 (trial division, then Pollard-Brent rho).
std::map<std::uint64_t, unsigned> factor(std::uint64_t n);

/// v_p(|x|). Requires x != 0 and p >= 2.
std::uint64_t valuation(const mpz_class& x, std::uint64_t p);
std::uint64_t valuation(const mpz_class& x, const mpz_class& p);
std::uint64_t valuation(std::uint64_t x, std::uint64_t p);

/// base^exp, or nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp);

/// Legendre symbol (a|p) for an odd prime p.
int legendre_symbol(const mpz_class& a, std::uint64_t p);

struct BoundedFactorization {
    std::map<mpz_class, unsigned> primes;
    mpz_class unfactored{1};  // 1 when complete, otherwise a composite cofactor
    bool complete() const { return unfactored == 1; }
};

/// Factor |x| with a bounded amount of work. Small primes are found by trial
/// division, the rest by Pollard-Brent rho limited to `rho_budget` iterations
/// per cofactor; whatever resists within budget is returned in `unfactored`.
BoundedFactorization factor_bounded(const mpz_class& x,
                                    std::uint64_t rho_budget = 4'000'000);

}  // namespace lucanomial::nt
