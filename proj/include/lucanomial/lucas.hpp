#pragma once

#include <cstdint>
#include <span>

#include <gmpxx.h>

namespace lucanomial::lucas {

/// Per-prime divisibility data of a Lucas sequence: the rank of appearance
/// rho (least n >= 1 with p | U_n), v_p(U_rho), and the 2-adic correction
/// delta = v_2((P^2 - 3Q)/2) when p = 2 and P is odd, 0 otherwise.
struct RankProfile {
    std::uint64_t p = 0;
    std::uint64_t rho = 0;
    std::uint64_t val_u_rho = 0;
    std::uint64_t delta = 0;
};

/// Lucas sequence U(P,Q): U_0 = 0, U_1 = 1, U_{n+2} = P*U_{n+1} - Q*U_n.
/// Construction requires P > 0 and Q != 0; degenerate sequences (a zero term
/// at positive index) are constructible but flagged, and operations that need
/// non-degeneracy reject them.
class LucasSequence {
public:
    LucasSequence(std::int64_t P, std::int64_t Q);

    std::int64_t P() const { return p_; }
    std::int64_t Q() const { return q_; }
    const mpz_class& discriminant() const { return discriminant_; }
    bool regular() const { return regular_; }
    bool delta_regular() const { return delta_regular_; }

    /// Exact U_n by forward iteration.
    mpz_class term(std::uint64_t n) const;

    /// Rank data at a prime p not dividing Q; throws otherwise. The scan runs
    /// modulo p and never builds big integers.
    RankProfile rank(std::uint64_t p) const;

    /// v_p(|U_n|) via the rank law; agrees with the direct valuation.
    std::uint64_t term_valuation(std::uint64_t p, std::uint64_t n) const;
    std::uint64_t term_valuation(const RankProfile& profile, std::uint64_t n) const;

    /// n!_U = U_n * U_{n-1} * ... * U_1, with 0!_U = 1. May be negative.
    mpz_class generalized_factorial(std::uint64_t n) const;

    /// Generalized binomial coefficient with respect to U. Exact integer for
    /// regular U; a non-exact division signals a defect and throws.
    mpz_class lucasnomial(std::uint64_t m, std::uint64_t n) const;

    /// Generalized multinomial with respect to U, as the telescoping product
    /// of binomial Lucasnomials of prefix sums.
    mpz_class l_lucasnomial(std::span<const std::uint64_t> parts) const;

    /// v_p(|binom(m+n, n)_U|) by the Lucasnomial carry rule: v_p(U_rho) when
    /// the fractional parts of m/rho and n/rho sum to at least 1, plus the
    /// carries of the base-p addition floor(m/rho) + floor(n/rho) + [that
    /// event], plus delta when position 0 of that addition carries.
    std::uint64_t lucasnomial_valuation(std::uint64_t p, std::uint64_t m, std::uint64_t n) const;
    std::uint64_t lucasnomial_valuation(const RankProfile& profile, std::uint64_t m,
                                        std::uint64_t n) const;

private:
    void require_nondegenerate() const;

    std::int64_t p_;
    std::int64_t q_;
    mpz_class discriminant_;
    bool degenerate_ = false;
    bool regular_ = false;
    bool delta_regular_ = false;
};

}  // namespace lucanomial::lucas
