#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lucanomial::padic {

/// Number of carries in a base-p addition.
using CarryCount = std::uint64_t;

/// Base-p expansion of a non-negative integer, least significant digit first.
/// Zero is the empty digit vector; a non-empty vector never ends in a zero
/// digit, and every digit lies in [0, base).
struct DigitExpansion {
    std::uint64_t base = 2;
    std::vector<std::uint64_t> digits;

    mpz_class value() const;
    /// Rendering with the most significant digit first, e.g. "[1,2,1]_3".
    std::string bracket() const;
    bool operator==(const DigitExpansion&) const = default;
};

/// Digits of n in base p. p must be prime.
DigitExpansion to_digits(const mpz_class& n, std::uint64_t p);
mpz_class from_digits(const DigitExpansion& d);

/// v_p(n!) by the finite floor sum; n >= 0.
std::uint64_t legendre_factorial_valuation(const mpz_class& n, std::uint64_t p);

struct PairwiseAddition {
    mpz_class sum;
    CarryCount carries = 0;
    /// Digit positions that generated a carry, least significant first.
    std::vector<std::uint64_t> carry_positions;
};

/// Schoolbook base-p addition of a and b with per-position carry accounting.
/// A position carries when its digit sum, including the incoming carry,
/// reaches p; never more than once per position.
PairwiseAddition add_with_carries(const mpz_class& a, const mpz_class& b, std::uint64_t p);

struct CarryInAddition {
    CarryCount carries = 0;
    bool carry_out_of_position0 = false;
};

/// Base-p addition of a and b with an extra incoming carry at position 0.
/// Counts the same carries as the parenthesized sum a + b + incoming.
CarryInAddition add_with_incoming_carry(std::uint64_t a, std::uint64_t b, bool incoming,
                                        std::uint64_t p);

/// Total carries of the left-fold parenthesized base-p addition of the
/// summands. Requires at least two summands. The count is invariant under
/// permutations and re-parenthesization, which the test suites exercise.
CarryCount carries_parenthesized(std::uint64_t p, std::span<const mpz_class> summands);

/// v_p of the multinomial coefficient with the given parts, via the Legendre
/// floor sums. Agrees with carries_parenthesized on the same parts.
std::uint64_t multinomial_valuation_legendre(std::uint64_t p, std::span<const mpz_class> summands);

/// Carries of the m-fold base-p addition of p^j - 1, in closed form (m-1)*j.
/// Valid for 1 <= m <= p^j; the pattern changes at m = p^j + 1, where the
/// simulated count drops to (m-2)*j.
CarryCount m_fold_carries_closed_form(std::uint64_t m, std::uint64_t p, std::uint32_t j);

/// Digit expansion of M*(p^j - 1) by closed form, for 1 <= M <= p^j - 1 with
/// gcd(M, p) = 1. Equals to_digits(M*(p^j - 1), p).
DigitExpansion closed_form_expansion(std::uint64_t M, std::uint64_t p, std::uint32_t j);

}  // namespace lucanomial::padic
