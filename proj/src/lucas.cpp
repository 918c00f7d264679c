#include "lucanomial/lucas.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "lucanomial/nt.hpp"
#include "lucanomial/padic.hpp"

namespace lucanomial::lucas {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t mod_of(std::int64_t x, std::uint64_t p) {
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

}  // namespace

LucasSequence::LucasSequence(std::int64_t P, std::int64_t Q) : p_(P), q_(Q) {
    if (P <= 0) throw std::domain_error("LucasSequence: P must be positive");
    if (Q == 0) throw std::domain_error("LucasSequence: Q must be non-zero");
    discriminant_ = mpz_class(P) * P - 4 * mpz_class(Q);
    // A degenerate sequence has a zero term at some index <= 12.
    bool nonzero = true;
    mpz_class a = 0, b = 1, t;
    for (int k = 1; k <= 12; ++k) {
        if (b == 0) { nonzero = false; break; }
        t = mpz_class(p_) * b - mpz_class(q_) * a;
        a = b;
        b = t;
    }
    degenerate_ = !nonzero;
    regular_ = nonzero && std::gcd(p_ < 0 ? -p_ : p_, q_ < 0 ? -q_ : q_) == 1;
    delta_regular_ = regular_ && discriminant_ != 0;
}

void LucasSequence::require_nondegenerate() const {
    if (degenerate_) throw std::domain_error("LucasSequence: degenerate sequence");
}

mpz_class LucasSequence::term(std::uint64_t n) const {
    mpz_class a = 0, b = 1, t;
    if (n == 0) return a;
    for (std::uint64_t k = 1; k < n; ++k) {
        t = mpz_class(p_) * b - mpz_class(q_) * a;
        a = b;
        b = t;
    }
    return b;
}

RankProfile LucasSequence::rank(std::uint64_t p) const {
    if (!nt::is_prime(p)) throw std::domain_error("rank: p must be prime");
    if (mod_of(q_, p) == 0) throw std::domain_error("rank: undefined when p divides Q");
    RankProfile out;
    out.p = p;
    const std::uint64_t pm = mod_of(p_, p), qm = mod_of(q_, p);
    const std::uint64_t bound = p == 2 ? 3 : p + 1;
    std::uint64_t a = 0, b = 1;  // U_n, U_{n+1} mod p
    std::uint64_t rho = 0;
    for (std::uint64_t n = 1; n <= bound; ++n) {
        if (b == 0) { rho = n; break; }
        std::uint64_t t = (mulmod(pm, b, p) + p - mulmod(qm, a, p)) % p;
        a = b;
        b = t;
    }
    if (rho == 0) throw std::logic_error("rank: no rank found within the bound");
    out.rho = rho;
    out.val_u_rho = nt::valuation(term(rho), p);
    if (p == 2 && (p_ & 1)) {
        mpz_class t = (mpz_class(p_) * p_ - 3 * mpz_class(q_)) / 2;
        if (t == 0) throw std::logic_error("rank: delta undefined, P^2 = 3Q");
        out.delta = nt::valuation(t, 2);
    }
    return out;
}

std::uint64_t LucasSequence::term_valuation(std::uint64_t p, std::uint64_t n) const {
    return term_valuation(rank(p), n);
}

std::uint64_t LucasSequence::term_valuation(const RankProfile& profile, std::uint64_t n) const {
    if (n == 0) throw std::domain_error("term_valuation: n must be positive");
    if (n % profile.rho != 0) return 0;
    std::uint64_t x = nt::valuation(n / profile.rho, profile.p);
    return profile.val_u_rho + x + (x > 0 ? profile.delta : 0);
}

mpz_class LucasSequence::generalized_factorial(std::uint64_t n) const {
    require_nondegenerate();
    mpz_class result = 1;
    mpz_class a = 0, b = 1, t;
    for (std::uint64_t k = 1; k <= n; ++k) {
        if (b == 0) throw std::domain_error("generalized_factorial: zero term, degenerate sequence");
        result *= b;
        t = mpz_class(p_) * b - mpz_class(q_) * a;
        a = b;
        b = t;
    }
    return result;
}

mpz_class LucasSequence::lucasnomial(std::uint64_t m, std::uint64_t n) const {
    require_nondegenerate();
    if (n == 0) return 1;
    if (m < n) return 0;
    mpz_class num = 1, den = 1;
    mpz_class a = 0, b = 1, t;
    for (std::uint64_t k = 1; k <= m; ++k) {
        if (b == 0) throw std::domain_error("lucasnomial: zero term, degenerate sequence");
        if (k <= n) den *= b;
        if (k >= m - n + 1) num *= b;
        t = mpz_class(p_) * b - mpz_class(q_) * a;
        a = b;
        b = t;
    }
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw std::logic_error("lucasnomial: non-exact division; sequence not regular or internal defect");
    return q;
}

mpz_class LucasSequence::l_lucasnomial(std::span<const std::uint64_t> parts) const {
    require_nondegenerate();
    mpz_class result = 1;
    std::uint64_t prefix = 0;
    for (std::uint64_t a : parts) {
        prefix += a;
        result *= lucasnomial(prefix, a);
    }
    return result;
}

std::uint64_t LucasSequence::lucasnomial_valuation(std::uint64_t p, std::uint64_t m,
                                                   std::uint64_t n) const {
    return lucasnomial_valuation(rank(p), m, n);
}

std::uint64_t LucasSequence::lucasnomial_valuation(const RankProfile& profile, std::uint64_t m,
                                                   std::uint64_t n) const {
    if (m == 0 || n == 0) throw std::domain_error("lucasnomial_valuation: m, n must be positive");
    const std::uint64_t rho = profile.rho;
    const bool crossing = (m % rho) + (n % rho) >= rho;  // {m/rho} + {n/rho} >= 1
    auto added = padic::add_with_incoming_carry(m / rho, n / rho, crossing, profile.p);
    std::uint64_t total = crossing ? profile.val_u_rho : 0;
    total += added.carries;
    if (added.carry_out_of_position0) total += profile.delta;
    return total;
}

}  // namespace lucanomial::lucas
