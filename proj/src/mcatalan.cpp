#include "lucanomial/mcatalan.hpp"

#include <stdexcept>

#include "lucanomial/nt.hpp"
#include "lucanomial/padic.hpp"
#include "lucanomial/parallel.hpp"

namespace lucanomial::mcatalan {

mpz_class binomial(const mpz_class& n, std::uint64_t k) {
    if (n < 0) throw std::domain_error("binomial: n must be non-negative");
    if (n < static_cast<unsigned long>(k)) return 0;
    mpz_class r = 1, f;
    // r stays C(n, i) after step i; the division by i is always exact.
    for (std::uint64_t i = 1; i <= k; ++i) {
        f = n - static_cast<unsigned long>(k - i);
        r *= f;
        mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return r;
}

mpz_class multinomial(std::span<const std::uint64_t> parts) {
    mpz_class result = 1, prefix = 0;
    for (std::uint64_t a : parts) {
        prefix += static_cast<unsigned long>(a);
        result *= binomial(prefix, a);
    }
    return result;
}

CatalanValue catalan_multi(std::uint64_t l, std::uint64_t n) {
    if (l < 1 || n < 1) throw std::domain_error("catalan_multi: l and n must be positive");
    std::vector<std::uint64_t> parts(l + 1, n);
    mpz_class m = multinomial(parts);
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(l));

    CatalanValue out;
    out.l = l;
    out.n = n;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
    out.numerator = m / g;
    out.denominator = d / g;
    out.is_integer = out.denominator == 1;
    for (auto& [p, e] : nt::factor(n + 1)) {
        LedgerEntry entry;
        entry.numerator_valuation = nt::valuation(m, p);
        entry.denominator_valuation = l * e;
        out.ledger.emplace(mpz_class(static_cast<unsigned long>(p)), entry);
    }
    return out;
}

bool is_integral_fast(std::uint64_t l, std::uint64_t n) {
    if (l < 1 || n < 1) throw std::domain_error("is_integral_fast: l and n must be positive");
    std::vector<mpz_class> copies(l + 1, mpz_class(static_cast<unsigned long>(n)));
    for (auto& [p, e] : nt::factor(n + 1)) {
        std::uint64_t carries = padic::carries_parenthesized(p, copies);
        if (carries < l * static_cast<std::uint64_t>(e)) return false;
    }
    return true;
}

bool sufficient_integral(std::uint64_t l, std::uint64_t n) {
    if (l < 1 || n < 1) throw std::domain_error("sufficient_integral: l and n must be positive");
    for (auto& [p, e] : nt::factor(n + 1)) {
        if (p > l) continue;
        // v_p(n+1) >= log_p(l+1)  <=>  p^v >= l+1; overflow means p^v > l+1
        auto pv = nt::checked_pow(p, e);
        if (pv && *pv < l + 1) return false;
    }
    return true;
}

std::set<std::uint64_t> exceptional_candidates(std::uint64_t l) {
    if (l < 1) throw std::domain_error("exceptional_candidates: l must be positive");
    std::set<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= l; ++p) {
        if (!nt::is_prime(p)) continue;
        for (std::uint32_t j = 1;; ++j) {
            auto pj = nt::checked_pow(p, j);
            if (!pj || *pj > l) break;
            // n = p^j - 1 is excluded when l+1 = a * p^(k*j) for some k >= 1
            // and 1 <= a <= p-1.
            bool excluded = false;
            for (std::uint32_t k = 1; !excluded; ++k) {
                auto pkj = nt::checked_pow(p, k * j);
                if (!pkj || *pkj > l + 1) break;
                if ((l + 1) % *pkj == 0) {
                    std::uint64_t a = (l + 1) / *pkj;
                    if (1 <= a && a <= p - 1) excluded = true;
                }
            }
            if (!excluded) out.insert(*pj - 1);
        }
    }
    return out;
}

std::set<std::uint64_t> nonintegral_set(std::uint64_t l, std::uint64_t bound, unsigned jobs) {
    if (l < 1 || bound < 1) throw std::domain_error("nonintegral_set: l and bound must be positive");
    std::vector<char> bad(bound + 1, 0);
    parallel_for(jobs, bound, [&](std::uint64_t idx) {
        std::uint64_t n = idx + 1;
        if (!is_integral_fast(l, n)) bad[n] = 1;
    });
    std::set<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= bound; ++n)
        if (bad[n]) out.insert(n);
    return out;
}

}  // namespace lucanomial::mcatalan
