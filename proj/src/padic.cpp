#include "lucanomial/padic.hpp"

#include <sstream>
#include <stdexcept>

#include "lucanomial/nt.hpp"

namespace lucanomial::padic {

namespace {

void require_prime(std::uint64_t p) {
    if (p >= (1ull << 63) || !nt::is_prime(p))
        throw std::domain_error("base must be a prime below 2^63");
}

// Adds `addend` into `acc` in base p. Returns the carry count and records
// carry-generating positions when asked.
CarryCount add_into(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& addend,
                    std::uint64_t p, std::uint64_t carry_in = 0,
                    std::vector<std::uint64_t>* positions = nullptr,
                    bool* carry_out_pos0 = nullptr) {
    CarryCount carries = 0;
    std::uint64_t carry = carry_in;
    std::size_t n = std::max(acc.size(), addend.size());
    acc.resize(n, 0);
    for (std::size_t i = 0; i < n || carry; ++i) {
        if (i >= acc.size()) acc.push_back(0);
        std::uint64_t s = acc[i] + carry + (i < addend.size() ? addend[i] : 0);
        if (s >= p) {
            acc[i] = s - p;
            carry = 1;
            ++carries;
            if (positions) positions->push_back(i);
            if (carry_out_pos0 && i == 0) *carry_out_pos0 = true;
        } else {
            acc[i] = s;
            carry = 0;
        }
    }
    while (!acc.empty() && acc.back() == 0) acc.pop_back();
    return carries;
}

std::vector<std::uint64_t> digits_of(const mpz_class& n, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    mpz_class q = n, r;
    mpz_class pp = static_cast<unsigned long>(p);
    while (q > 0) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
        out.push_back(mpz_get_ui(r.get_mpz_t()));
    }
    return out;
}

std::vector<std::uint64_t> digits_of(std::uint64_t n, std::uint64_t p) {
    std::vector<std::uint64_t> out;
    while (n) {
        out.push_back(n % p);
        n /= p;
    }
    return out;
}

}  // namespace

mpz_class DigitExpansion::value() const {
    mpz_class v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v *= static_cast<unsigned long>(base);
        v += static_cast<unsigned long>(*it);
    }
    return v;
}

std::string DigitExpansion::bracket() const {
    std::ostringstream os;
    os << '[';
    if (digits.empty()) {
        os << '0';
    } else {
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            if (it != digits.rbegin()) os << ',';
            os << *it;
        }
    }
    os << "]_" << base;
    return os.str();
}

DigitExpansion to_digits(const mpz_class& n, std::uint64_t p) {
    require_prime(p);
    if (n < 0) throw std::domain_error("to_digits: n must be non-negative");
    return DigitExpansion{p, digits_of(n, p)};
}

mpz_class from_digits(const DigitExpansion& d) {
    return d.value();
}

std::uint64_t legendre_factorial_valuation(const mpz_class& n, std::uint64_t p) {
    require_prime(p);
    if (n < 0) throw std::domain_error("legendre_factorial_valuation: n must be non-negative");
    mpz_class q = n, total = 0;
    mpz_class pp = static_cast<unsigned long>(p);
    while (q > 0) {
        q /= pp;
        total += q;
    }
    if (!mpz_fits_ulong_p(total.get_mpz_t()))
        throw std::overflow_error("legendre_factorial_valuation: result exceeds 64 bits");
    return mpz_get_ui(total.get_mpz_t());
}

PairwiseAddition add_with_carries(const mpz_class& a, const mpz_class& b, std::uint64_t p) {
    require_prime(p);
    if (a < 0 || b < 0) throw std::domain_error("add_with_carries: negative summand");
    PairwiseAddition out;
    auto acc = digits_of(a, p);
    out.carries = add_into(acc, digits_of(b, p), p, 0, &out.carry_positions);
    out.sum = a + b;
    return out;
}

CarryInAddition add_with_incoming_carry(std::uint64_t a, std::uint64_t b, bool incoming,
                                        std::uint64_t p) {
    require_prime(p);
    CarryInAddition out;
    auto acc = digits_of(a, p);
    out.carries = add_into(acc, digits_of(b, p), p, incoming ? 1 : 0, nullptr,
                           &out.carry_out_of_position0);
    return out;
}

CarryCount carries_parenthesized(std::uint64_t p, std::span<const mpz_class> summands) {
    require_prime(p);
    if (summands.size() < 2)
        throw std::domain_error("carries_parenthesized: need at least two summands");
    for (const mpz_class& s : summands)
        if (s < 0) throw std::domain_error("carries_parenthesized: negative summand");
    CarryCount total = 0;
    std::vector<std::uint64_t> acc = digits_of(summands[0], p);
    for (std::size_t i = 1; i < summands.size(); ++i)
        total += add_into(acc, digits_of(summands[i], p), p);
    return total;
}

std::uint64_t multinomial_valuation_legendre(std::uint64_t p, std::span<const mpz_class> summands) {
    require_prime(p);
    mpz_class total = 0;
    for (const mpz_class& s : summands) {
        if (s < 0) throw std::domain_error("multinomial_valuation_legendre: negative part");
        total += s;
    }
    mpz_class pp = static_cast<unsigned long>(p), power = pp, val = 0, q;
    while (power <= total) {
        q = total / power;
        val += q;
        for (const mpz_class& s : summands) {
            q = s / power;
            val -= q;
        }
        power *= pp;
    }
    if (val < 0) throw std::logic_error("multinomial_valuation_legendre: negative total");
    if (!mpz_fits_ulong_p(val.get_mpz_t()))
        throw std::overflow_error("multinomial_valuation_legendre: result exceeds 64 bits");
    return mpz_get_ui(val.get_mpz_t());
}

CarryCount m_fold_carries_closed_form(std::uint64_t m, std::uint64_t p, std::uint32_t j) {
    require_prime(p);
    if (j == 0) throw std::domain_error("m_fold_carries_closed_form: j must be positive");
    auto pj = nt::checked_pow(p, j);
    if (!pj) throw std::domain_error("m_fold_carries_closed_form: p^j exceeds 64 bits");
    if (m < 1 || m > *pj)
        throw std::domain_error("m_fold_carries_closed_form: m must lie in [1, p^j]");
    return (m - 1) * static_cast<std::uint64_t>(j);
}

DigitExpansion closed_form_expansion(std::uint64_t M, std::uint64_t p, std::uint32_t j) {
    require_prime(p);
    if (j == 0) throw std::domain_error("closed_form_expansion: j must be positive");
    auto pj = nt::checked_pow(p, j);
    if (!pj) throw std::domain_error("closed_form_expansion: p^j exceeds 64 bits");
    if (M < 1 || M > *pj - 1 || M % p == 0)
        throw std::domain_error("closed_form_expansion: M must lie in [1, p^j - 1] and be coprime to p");

    auto m = digits_of(M, p);          // m[0..theta], m[theta] >= 1
    std::size_t theta = m.size() - 1;  // theta < j since M < p^j
    // LSB-first: (p - m_0), (p - m_1 - 1), ..., (p - m_theta - 1),
    // then (j - theta - 1) digits of p-1, then (m_0 - 1), m_1, ..., m_theta.
    DigitExpansion out{p, {}};
    out.digits.push_back(p - m[0]);
    for (std::size_t t = 1; t <= theta; ++t) out.digits.push_back(p - m[t] - 1);
    for (std::size_t t = theta + 1; t < j; ++t) out.digits.push_back(p - 1);
    out.digits.push_back(m[0] - 1);
    for (std::size_t t = 1; t <= theta; ++t) out.digits.push_back(m[t]);
    while (!out.digits.empty() && out.digits.back() == 0) out.digits.pop_back();
    return out;
}

}  // namespace lucanomial::padic
