#include "lucanomial/nt.hpp"

#include <numeric>

namespace lucanomial::nt {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

std::uint64_t pollard_brent(std::uint64_t n, std::uint64_t seed) {
    // Brent's cycle-finding variant; n must be odd composite.
    std::uint64_t y = seed % n, c = 1 + seed % (n - 1), m = 128;
    std::uint64_t g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            std::uint64_t lim = std::min(m, r - k);
            for (std::uint64_t i = 0; i < lim; ++i) {
                y = (mulmod(y, y, n) + c) % n;
                std::uint64_t diff = x > y ? x - y : y - x;
                q = mulmod(q, diff ? diff : 1, n);
            }
            g = std::gcd(q, n);
            k += lim;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod(ys, ys, n) + c) % n;
            std::uint64_t diff = x > ys ? x - ys : ys - x;
            g = std::gcd(diff ? diff : 1, n);
        } while (g == 1);
    }
    return g;
}

void factor_rec(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = n;
    for (std::uint64_t seed = 2; d == n; ++seed) d = pollard_brent(n, seed);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // These witnesses decide primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

std::map<std::uint64_t, unsigned> factor(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factor: zero has no factorization");
    std::map<std::uint64_t, unsigned> out;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) { n /= p; ++out[p]; }
    }
    for (std::uint64_t d = 7; d <= 60000 && d * d <= n; d += 30) {
        for (std::uint64_t off : {0ull, 4ull, 6ull, 10ull, 12ull, 16ull, 22ull, 24ull}) {
            std::uint64_t q = d + off;
            while (n % q == 0) { n /= q; ++out[q]; }
        }
    }
    factor_rec(n, out);
    return out;
}

std::uint64_t valuation(const mpz_class& x, std::uint64_t p) {
    if (x == 0) throw std::domain_error("valuation: undefined at zero");
    if (p < 2) throw std::domain_error("valuation: p must be at least 2");
    mpz_class a = abs(x), pp = static_cast<unsigned long>(p);
    mpz_class r;
    return mpz_remove(r.get_mpz_t(), a.get_mpz_t(), pp.get_mpz_t());
}

std::uint64_t valuation(const mpz_class& x, const mpz_class& p) {
    if (x == 0) throw std::domain_error("valuation: undefined at zero");
    if (p < 2) throw std::domain_error("valuation: p must be at least 2");
    mpz_class a = abs(x), r;
    return mpz_remove(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
}

std::uint64_t valuation(std::uint64_t x, std::uint64_t p) {
    if (x == 0) throw std::domain_error("valuation: undefined at zero");
    std::uint64_t v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) {
            if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
            r *= base;
        }
        exp >>= 1;
        if (exp) {
            if (base != 0 && base > UINT64_MAX / base) return std::nullopt;
            base *= base;
        }
    }
    return r;
}

int legendre_symbol(const mpz_class& a, std::uint64_t p) {
    if (p == 2 || !is_prime(p)) throw std::domain_error("legendre_symbol: p must be an odd prime");
    mpz_class pp = static_cast<unsigned long>(p);
    return mpz_legendre(a.get_mpz_t(), pp.get_mpz_t());
}

namespace {

std::uint64_t pollard_brent_mpz(mpz_class& g, const mpz_class& n, unsigned long seed,
                                std::uint64_t budget) {
    mpz_class y = seed, c = seed + 1, x, ys, q = 1, diff;
    std::uint64_t r = 1, used = 0;
    const std::uint64_t batch = 256;
    g = 1;
    while (g == 1 && used < budget) {
        x = y;
        for (std::uint64_t i = 0; i < r && used < budget; ++i, ++used) {
            y = (y * y + c) % n;
        }
        std::uint64_t k = 0;
        while (k < r && g == 1 && used < budget) {
            ys = y;
            std::uint64_t lim = std::min(batch, r - k);
            for (std::uint64_t i = 0; i < lim && used < budget; ++i, ++used) {
                y = (y * y + c) % n;
                diff = x - y;
                if (diff == 0) diff = 1;
                q = q * diff % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += lim;
        }
        r <<= 1;
    }
    if (g == n) {
        g = 1;
        while (g == 1 && used < budget) {
            ys = (ys * ys + c) % n;
            diff = x - ys;
            if (diff == 0) diff = 1;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            ++used;
        }
        if (g == n) g = 1;  // cycle degenerated, treat as failure
    }
    return used;
}

void factor_bounded_rec(const mpz_class& n, BoundedFactorization& out, std::uint64_t budget) {
    if (n == 1) return;
    if (mpz_fits_ulong_p(n.get_mpz_t())) {
        for (auto& [p, e] : factor(mpz_get_ui(n.get_mpz_t()))) out.primes[mpz_class(static_cast<unsigned long>(p))] += e;
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
        ++out.primes[n];
        return;
    }
    mpz_class root;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        factor_bounded_rec(root, out, budget);
        factor_bounded_rec(root, out, budget);
        return;
    }
    mpz_class g;
    std::uint64_t used = 0;
    for (unsigned long seed = 2; seed < 8 && g <= 1 && used < budget; ++seed) {
        used += pollard_brent_mpz(g, n, seed, budget - used);
    }
    if (g <= 1 || g == n) {
        out.unfactored *= n;
        return;
    }
    factor_bounded_rec(g, out, budget);
    factor_bounded_rec(n / g, out, budget);
}

}  // namespace

BoundedFactorization factor_bounded(const mpz_class& x, std::uint64_t rho_budget) {
    if (x == 0) throw std::domain_error("factor_bounded: zero has no factorization");
    BoundedFactorization out;
    mpz_class n = abs(x);
    if (n == 1) return out;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++out.primes[mpz_class(p)];
        }
    }
    for (unsigned long d = 7; d <= 100000; d += 30) {
        for (unsigned long off : {0ul, 4ul, 6ul, 10ul, 12ul, 16ul, 22ul, 24ul}) {
            unsigned long q = d + off;
            while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
                ++out.primes[mpz_class(q)];
            }
        }
    }
    factor_bounded_rec(n, out, rho_budget);
    return out;
}

}  // namespace lucanomial::nt
