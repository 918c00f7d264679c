#include "lucanomial/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lucanomial/lcatalan.hpp"
#include "lucanomial/mcatalan.hpp"
#include "lucanomial/nt.hpp"
#include "lucanomial/padic.hpp"
#include "lucanomial/parallel.hpp"
#include "lucanomial/tables.hpp"

namespace lucanomial::verify {

using json = nlohmann::json;
using lucas::LucasSequence;
using lucas::RankProfile;

std::size_t Suite::count(const char* status) const {
    std::size_t c = 0;
    for (auto& check : checks)
        if (check.status == status) ++c;
    return c;
}

void Suite::add(std::string kind, bool ok, json data) {
    checks.push_back({std::move(kind), ok ? "ok" : "fail", std::move(data)});
}

void Suite::skip(std::string kind, json data) {
    checks.push_back({std::move(kind), "skip", std::move(data)});
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::vector<LucasSequence> delta_regular_pool(std::int64_t p_max, std::int64_t q_max) {
    std::vector<LucasSequence> pool;
    for (std::int64_t P = 1; P <= p_max; ++P)
        for (std::int64_t Q = -q_max; Q <= q_max; ++Q) {
            if (Q == 0) continue;
            LucasSequence u(P, Q);
            if (u.delta_regular()) pool.push_back(u);
        }
    return pool;
}

namespace {

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

std::uint64_t draw_part(std::mt19937_64& eng, std::uint64_t max_part) {
    // Log-uniform-ish magnitudes: a weighted random decade, then uniform
    // within it.
    static const unsigned decades[12] = {0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 4};
    unsigned d = decades[eng() % 12];
    std::uint64_t cap = 1;
    for (unsigned k = 0; k <= d; ++k) cap *= 10;
    cap = std::min(cap, max_part);
    return eng() % (cap + 1);
}

std::uint64_t exact_multinomial_valuation(const std::vector<std::uint64_t>& parts,
                                          std::uint64_t p) {
    mpz_class bin, pp = static_cast<unsigned long>(p);
    std::uint64_t prefix = 0, total = 0;
    for (std::uint64_t part : parts) {
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(prefix + part),
                     static_cast<unsigned long>(part));
        total += mpz_remove(bin.get_mpz_t(), bin.get_mpz_t(), pp.get_mpz_t());
        prefix += part;
    }
    return total;
}

std::string cell_name(std::uint64_t p, std::uint64_t l) {
    std::ostringstream os;
    os << "p=" << p << ",l=" << l;
    return os.str();
}

}  // namespace

Suite kummer_agreement(std::uint64_t seed, std::uint64_t tuples, std::uint64_t max_part,
                       unsigned jobs) {
    Suite suite{"kummer-agreement", {}};
    constexpr std::size_t kCells = 36;
    std::vector<std::uint64_t> cell_of(tuples);
    for (std::uint64_t t = 0; t < tuples; ++t) cell_of[t] = t % kCells;

    std::vector<std::uint8_t> ok(tuples, 1);
    std::vector<std::string> details(tuples);
    parallel_for(jobs, tuples, [&](std::uint64_t t) {
        std::uint64_t p = kPrimes[cell_of[t] % 6];
        std::uint64_t l = 1 + cell_of[t] / 6;
        std::mt19937_64 eng(mix(seed, t));
        std::vector<std::uint64_t> parts(l + 1);
        for (auto& a : parts) a = draw_part(eng, max_part);
        std::vector<mpz_class> big(parts.begin(), parts.end());

        std::uint64_t carries = padic::carries_parenthesized(p, big);
        std::uint64_t legendre = padic::multinomial_valuation_legendre(p, big);
        std::uint64_t exact = exact_multinomial_valuation(parts, p);
        if (carries != legendre || carries != exact) {
            ok[t] = 0;
            std::ostringstream os;
            os << cell_name(p, l) << " parts";
            for (auto a : parts) os << " " << a;
            os << " carries=" << carries << " legendre=" << legendre << " exact=" << exact;
            details[t] = os.str();
        }
    });

    std::vector<std::uint64_t> cell_total(kCells, 0), cell_ok(kCells, 0);
    for (std::uint64_t t = 0; t < tuples; ++t) {
        ++cell_total[cell_of[t]];
        if (ok[t])
            ++cell_ok[cell_of[t]];
        else
            suite.add("kummer-agreement-failure", false, {{"detail", details[t]}});
    }
    for (std::size_t c = 0; c < kCells; ++c) {
        suite.add("kummer-agreement-cell", cell_ok[c] == cell_total[c],
                  {{"cell", cell_name(kPrimes[c % 6], 1 + c / 6)},
                   {"tuples", cell_total[c]},
                   {"agreeing", cell_ok[c]}});
    }
    return suite;
}

Suite permutation_invariance(std::uint64_t seed, std::uint64_t tuples, unsigned permutations) {
    Suite suite{"permutation-invariance", {}};
    std::uint64_t bad = 0;
    for (std::uint64_t t = 0; t < tuples; ++t) {
        std::mt19937_64 eng(mix(seed ^ 0xfeedu, t));
        std::uint64_t p = kPrimes[eng() % 6];
        std::uint64_t l = 1 + eng() % 6;
        std::vector<mpz_class> parts(l + 1);
        for (auto& a : parts) a = static_cast<unsigned long>(draw_part(eng, 1'000'000));
        std::uint64_t baseline = padic::carries_parenthesized(p, parts);
        for (unsigned k = 0; k < permutations; ++k) {
            std::shuffle(parts.begin(), parts.end(), eng);
            if (padic::carries_parenthesized(p, parts) != baseline) {
                ++bad;
                suite.add("permutation-invariance-failure", false,
                          {{"tuple", t}, {"permutation", k}});
            }
        }
    }
    suite.add("permutation-invariance", bad == 0,
              {{"tuples", tuples}, {"permutations", permutations}, {"violations", bad}});
    return suite;
}

Suite carry_closed_forms() {
    Suite suite{"carry-closed-forms", {}};
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (std::uint32_t j = 1; j <= 5; ++j) {
            std::uint64_t pj = *nt::checked_pow(p, j);
            mpz_class N = static_cast<unsigned long>(pj - 1);
            mpz_class acc = N;
            std::uint64_t total = 0;
            bool fold_ok = true, beyond_ok = true;
            for (std::uint64_t m = 2; m <= pj + 1; ++m) {
                auto step = padic::add_with_carries(acc, N, p);
                total += step.carries;
                acc = step.sum;
                std::uint64_t expect = m <= pj ? (m - 1) * j : (m - 2) * j;
                if (total != expect) (m <= pj ? fold_ok : beyond_ok) = false;
                if (m <= pj && padic::m_fold_carries_closed_form(m, p, j) != total) fold_ok = false;
            }
            bool expansion_ok = true;
            for (std::uint64_t M = 1; M < pj; ++M) {
                if (M % p == 0) continue;
                mpz_class direct = mpz_class(static_cast<unsigned long>(M)) * N;
                if (padic::closed_form_expansion(M, p, j) != padic::to_digits(direct, p))
                    expansion_ok = false;
            }
            suite.add("m-fold-carries", fold_ok && beyond_ok,
                      {{"p", p}, {"j", j}, {"m_max", pj + 1}});
            suite.add("product-expansion", expansion_ok, {{"p", p}, {"j", j}});
        }
    }
    return suite;
}

Suite superadditivity(std::uint64_t seed, std::uint64_t cases) {
    Suite suite{"superadditivity", {}};
    std::uint64_t bad = 0;
    for (std::uint64_t t = 0; t < cases; ++t) {
        std::mt19937_64 eng(mix(seed ^ 0x5eedu, t));
        std::uint64_t p = kPrimes[eng() % 6];
        std::uint64_t l = 1 + eng() % 6;
        std::uint32_t j = 1 + eng() % 6;
        std::uint64_t pj;
        {
            auto pw = nt::checked_pow(p, j);
            pj = pw ? *pw : 0;
        }
        if (pj == 0) continue;
        std::vector<mpz_class> whole(l + 1), high(l + 1), low(l + 1);
        for (std::size_t i = 0; i <= l; ++i) {
            std::uint64_t a = draw_part(eng, 1'000'000);
            whole[i] = static_cast<unsigned long>(a);
            high[i] = static_cast<unsigned long>(a / pj);
            low[i] = static_cast<unsigned long>(a % pj);
        }
        std::uint64_t c_whole = padic::carries_parenthesized(p, whole);
        std::uint64_t c_high = padic::carries_parenthesized(p, high);
        std::uint64_t c_low = padic::carries_parenthesized(p, low);
        if (c_whole < c_high + c_low) {
            ++bad;
            suite.add("superadditivity-failure", false, {{"case", t}});
        }
    }
    suite.add("superadditivity", bad == 0, {{"cases", cases}, {"violations", bad}});
    return suite;
}

Suite catalan_integrality(std::uint64_t l_max, std::uint64_t n_max, std::uint64_t exact_limit,
                          unsigned jobs) {
    Suite suite{"catalan-integrality", {}};
    std::vector<std::uint64_t> bad_n(l_max + 1, 0);
    std::vector<std::uint8_t> row_ok(l_max + 1, 1);
    parallel_for(jobs, l_max < 2 ? 0 : l_max - 1, [&](std::uint64_t idx) {
        std::uint64_t l = idx + 2;
        for (std::uint64_t n = l; n <= n_max; ++n) {
            if (!mcatalan::is_integral_fast(l, n)) {
                row_ok[l] = 0;
                bad_n[l] = n;
                return;
            }
        }
    });
    for (std::uint64_t l = 2; l <= l_max; ++l) {
        suite.add("integral-for-n-at-least-l", row_ok[l] == 1,
                  row_ok[l] ? json{{"l", l}, {"n_max", n_max}}
                            : json{{"l", l}, {"first_bad_n", bad_n[l]}});
    }

    bool implication_ok = true;
    for (std::uint64_t l = 1; l <= l_max; ++l)
        for (std::uint64_t n = 1; n <= n_max; ++n)
            if (mcatalan::sufficient_integral(l, n) && !mcatalan::is_integral_fast(l, n))
                implication_ok = false;
    suite.add("sufficiency-implies-integrality", implication_ok,
              {{"l_max", l_max}, {"n_max", n_max}});

    std::uint64_t spots = 0;
    bool exact_ok = true, ledger_ok = true;
    for (std::uint64_t l = 1; l <= l_max; ++l) {
        for (std::uint64_t n = 1; n <= n_max && (l + 1) * n <= exact_limit; ++n) {
            auto value = mcatalan::catalan_multi(l, n);
            if (value.is_integer != mcatalan::is_integral_fast(l, n)) exact_ok = false;
            for (auto& [p, entry] : value.ledger) {
                std::uint64_t den_v =
                    entry.denominator_valuation > entry.numerator_valuation
                        ? entry.denominator_valuation - entry.numerator_valuation
                        : 0;
                if (nt::valuation(value.denominator, mpz_get_ui(p.get_mpz_t())) != den_v)
                    ledger_ok = false;
            }
            ++spots;
        }
    }
    suite.add("exact-agrees-with-fast", exact_ok, {{"spot_checks", spots}});
    suite.add("ledger-reconciles", ledger_ok, {{"spot_checks", spots}});
    return suite;
}

Suite catalan_exceptions(std::uint64_t l_max, std::uint64_t bound) {
    Suite suite{"catalan-exceptions", {}};
    for (std::uint64_t l = 1; l <= l_max; ++l) {
        auto bad = mcatalan::nonintegral_set(l, bound);
        auto candidates = mcatalan::exceptional_candidates(l);
        bool contained = true, below_l = true, exact_confirmed = true;
        for (auto n : bad) {
            if (!candidates.count(n)) contained = false;
            if (n >= l) below_l = false;
            if (mcatalan::catalan_multi(l, n).is_integer) exact_confirmed = false;
        }
        bool prime_hit = !nt::is_prime(l) || l < 2 || bad.count(l - 1) > 0;
        json data{{"l", l},
                  {"bound", bound},
                  {"nonintegral", std::vector<std::uint64_t>(bad.begin(), bad.end())},
                  {"candidates", std::vector<std::uint64_t>(candidates.begin(), candidates.end())}};
        suite.add("nonintegral-set-shape", contained && below_l && prime_hit && exact_confirmed,
                  data);
    }
    auto c31 = mcatalan::catalan_multi(3, 1);
    suite.add("c3-of-1-equals-3", c31.is_integer && c31.numerator == 3,
              {{"value", c31.numerator.get_str()}});
    return suite;
}

Suite rank_laws(std::size_t max_sequences, std::uint64_t p_max, std::uint64_t n_max) {
    Suite suite{"rank-laws", {}};
    auto pool = delta_regular_pool(10, 10);
    if (pool.size() > max_sequences)
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(max_sequences), pool.end());
    for (const auto& u : pool) {
        bool bound_ok = true, divis_ok = true, val_ok = true;
        std::vector<mpz_class> terms(n_max + 1);
        for (std::uint64_t n = 0; n <= n_max; ++n) terms[n] = u.term(n);
        for (std::uint64_t p = 2; p <= p_max; ++p) {
            if (!nt::is_prime(p) || u.Q() % static_cast<std::int64_t>(p) == 0) continue;
            auto profile = u.rank(p);
            if (p == 2) {
                bool even_disc = mpz_even_p(u.discriminant().get_mpz_t());
                if (profile.rho != (even_disc ? 2u : 3u)) bound_ok = false;
            } else if (mpz_divisible_ui_p(u.discriminant().get_mpz_t(),
                                          static_cast<unsigned long>(p))) {
                if (profile.rho != p) bound_ok = false;
            } else {
                std::uint64_t target = static_cast<std::uint64_t>(
                    static_cast<std::int64_t>(p) - nt::legendre_symbol(u.discriminant(), p));
                if (target % profile.rho != 0) bound_ok = false;
            }
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                bool divides = mpz_divisible_ui_p(terms[n].get_mpz_t(),
                                                  static_cast<unsigned long>(p));
                if (divides != (n % profile.rho == 0)) divis_ok = false;
                std::uint64_t direct = divides ? nt::valuation(terms[n], p) : 0;
                if (u.term_valuation(profile, n) != direct) val_ok = false;
            }
        }
        std::ostringstream name;
        name << "(" << u.P() << "," << u.Q() << ")";
        suite.add("rank-laws", bound_ok && divis_ok && val_ok,
                  {{"sequence", name.str()},
                   {"rank_bound", bound_ok},
                   {"divisibility", divis_ok},
                   {"valuation_law", val_ok}});
    }
    return suite;
}

Suite lucasnomial_kummer(std::uint64_t seed, std::uint64_t cases, std::uint64_t p_max,
                         std::uint64_t mn_max) {
    Suite suite{"lucasnomial-kummer", {}};
    auto pool = delta_regular_pool(5, 5);
    std::uint64_t bad = 0, done = 0;
    for (std::uint64_t t = 0; t < cases; ++t) {
        std::mt19937_64 eng(mix(seed ^ 0xabcdu, t));
        const auto& u = pool[eng() % pool.size()];
        std::vector<std::uint64_t> primes;
        for (std::uint64_t p = 2; p <= p_max; ++p)
            if (nt::is_prime(p) && u.Q() % static_cast<std::int64_t>(p) != 0) primes.push_back(p);
        if (primes.empty()) continue;
        std::uint64_t p = primes[eng() % primes.size()];
        std::uint64_t n = 1 + eng() % (mn_max - 1);
        std::uint64_t m = 1 + eng() % (mn_max - n);
        std::uint64_t rule = u.lucasnomial_valuation(p, m, n);
        std::uint64_t direct = nt::valuation(u.lucasnomial(m + n, n), p);
        if (rule != direct) {
            ++bad;
            std::ostringstream os;
            os << "(" << u.P() << "," << u.Q() << ") p=" << p << " m=" << m << " n=" << n
               << " rule=" << rule << " direct=" << direct;
            suite.add("lucasnomial-kummer-failure", false, {{"detail", os.str()}});
        }
        ++done;
    }
    suite.add("lucasnomial-kummer", bad == 0, {{"cases", done}, {"violations", bad}});
    return suite;
}

Suite valuation_closed_forms(std::uint64_t exact_limit) {
    Suite suite{"valuation-closed-forms", {}};
    auto pool = delta_regular_pool(5, 5);
    for (const auto& u : pool) {
        for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
            if (u.Q() % static_cast<std::int64_t>(p) == 0) continue;
            auto profile = u.rank(p);
            bool rule_ok = true, exact_ok = true;
            std::uint64_t grid = 0, exact_checks = 0;
            for (std::uint64_t lambda = 1; lambda <= 10; ++lambda) {
                if (lambda % p == 0) continue;
                for (std::uint32_t j = 0; j <= 3; ++j) {
                    auto pj = nt::checked_pow(p, j);
                    std::uint64_t n = lambda * profile.rho * *pj - 1;
                    if (n == 0) continue;
                    for (std::uint64_t i = 1; i <= 2 * profile.rho; ++i) {
                        auto breakdown =
                            i <= profile.rho
                                ? lcatalan::valuation_contribution_low(profile, lambda, j, i)
                                : lcatalan::valuation_contribution_high(profile, lambda, j, i);
                        std::uint64_t rule = u.lucasnomial_valuation(profile, i * n, n);
                        if (breakdown.contribution != rule) rule_ok = false;
                        ++grid;
                        if ((i + 1) * n <= exact_limit) {
                            std::uint64_t direct =
                                nt::valuation(u.lucasnomial((i + 1) * n, n), p);
                            if (breakdown.contribution != direct) exact_ok = false;
                            ++exact_checks;
                        }
                    }
                }
            }
            std::ostringstream name;
            name << "(" << u.P() << "," << u.Q() << ") p=" << p;
            suite.add("closed-form-grid", rule_ok && exact_ok,
                      {{"sequence_prime", name.str()},
                       {"grid_points", grid},
                       {"exact_checks", exact_checks}});
        }
    }
    return suite;
}

Suite headline_example() {
    Suite suite{"headline-example", {}};
    LucasSequence fib(1, -1);
    auto profile = fib.rank(2);

    std::uint64_t rule_total = 0;
    for (std::uint64_t i = 1; i <= 6; ++i)
        rule_total += fib.lucasnomial_valuation(profile, i * 5, 5);
    suite.add("central-coefficient-valuation-by-rule", rule_total == 17, {{"v2", rule_total}});

    std::vector<std::uint64_t> parts(7, 5);
    mpz_class big = fib.l_lucasnomial(parts);
    std::uint64_t exact_v = nt::valuation(big, 2);
    suite.add("central-coefficient-valuation-exact", exact_v == 17,
              {{"v2", exact_v}, {"coefficient", big.get_str()}});

    std::uint64_t denom_v = 6 * fib.term_valuation(profile, 6);
    suite.add("denominator-valuation", denom_v == 18, {{"v2", denom_v}});

    auto value = lcatalan::c_ul(fib, 6, 5);
    suite.add("headline-noninteger", !value.is_integer && value.denominator == 2,
              {{"numerator", value.numerator.get_str()},
               {"denominator", value.denominator.get_str()}});
    suite.add("valuation-deficit", lcatalan::c_ul_valuation(fib, 6, 2, 5) == -1,
              {{"v2", lcatalan::c_ul_valuation(fib, 6, 2, 5)}});
    return suite;
}

Suite witness_sample(std::uint32_t j_max) {
    Suite suite{"witness-sample", {}};
    LucasSequence fib(1, -1);

    auto record = [&suite](const char* kind, const LucasSequence& u, std::uint64_t l,
                           std::uint64_t p, const std::vector<std::uint64_t>& witnesses) {
        std::ostringstream name;
        name << "(" << u.P() << "," << u.Q() << ") l=" << l << " p=" << p;
        std::vector<std::int64_t> vals;
        bool all_negative = !witnesses.empty();
        for (auto n : witnesses) {
            auto v = lcatalan::c_ul_valuation(u, l, p, n);
            vals.push_back(v);
            if (v >= 0) all_negative = false;
        }
        suite.add(kind, all_negative,
                  {{"pair", name.str()}, {"witnesses", witnesses}, {"valuations", vals}});
    };

    record("witness-rank-l", fib, 7, 13, lcatalan::nonintegral_witnesses_rank_l(fib, 7, 13, j_max));
    record("witness-rank-l", fib, 10, 11,
           lcatalan::nonintegral_witnesses_rank_l(fib, 10, 11, j_max));
    record("witness-paired-ranks", fib, 8, 13,
           lcatalan::nonintegral_witnesses_paired_ranks(fib, 7, 13, j_max));
    for (const auto& row : tables::table_b()) {
        LucasSequence u(row.P, row.Q);
        record("witness-rank-window", u, row.l, row.p,
               lcatalan::nonintegral_witnesses_rank_window(u, row.l, row.p, j_max));
    }
    return suite;
}

namespace {

Suite wrap_table(const char* name, const std::vector<tables::TableEntry>& entries) {
    Suite suite{name, {}};
    for (const auto& e : entries) {
        Check check;
        check.kind = std::string("table-") + static_cast<char>(e.table_id - 'A' + 'a') + "-entry";
        check.status = e.verdict == tables::Verdict::confirmed
                           ? "ok"
                           : (e.verdict == tables::Verdict::refuted ? "fail" : "skip");
        check.data = {{"payload", e.payload}, {"note", e.note}};
        suite.checks.push_back(std::move(check));
    }
    return suite;
}

}  // namespace

Suite table_a_suite(unsigned max_param) {
    return wrap_table("table-a", lcatalan::verify_table_a(max_param));
}

Suite table_b_suite() { return wrap_table("table-b", lcatalan::verify_table_b()); }

Suite table_c_suite(std::uint64_t n_max, unsigned family_param) {
    return wrap_table("table-c", lcatalan::verify_table_c(n_max, family_param));
}

}  // namespace lucanomial::verify
