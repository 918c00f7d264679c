#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "lucanomial/lucas.hpp"

namespace lucanomial::verify {

struct Check {
    std::string kind;
    std::string status;  // "ok", "fail" or "skip"
    nlohmann::json data = nlohmann::json::object();
};

struct Suite {
    std::string name;
    std::vector<Check> checks;

    std::size_t count(const char* status) const;
    bool pass() const { return count("fail") == 0; }
    void add(std::string kind, bool ok, nlohmann::json data = nlohmann::json::object());
    void skip(std::string kind, nlohmann::json data = nlohmann::json::object());
};

/// Deterministic per-index generator so parallel runs reproduce serial ones.
std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

/// All Delta-regular sequences with 1 <= P <= p_max, 0 < |Q| <= q_max, in
/// (P, Q) order.
std::vector<lucas::LucasSequence> delta_regular_pool(std::int64_t p_max, std::int64_t q_max);

/// Carry count == Legendre valuation == valuation of the exact coefficient,
/// for random tuples spread over primes {2,3,5,7,11,13} and l in [1,6] with
/// parts up to max_part (log-uniform magnitudes).
Suite kummer_agreement(std::uint64_t seed, std::uint64_t tuples, std::uint64_t max_part,
                       unsigned jobs);

/// Carry counts are invariant under random permutations of the summands.
Suite permutation_invariance(std::uint64_t seed, std::uint64_t tuples, unsigned permutations);

/// (m-1)j carries for the m-fold addition of p^j - 1 up to m = p^j, the
/// closed-form expansion, and the (m-2)j count at m = p^j + 1.
Suite carry_closed_forms();

/// Splitting every part at p^j never increases the total carry count.
Suite superadditivity(std::uint64_t seed, std::uint64_t cases);

/// C_l(n) integral for l <= n <= n_max, the sufficiency condition implies
/// integrality, and exact spot checks where (l+1)n <= exact_limit.
Suite catalan_integrality(std::uint64_t l_max, std::uint64_t n_max, std::uint64_t exact_limit,
                          unsigned jobs);

/// The true non-integral set is contained in the candidate set and in
/// [1, l-1]; for prime l it contains l-1; C_3(1) = 3 exactly.
Suite catalan_exceptions(std::uint64_t l_max, std::uint64_t bound);

/// Rank bounds, the divisibility law and the term-valuation law against
/// direct valuations.
Suite rank_laws(std::size_t max_sequences, std::uint64_t p_max, std::uint64_t n_max);

/// The Lucasnomial carry rule equals the direct valuation of the exact
/// Lucasnomial.
Suite lucasnomial_kummer(std::uint64_t seed, std::uint64_t cases, std::uint64_t p_max,
                         std::uint64_t mn_max);

/// Closed-form summand valuations agree with the carry rule over the small
/// exhaustive grid, and with exact values where (i+1)n <= exact_limit.
Suite valuation_closed_forms(std::uint64_t exact_limit);

/// The headline non-integrality instance of C_{U(1,-1),6}(5), by valuation
/// arithmetic and by exact rationals.
Suite headline_example();

/// Witness families refuting a sample of pairs outside dataset C, by
/// valuation arithmetic only.
Suite witness_sample(std::uint32_t j_max);

Suite table_a_suite(unsigned max_param);
Suite table_b_suite();
Suite table_c_suite(std::uint64_t n_max, unsigned family_param);

}  // namespace lucanomial::verify
