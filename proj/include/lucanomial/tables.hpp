#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace lucanomial::tables {

enum class Verdict { confirmed, refuted, skipped };

std::string to_string(Verdict v);

/// One verified row or row instance of an embedded dataset.
struct TableEntry {
    char table_id = '?';  // 'A', 'B' or 'C'
    std::string payload;
    Verdict verdict = Verdict::skipped;
    std::string note;
};

/// Dataset A: pairs (P,Q) whose term U_n has no primitive prime divisor,
/// for 2 <= n <= 30. Mix of concrete pairs and parametrized families.
struct DefectiveRow {
    int n;
    bool is_family;
    std::int64_t P, Q;          // concrete rows
    int family_id;              // family rows; -1 for concrete
    std::string descriptor;     // family rows
};

/// Dataset B: for a pair (U, l), a prime p and its rank making the
/// mid-range witness family applicable (p odd, p not dividing Q,
/// rho <= l <= min(2 rho, p-1)).
struct RankChoiceRow {
    std::int64_t P, Q;
    std::uint64_t l;
    std::uint64_t p, rho;
};

/// Dataset C: all pairs (U, l), l >= 2, whose generalized Catalan sequence
/// is integral up to finitely many n.
struct MultiCatalanRow {
    std::uint64_t l;
    bool is_family;
    std::int64_t P, Q;
    int family_id;
    std::string descriptor;
};

const std::vector<DefectiveRow>& table_a();
const std::vector<RankChoiceRow>& table_b();
const std::vector<MultiCatalanRow>& table_c();

/// Concrete (P,Q) instances of a parametrized family. Parameters run over
/// the row's stated congruence classes with P <= 25 and exponent/offset
/// parameters up to max_param; instances that fail the row's side conditions
/// (zero Q, the excluded pair (2,1), shared factors, degeneracy) are skipped.
std::vector<std::pair<std::int64_t, std::int64_t>> instantiate_family(char table_id, int family_id,
                                                                      unsigned max_param);

/// CSV dump of a dataset with a header row matching the field names.
void export_csv(char table_id, std::ostream& os);

}  // namespace lucanomial::tables
