#include "lucanomial/tables.hpp"

#include <numeric>
#include <stdexcept>

#include "lucanomial/lucas.hpp"
#include "lucanomial/nt.hpp"

namespace lucanomial::tables {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::refuted: return "refuted";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

namespace {

// Family ids, dataset A.
enum {
    kA2_OneQ = 0,       // (1,Q), Q != 1
    kA2_PowTwoQ,        // (2^i, Q), Q odd, i >= 1, (Q,i) != (1,1)
    kA3_SqPlus1,        // (P, P^2+1)
    kA3_SqMinus1,       // (P, P^2-1)
    kA3_SqPlus3i,       // (P, P^2+3^i), 3 !| P, i >= 0
    kA3_SqMinus3i,      // (P, P^2-3^i), 3 !| P, i >= 0
    kA4_OddPlus,        // (P, (P^2+1)/2), P > 1 odd
    kA4_OddMinus,       // (P, (P^2-1)/2), P > 1 odd
    kA4_EvenPlus,       // (2i, 2i^2+1), i >= 1
    kA4_EvenMinus,      // (2i, 2i^2-1), i >= 1
    kA6_Div3Minus1,     // (P, (P^2-1)/3), 3 !| P >= 4
    kA6_Mult3Plus,      // (P, (P^2+3)/3), 3 | P
    kA6_Mult3Minus,     // (P, (P^2-3)/3), 3 | P
    kA6_MinusPow2,      // (P, (P^2-(-2)^i)/3), P = +-1 mod 6, i >= 1, (P,i) != (1,1)
    kA6_Pm3Pow2Plus,    // (P, (P^2+3*2^i)/3), P = 3 mod 6, i >= 1
    kA6_Pm3Pow2Minus,   // (P, (P^2-3*2^i)/3), P = 3 mod 6, i >= 1
};

// Family ids, dataset C.
enum {
    kC2_OneQ = 100,  // (1,Q), Q != 1
    kC2_TwoQ,        // (2,Q), Q != 1 odd
};

const std::vector<DefectiveRow> kTableA = {
    {2, true, 0, 0, kA2_OneQ, "(1,Q) with Q != 1"},
    {2, true, 0, 0, kA2_PowTwoQ, "(2^i,Q) with Q odd, i >= 1, (Q,i) != (1,1)"},
    {3, true, 0, 0, kA3_SqPlus1, "(P,P^2+1)"},
    {3, true, 0, 0, kA3_SqMinus1, "(P,P^2-1)"},
    {3, true, 0, 0, kA3_SqPlus3i, "(P,P^2+3^i) with 3 !| P, i >= 0"},
    {3, true, 0, 0, kA3_SqMinus3i, "(P,P^2-3^i) with 3 !| P, i >= 0"},
    {4, true, 0, 0, kA4_OddPlus, "(P,(P^2+1)/2) with P > 1 odd"},
    {4, true, 0, 0, kA4_OddMinus, "(P,(P^2-1)/2) with P > 1 odd"},
    {4, true, 0, 0, kA4_EvenPlus, "(2i,2i^2+1) with i >= 1"},
    {4, true, 0, 0, kA4_EvenMinus, "(2i,2i^2-1) with i >= 1"},
    {5, false, 1, -1, -1, ""},
    {5, false, 1, 2, -1, ""},
    {5, false, 1, 3, -1, ""},
    {5, false, 1, 4, -1, ""},
    {5, false, 2, 11, -1, ""},
    {5, false, 12, 55, -1, ""},
    {5, false, 12, 377, -1, ""},
    {6, true, 0, 0, kA6_Div3Minus1, "(P,(P^2-1)/3) with 3 !| P >= 4"},
    {6, true, 0, 0, kA6_Mult3Plus, "(P,(P^2+3)/3) with 3 | P"},
    {6, true, 0, 0, kA6_Mult3Minus, "(P,(P^2-3)/3) with 3 | P"},
    {6, true, 0, 0, kA6_MinusPow2, "(P,(P^2-(-2)^i)/3) with P = +-1 mod 6, i >= 1, (P,i) != (1,1)"},
    {6, true, 0, 0, kA6_Pm3Pow2Plus, "(P,(P^2+3*2^i)/3) with P = 3 mod 6, i >= 1"},
    {6, true, 0, 0, kA6_Pm3Pow2Minus, "(P,(P^2-3*2^i)/3) with P = 3 mod 6, i >= 1"},
    {7, false, 1, 2, -1, ""},
    {7, false, 1, 5, -1, ""},
    {8, false, 1, 2, -1, ""},
    {8, false, 2, 7, -1, ""},
    {10, false, 2, 3, -1, ""},
    {10, false, 5, 7, -1, ""},
    {10, false, 5, 18, -1, ""},
    {12, false, 1, -1, -1, ""},
    {12, false, 1, 2, -1, ""},
    {12, false, 1, 3, -1, ""},
    {12, false, 1, 4, -1, ""},
    {12, false, 1, 5, -1, ""},
    {12, false, 2, 15, -1, ""},
    {13, false, 1, 2, -1, ""},
    {18, false, 1, 2, -1, ""},
    {30, false, 1, 2, -1, ""},
};

const std::vector<RankChoiceRow> kTableB = {
    {1, 2, 12, 17, 9},
    {1, 2, 13, 17, 9},
    {1, 2, 14, 17, 9},
    {1, 2, 18, 31, 16},
    {1, 5, 7, 11, 5},
    {1, 5, 8, 11, 5},
    {1, 5, 12, 71, 9},
    {1, 4, 5, 7, 4},
    {1, 4, 12, 43, 11},
    {1, 3, 12, 23, 11},
    {1, -1, 12, 89, 11},
    {2, 15, 12, 43, 11},
    {2, 3, 10, 73, 9},
    {5, 18, 10, 31, 8},
    {5, 7, 10, 19, 9},
    {2, 7, 8, 17, 6},
    {2, 11, 5, 7, 3},
    {12, 55, 5, 17, 4},
    {12, 377, 5, 233, 3},
};

const std::vector<MultiCatalanRow> kTableC = {
    {2, true, 0, 0, kC2_OneQ, "(1,Q) with Q != 1"},
    {2, true, 0, 0, kC2_TwoQ, "(2,Q) with Q != 1 odd"},
    {3, false, 1, -5, -1, ""},
    {3, false, 1, -2, -1, ""},
    {3, false, 1, -1, -1, ""},
    {3, false, 1, 2, -1, ""},
    {3, false, 1, 3, -1, ""},
    {3, false, 1, 4, -1, ""},
    {3, false, 1, 7, -1, ""},
    {3, false, 2, 3, -1, ""},
    {3, false, 2, 5, -1, ""},
    {3, false, 2, 7, -1, ""},
    {3, false, 3, 7, -1, ""},
    {3, false, 3, 8, -1, ""},
    {3, false, 3, 10, -1, ""},
    {3, false, 3, 11, -1, ""},
    {3, false, 6, 35, -1, ""},
    {3, false, 6, 37, -1, ""},
    {4, false, 1, -1, -1, ""},
    {4, false, 1, 2, -1, ""},
    {5, false, 1, -1, -1, ""},
    {5, false, 1, 2, -1, ""},
    {5, false, 1, 3, -1, ""},
    {6, false, 1, -1, -1, ""},
    {6, false, 1, 2, -1, ""},
    {7, false, 1, 2, -1, ""},
    {8, false, 1, 2, -1, ""},
};

bool viable_pair(std::int64_t P, std::int64_t Q) {
    if (P <= 0 || Q == 0) return false;
    if (P == 2 && Q == 1) return false;
    if (std::gcd(P, Q < 0 ? -Q : Q) != 1) return false;
    lucas::LucasSequence u(P, Q);
    return u.delta_regular();
}

void push_if_viable(std::vector<std::pair<std::int64_t, std::int64_t>>& out, std::int64_t P,
                    std::int64_t Q) {
    if (viable_pair(P, Q)) out.emplace_back(P, Q);
}

}  // namespace

const std::vector<DefectiveRow>& table_a() { return kTableA; }
const std::vector<RankChoiceRow>& table_b() { return kTableB; }
const std::vector<MultiCatalanRow>& table_c() { return kTableC; }

std::vector<std::pair<std::int64_t, std::int64_t>> instantiate_family(char table_id, int family_id,
                                                                      unsigned max_param) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    const std::int64_t mp = static_cast<std::int64_t>(max_param);
    auto pow_i64 = [](std::int64_t b, unsigned e) {
        std::int64_t r = 1;
        while (e--) r *= b;
        return r;
    };
    if (table_id == 'A') {
        switch (family_id) {
            case kA2_OneQ:
                for (std::int64_t Q = -mp; Q <= mp; ++Q)
                    if (Q != 1) push_if_viable(out, 1, Q);
                break;
            case kA2_PowTwoQ:
                for (unsigned i = 1; i <= std::min(max_param, 12u); ++i)
                    for (std::int64_t Q = -mp; Q <= mp; Q += 1) {
                        if ((Q & 1) == 0) continue;
                        if (Q == 1 && i == 1) continue;
                        push_if_viable(out, pow_i64(2, i), Q);
                    }
                break;
            case kA3_SqPlus1:
                for (std::int64_t P = 1; P <= 25; ++P) push_if_viable(out, P, P * P + 1);
                break;
            case kA3_SqMinus1:
                for (std::int64_t P = 1; P <= 25; ++P) push_if_viable(out, P, P * P - 1);
                break;
            case kA3_SqPlus3i:
                for (std::int64_t P = 1; P <= 25; ++P) {
                    if (P % 3 == 0) continue;
                    for (unsigned i = 0; i <= max_param; ++i)
                        push_if_viable(out, P, P * P + pow_i64(3, i));
                }
                break;
            case kA3_SqMinus3i:
                for (std::int64_t P = 1; P <= 25; ++P) {
                    if (P % 3 == 0) continue;
                    for (unsigned i = 0; i <= max_param; ++i)
                        push_if_viable(out, P, P * P - pow_i64(3, i));
                }
                break;
            case kA4_OddPlus:
                for (std::int64_t P = 3; P <= 25; P += 2) push_if_viable(out, P, (P * P + 1) / 2);
                break;
            case kA4_OddMinus:
                for (std::int64_t P = 3; P <= 25; P += 2) push_if_viable(out, P, (P * P - 1) / 2);
                break;
            case kA4_EvenPlus:
                for (std::int64_t i = 1; i <= mp; ++i) push_if_viable(out, 2 * i, 2 * i * i + 1);
                break;
            case kA4_EvenMinus:
                for (std::int64_t i = 1; i <= mp; ++i) push_if_viable(out, 2 * i, 2 * i * i - 1);
                break;
            case kA6_Div3Minus1:
                for (std::int64_t P = 4; P <= 25; ++P)
                    if (P % 3 != 0) push_if_viable(out, P, (P * P - 1) / 3);
                break;
            case kA6_Mult3Plus:
                for (std::int64_t P = 3; P <= 25; P += 3) push_if_viable(out, P, (P * P + 3) / 3);
                break;
            case kA6_Mult3Minus:
                for (std::int64_t P = 3; P <= 25; P += 3) push_if_viable(out, P, (P * P - 3) / 3);
                break;
            case kA6_MinusPow2:
                for (std::int64_t P = 1; P <= 25; ++P) {
                    if (P % 6 != 1 && P % 6 != 5) continue;
                    for (unsigned i = 1; i <= max_param; ++i) {
                        if (P == 1 && i == 1) continue;
                        std::int64_t t = P * P - pow_i64(-2, i);
                        if (t % 3 != 0) continue;
                        push_if_viable(out, P, t / 3);
                    }
                }
                break;
            case kA6_Pm3Pow2Plus:
                for (std::int64_t P = 3; P <= 25; P += 6)
                    for (unsigned i = 1; i <= max_param; ++i)
                        push_if_viable(out, P, (P * P + 3 * pow_i64(2, i)) / 3);
                break;
            case kA6_Pm3Pow2Minus:
                for (std::int64_t P = 3; P <= 25; P += 6)
                    for (unsigned i = 1; i <= max_param; ++i)
                        push_if_viable(out, P, (P * P - 3 * pow_i64(2, i)) / 3);
                break;
            default:
                throw std::domain_error("instantiate_family: unknown dataset A family");
        }
        return out;
    }
    if (table_id == 'C') {
        switch (family_id) {
            case kC2_OneQ:
                for (std::int64_t Q = -mp; Q <= mp; ++Q)
                    if (Q != 1) push_if_viable(out, 1, Q);
                break;
            case kC2_TwoQ:
                for (std::int64_t Q = -mp; Q <= mp + 1; ++Q)
                    if (Q != 1 && (Q & 1)) push_if_viable(out, 2, Q);
                break;
            default:
                throw std::domain_error("instantiate_family: unknown dataset C family");
        }
        return out;
    }
    throw std::domain_error("instantiate_family: dataset has no families");
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void export_csv(char table_id, std::ostream& os) {
    if (table_id == 'A') {
        os << "n,kind,P,Q,descriptor\n";
        for (auto& r : kTableA) {
            if (r.is_family)
                os << r.n << ",family,,," << csv_quote(r.descriptor) << "\n";
            else
                os << r.n << ",pair," << r.P << "," << r.Q << ",\n";
        }
        return;
    }
    if (table_id == 'B') {
        os << "P,Q,l,p,rho\n";
        for (auto& r : kTableB)
            os << r.P << "," << r.Q << "," << r.l << "," << r.p << "," << r.rho << "\n";
        return;
    }
    if (table_id == 'C') {
        os << "l,kind,P,Q,descriptor\n";
        for (auto& r : kTableC) {
            if (r.is_family)
                os << r.l << ",family,,," << csv_quote(r.descriptor) << "\n";
            else
                os << r.l << ",pair," << r.P << "," << r.Q << ",\n";
        }
        return;
    }
    throw std::domain_error("export_csv: unknown dataset id");
}

}  // namespace lucanomial::tables
