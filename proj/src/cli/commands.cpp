#include "lucanomial/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "lucanomial/lcatalan.hpp"
#include "lucanomial/lucas.hpp"
#include "lucanomial/mcatalan.hpp"
#include "lucanomial/nt.hpp"
#include "lucanomial/padic.hpp"
#include "lucanomial/report.hpp"
#include "lucanomial/tables.hpp"
#include "lucanomial/verify.hpp"

namespace lucanomial::cli {

namespace {

using json = nlohmann::json;

struct CommonFlags {
    std::string json_path;
    unsigned jobs = 0;
    std::uint64_t n_max = 0;
    std::uint64_t l_max = 0;
    std::uint64_t seed = 0x1uLL << 32 | 0xC0FFEE;
    bool trace = false;
};

unsigned effective_jobs(unsigned flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("LUCANOMIAL_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

json ledger_json(const mcatalan::CatalanValue& value) {
    json ledger = json::object();
    for (auto& [p, entry] : value.ledger) {
        ledger[p.get_str()] = {{"numerator_valuation", entry.numerator_valuation},
                               {"denominator_valuation", entry.denominator_valuation}};
    }
    return ledger;
}

void print_catalan(std::ostream& out, const std::string& label,
                   const mcatalan::CatalanValue& value) {
    out << label << " = " << value.numerator.get_str();
    if (!value.is_integer) out << "/" << value.denominator.get_str();
    out << (value.is_integer ? "  (integer)" : "  (not an integer)") << "\n";
    for (auto& [p, entry] : value.ledger) {
        out << "  p=" << p.get_str() << ": v(numerator)=" << entry.numerator_valuation
            << " v(denominator)=" << entry.denominator_valuation << "\n";
    }
    if (!value.ledger_complete) out << "  (ledger incomplete: large cofactor unfactored)\n";
}

void render_trace(std::ostream& out, const std::vector<mpz_class>& summands, std::uint64_t p) {
    mpz_class acc = summands[0];
    for (std::size_t s = 1; s < summands.size(); ++s) {
        auto step = padic::add_with_carries(acc, summands[s], p);
        auto top = padic::to_digits(acc, p);
        auto bottom = padic::to_digits(summands[s], p);
        auto sum = padic::to_digits(step.sum, p);
        std::size_t width = sum.digits.size() ? sum.digits.size() : 1;
        std::vector<bool> mark(width + 1, false);
        for (auto pos : step.carry_positions)
            if (pos + 1 <= width) mark[pos + 1] = true;
        std::size_t cell = std::to_string(p - 1).size() + 1;
        auto row = [&](const padic::DigitExpansion& d, char lead) {
            std::string line(1, lead);
            line += ' ';
            for (std::size_t col = width; col-- > 0;) {
                std::string txt = col < d.digits.size() ? std::to_string(d.digits[col]) : " ";
                line += std::string(cell - txt.size(), ' ') + txt;
            }
            return line;
        };
        std::string marks = "  ";
        for (std::size_t col = width; col-- > 0;) {
            std::string txt = mark[col] ? "c" : " ";
            marks += std::string(cell - txt.size(), ' ') + txt;
        }
        out << "step " << s << ": " << acc.get_str() << " + " << summands[s].get_str()
            << "  (base " << p << ", " << step.carries << " carries)\n";
        out << marks << "\n" << row(top, ' ') << "\n" << row(bottom, '+') << "\n";
        out << "  " << std::string(cell * width, '-') << "\n" << row(sum, ' ') << "\n";
        acc = step.sum;
    }
}

void finish(Report& report, const CommonFlags& flags, std::ostream& out,
            std::chrono::steady_clock::time_point start) {
    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    if (!flags.json_path.empty()) report.write_json(flags.json_path);
    std::size_t fails = 0, skips = 0;
    for (auto& r : report.results) {
        std::string s = r.value("status", "ok");
        if (s == "fail") ++fails;
        if (s == "skip") ++skips;
    }
    out << report.command << ": " << report.results.size() << " results, " << fails
        << " failed, " << skips << " skipped -> " << report.status << " ("
        << report.timing_ms << " ms)\n";
}

void print_failures(const Report& report, std::ostream& out) {
    for (auto& r : report.results) {
        if (r.value("status", "ok") != "fail") continue;
        out << "FAIL " << r.value("kind", "?") << " " << r.dump() << "\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& argv, std::ostream& out) {
    CLI::App app{"exact multinomial and Lucasnomial Catalan number toolkit"};
    app.require_subcommand(1);
    CommonFlags flags;

    // catalan
    auto* catalan = app.add_subcommand("catalan", "compute C_l(n), or C_{U,l}(n) with -P/-Q");
    std::uint64_t cat_l = 1, cat_n = 1;
    std::int64_t cat_p = 0, cat_q = 0;
    catalan->add_option("-l", cat_l, "number of extra parts")
        ->required()
        ->check(CLI::PositiveNumber);
    catalan->add_option("-n", cat_n, "argument n")->required()->check(CLI::PositiveNumber);
    catalan->add_option("-P", cat_p, "Lucas parameter P (with -Q: Lucas analogue)");
    catalan->add_option("-Q", cat_q, "Lucas parameter Q");
    catalan->add_option("--json", flags.json_path, "write a JSON report to this path");

    // lucas
    auto* lucascmd = app.add_subcommand("lucas", "Lucas sequence queries");
    std::int64_t lp = 1, lq = -1;
    std::string subaction;
    std::vector<std::uint64_t> subargs;
    lucascmd->add_option("P", lp, "parameter P > 0")->required();
    lucascmd->add_option("Q", lq, "parameter Q != 0")->required();
    lucascmd->add_option("action", subaction, "term | rank | valuation | lucasnomial")->required();
    lucascmd->add_option("args", subargs, "action arguments");
    lucascmd->add_option("--json", flags.json_path, "write a JSON report to this path");

    // carries
    auto* carries = app.add_subcommand("carries", "count carries of a parenthesized base-p sum");
    std::uint64_t carry_base = 2;
    std::vector<std::string> carry_summands;
    carries->add_option("p", carry_base, "prime base")->required();
    carries->add_option("summands", carry_summands, "at least two non-negative integers")
        ->required();
    carries->add_flag("--trace", flags.trace, "print the digit-by-digit addition tables");
    carries->add_option("--json", flags.json_path, "write a JSON report to this path");

    // verify
    auto* verifycmd = app.add_subcommand("verify", "run a verification suite");
    std::string suite_name;
    verifycmd
        ->add_option("suite", suite_name,
                     "kummer | thm-integrality | thm-exceptions | table-a | table-b | table-c | "
                     "lemmas")
        ->required();
    verifycmd->add_option("--json", flags.json_path, "write a JSON report to this path");
    verifycmd->add_option("--jobs", flags.jobs, "parallel workers (env LUCANOMIAL_JOBS)");
    verifycmd->add_option("--n-max", flags.n_max, "suite-specific range bound");
    verifycmd->add_option("--l-max", flags.l_max, "largest l to scan");
    verifycmd->add_option("--seed", flags.seed, "seed for randomized suites");

    // export
    auto* exportcmd = app.add_subcommand("export", "dump an embedded dataset");
    std::string export_table, csv_path;
    exportcmd->add_option("table", export_table, "table-a | table-b | table-c")->required();
    exportcmd->add_option("--csv", csv_path, "output path")->required();

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
        if (*carries && carry_summands.size() < 2)
            throw CLI::ValidationError("carries", "need at least two summands");
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, out);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const CLI::Error& e) {
        out << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    auto start = std::chrono::steady_clock::now();
    Report report;
    try {
        if (*catalan) {
            report.command = "catalan";
            report.parameters = {{"l", std::to_string(cat_l)}, {"n", std::to_string(cat_n)}};
            bool lucas_variant = catalan->count("-P") || catalan->count("-Q");
            mcatalan::CatalanValue value;
            std::string label;
            if (lucas_variant) {
                if (!catalan->count("-P") || !catalan->count("-Q"))
                    throw CLI::ValidationError("catalan", "-P and -Q must be given together");
                report.parameters["P"] = std::to_string(cat_p);
                report.parameters["Q"] = std::to_string(cat_q);
                lucas::LucasSequence u(cat_p, cat_q);
                value = lcatalan::c_ul(u, cat_l, cat_n);
                std::ostringstream lab;
                lab << "C_{U(" << cat_p << "," << cat_q << ")," << cat_l << "}(" << cat_n << ")";
                label = lab.str();
            } else {
                value = mcatalan::catalan_multi(cat_l, cat_n);
                std::ostringstream lab;
                lab << "C_" << cat_l << "(" << cat_n << ")";
                label = lab.str();
            }
            print_catalan(out, label, value);
            report.add_result({{"kind", "catalan-value"},
                               {"status", "ok"},
                               {"numerator", value.numerator.get_str()},
                               {"denominator", value.denominator.get_str()},
                               {"integer", value.is_integer},
                               {"ledger", ledger_json(value)},
                               {"ledger_complete", value.ledger_complete}});
            finish(report, flags, out, start);
            return report.exit_code();
        }

        if (*lucascmd) {
            report.command = "lucas";
            report.parameters = {{"P", std::to_string(lp)},
                                 {"Q", std::to_string(lq)},
                                 {"action", subaction}};
            lucas::LucasSequence u(lp, lq);
            auto need = [&](std::size_t k) {
                if (subargs.size() != k)
                    throw CLI::ValidationError("lucas", "wrong number of action arguments");
            };
            if (subaction == "term") {
                need(1);
                mpz_class t = u.term(subargs[0]);
                out << "U_" << subargs[0] << "(" << lp << "," << lq << ") = " << t.get_str()
                    << "\n";
                report.add_result(
                    {{"kind", "lucas-term"}, {"n", subargs[0]}, {"value", t.get_str()}});
            } else if (subaction == "rank") {
                need(1);
                auto profile = u.rank(subargs[0]);
                out << "rank of " << subargs[0] << " in U(" << lp << "," << lq
                    << "): rho=" << profile.rho << ", v_p(U_rho)=" << profile.val_u_rho
                    << ", delta=" << profile.delta << "\n";
                report.add_result({{"kind", "lucas-rank"},
                                   {"p", profile.p},
                                   {"rho", profile.rho},
                                   {"val_u_rho", profile.val_u_rho},
                                   {"delta", profile.delta}});
            } else if (subaction == "valuation") {
                need(2);
                std::uint64_t v = u.term_valuation(subargs[0], subargs[1]);
                out << "v_" << subargs[0] << "(U_" << subargs[1] << ") = " << v << "\n";
                report.add_result({{"kind", "lucas-term-valuation"},
                                   {"p", subargs[0]},
                                   {"n", subargs[1]},
                                   {"valuation", v}});
            } else if (subaction == "lucasnomial") {
                need(2);
                mpz_class b = u.lucasnomial(subargs[0], subargs[1]);
                out << "binom(" << subargs[0] << "," << subargs[1] << ")_U = " << b.get_str()
                    << "\n";
                report.add_result({{"kind", "lucasnomial"},
                                   {"m", subargs[0]},
                                   {"n", subargs[1]},
                                   {"value", b.get_str()}});
            } else {
                throw CLI::ValidationError("lucas", "unknown action " + subaction);
            }
            finish(report, flags, out, start);
            return report.exit_code();
        }

        if (*carries) {
            report.command = "carries";
            report.parameters = {{"p", std::to_string(carry_base)}};
            std::vector<mpz_class> summands;
            for (auto& s : carry_summands) summands.emplace_back(s);
            std::uint64_t count = padic::carries_parenthesized(carry_base, summands);
            if (flags.trace) render_trace(out, summands, carry_base);
            out << count << " carries\n";
            json parts = json::array();
            for (auto& s : summands) parts.push_back(s.get_str());
            report.add_result(
                {{"kind", "carry-count"}, {"summands", parts}, {"carries", count}});
            finish(report, flags, out, start);
            return report.exit_code();
        }

        if (*verifycmd) {
            report.command = "verify";
            unsigned jobs = effective_jobs(flags.jobs);
            report.parameters = {{"suite", suite_name},
                                 {"jobs", std::to_string(jobs)},
                                 {"seed", std::to_string(flags.seed)}};
            auto note_bounds = [&](std::uint64_t n, std::uint64_t l) {
                report.parameters["n_max"] = std::to_string(n);
                if (l) report.parameters["l_max"] = std::to_string(l);
            };
            if (suite_name == "kummer") {
                std::uint64_t tuples = flags.n_max ? flags.n_max : 10000;
                note_bounds(tuples, 0);
                report.absorb(verify::kummer_agreement(flags.seed, tuples, 1'000'000, jobs));
                report.absorb(verify::permutation_invariance(flags.seed, tuples / 10, 5));
                report.absorb(verify::carry_closed_forms());
                report.absorb(verify::superadditivity(flags.seed, tuples));
            } else if (suite_name == "thm-integrality") {
                std::uint64_t n_max = flags.n_max ? flags.n_max : 300;
                std::uint64_t l_max = flags.l_max ? flags.l_max : 12;
                note_bounds(n_max, l_max);
                report.absorb(verify::catalan_integrality(l_max, n_max, 400, jobs));
            } else if (suite_name == "thm-exceptions") {
                std::uint64_t n_max = flags.n_max ? flags.n_max : 500;
                std::uint64_t l_max = flags.l_max ? flags.l_max : 12;
                note_bounds(n_max, l_max);
                report.absorb(verify::catalan_exceptions(l_max, n_max));
            } else if (suite_name == "table-a") {
                unsigned max_param = flags.n_max ? static_cast<unsigned>(flags.n_max) : 10;
                note_bounds(max_param, 0);
                report.absorb(verify::table_a_suite(max_param));
            } else if (suite_name == "table-b") {
                report.absorb(verify::table_b_suite());
            } else if (suite_name == "table-c") {
                std::uint64_t n_max = flags.n_max ? flags.n_max : 150;
                note_bounds(n_max, 0);
                report.absorb(verify::table_c_suite(n_max, 10));
            } else if (suite_name == "lemmas") {
                report.absorb(verify::rank_laws(50, 50, 300));
                report.absorb(verify::lucasnomial_kummer(flags.seed, 2000, 13, 300));
                report.absorb(verify::valuation_closed_forms(400));
                report.absorb(verify::headline_example());
                report.absorb(verify::witness_sample(2));
            } else {
                throw CLI::ValidationError("verify", "unknown suite " + suite_name);
            }
            print_failures(report, out);
            finish(report, flags, out, start);
            return report.exit_code();
        }

        if (*exportcmd) {
            char id;
            if (export_table == "table-a")
                id = 'A';
            else if (export_table == "table-b")
                id = 'B';
            else if (export_table == "table-c")
                id = 'C';
            else
                throw CLI::ValidationError("export", "unknown table " + export_table);
            std::ofstream file(csv_path);
            if (!file) throw std::runtime_error("cannot open " + csv_path);
            tables::export_csv(id, file);
            out << "wrote " << csv_path << "\n";
            return kExitPass;
        }
    } catch (const CLI::Error& e) {
        out << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        out << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        report.add_result({{"kind", "error"}, {"status", "fail"}, {"message", e.what()}});
        out << "error: " << e.what() << "\n";
        finish(report, flags, out, start);
        return kExitRefuted;
    } catch (const std::exception& e) {
        out << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace lucanomial::cli
