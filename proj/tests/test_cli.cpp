#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lucanomial/commands.hpp"
#include "lucanomial/report.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    json report;
};

Run run(const std::vector<std::string>& args, bool with_json = false) {
    std::vector<std::string> full = args;
    std::string path;
    if (with_json) {
        path = std::string("cli_report_") + std::to_string(rand()) + ".json";
        full.push_back("--json");
        full.push_back(path);
    }
    std::ostringstream out;
    int code = lucanomial::cli::run_cli(full, out);
    Run result{code, out.str(), json()};
    if (with_json) {
        std::ifstream in(path);
        REQUIRE(in.good());
        in >> result.report;
        std::remove(path.c_str());
    }
    return result;
}

}  // namespace

TEST_CASE("catalan command") {
    auto r = run({"catalan", "-l", "3", "-n", "1"}, true);
    CHECK(r.code == 0);
    CHECK(r.out.find("C_3(1) = 3") != std::string::npos);
    CHECK(r.report["status"] == "pass");
    CHECK(r.report["results"][0]["numerator"] == "3");
    CHECK(r.report["results"][0]["integer"] == true);

    r = run({"catalan", "-l", "1", "-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("= 14") != std::string::npos);

    r = run({"catalan", "-l", "2", "-n", "1"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["numerator"] == "3");
    CHECK(r.report["results"][0]["denominator"] == "2");
    CHECK(r.report["results"][0]["integer"] == false);

    // Lucas analogue via -P/-Q
    r = run({"catalan", "-l", "6", "-n", "5", "-P", "1", "-Q", "-1"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["integer"] == false);
    CHECK(r.report["results"][0]["ledger"]["2"]["numerator_valuation"] == 17);
    CHECK(r.report["results"][0]["ledger"]["2"]["denominator_valuation"] == 18);
}

TEST_CASE("lucas command") {
    auto r = run({"lucas", "1", "-1", "rank", "2"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["rho"] == 3);

    r = run({"lucas", "1", "2", "rank", "271"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["rho"] == 17);

    r = run({"lucas", "1", "2", "term", "8"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["value"] == "-3");

    // p | Q: reported error, exit 1
    r = run({"lucas", "1", "2", "rank", "2"}, true);
    CHECK(r.code == 1);
    CHECK(r.report["status"] == "fail");

    r = run({"lucas", "1", "-1", "lucasnomial", "6", "3"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["value"] == "60");

    r = run({"lucas", "1", "-1", "valuation", "2", "6"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["valuation"] == 3);
}

TEST_CASE("carries command") {
    auto r = run({"carries", "2", "7", "7", "7", "7"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["carries"] == 9);

    r = run({"carries", "2", "1", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 carries") != std::string::npos);

    r = run({"carries", "3", "8", "8"}, true);
    CHECK(r.code == 0);
    CHECK(r.report["results"][0]["carries"] == 2);

    r = run({"carries", "2", "7", "7", "--trace"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c") != std::string::npos);
    CHECK(r.out.find("step 1") != std::string::npos);

    // usage errors
    CHECK(run({"carries", "2", "7"}).code == 2);
    CHECK(run({"carries", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"catalan", "-l", "3"}).code == 2);
    CHECK(run({"catalan", "-l", "0", "-n", "4"}).code == 2);
    CHECK(run({"carries", "2", "7", "7", "--bogus-flag"}).code == 2);
    CHECK(run({"carries", "4", "7", "7"}).code == 1);  // non-prime base: reported error
}

TEST_CASE("verify command exit codes and determinism") {
    auto first = run({"verify", "table-b"}, true);
    CHECK(first.code == 0);
    CHECK(first.report["status"] == "pass");
    CHECK(first.report["command"] == "verify");

    auto second = run({"verify", "table-b"}, true);
    first.report.erase("timing_ms");
    second.report.erase("timing_ms");
    CHECK(first.report == second.report);

    CHECK(run({"verify", "no-such-suite"}).code == 2);

    // parallel workers leave the report byte-identical
    auto serial = run({"verify", "thm-exceptions", "--l-max", "6", "--n-max", "60"}, true);
    auto parallel =
        run({"verify", "thm-exceptions", "--l-max", "6", "--n-max", "60", "--jobs", "4"}, true);
    CHECK(serial.code == 0);
    serial.report.erase("timing_ms");
    parallel.report.erase("timing_ms");
    serial.report["parameters"].erase("jobs");
    parallel.report["parameters"].erase("jobs");
    CHECK(serial.report == parallel.report);
}

TEST_CASE("table-c verification reports the known exception") {
    auto r = run({"verify", "table-c", "--n-max", "40"}, true);
    CHECK(r.code == 0);
    bool found = false;
    for (auto& rec : r.report["results"]) {
        std::string payload = rec.value("payload", "");
        if (payload.find("l=6 (1,-1)") != std::string::npos) {
            found = true;
            CHECK(rec["status"] == "ok");
            CHECK(rec.value("note", "").find("{5,}") != std::string::npos);
        }
    }
    CHECK(found);
}

TEST_CASE("export command") {
    auto path = std::string("table_a_") + std::to_string(rand()) + ".csv";
    auto r = run({"export", "table-a", "--csv", path});
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,kind,P,Q,descriptor");
    std::string line;
    std::size_t rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows >= 39);
    std::remove(path.c_str());

    path = std::string("table_b_") + std::to_string(rand()) + ".csv";
    r = run({"export", "table-b", "--csv", path});
    CHECK(r.code == 0);
    std::ifstream inb(path);
    std::getline(inb, header);
    CHECK(header == "P,Q,l,p,rho");
    std::remove(path.c_str());

    CHECK(run({"export", "table-x", "--csv", "x.csv"}).code == 2);
}
