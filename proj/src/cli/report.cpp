#include "lucanomial/report.hpp"

#include <fstream>
#include <stdexcept>

namespace lucanomial::cli {

void Report::add_result(nlohmann::json record) {
    if (!record.contains("kind")) record["kind"] = "record";
    std::string s = record.value("status", "ok");
    if (s == "fail" && status != "fail") status = "fail";
    if (s == "skip" && status == "pass") status = "partial";
    results.push_back(std::move(record));
}

void Report::absorb(const verify::Suite& suite) {
    for (const auto& check : suite.checks) {
        nlohmann::json record = check.data;
        record["kind"] = check.kind;
        record["status"] = check.status;
        add_result(std::move(record));
    }
}

int Report::exit_code() const { return status == "fail" ? kExitRefuted : kExitPass; }

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["results"] = results;
    j["status"] = status;
    j["timing_ms"] = timing_ms;
    return j;
}

void Report::write_json(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write JSON report to " + path);
    out << to_json().dump(2) << "\n";
}

}  // namespace lucanomial::cli
