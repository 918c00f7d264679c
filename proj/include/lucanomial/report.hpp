#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "lucanomial/verify.hpp"

namespace lucanomial::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitRefuted = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Machine-readable outcome of one CLI invocation. Serialization is
/// deterministic: keys are emitted in sorted order, big integers as decimal
/// strings; only timing_ms varies between identical runs.
struct Report {
    std::string command;
    std::map<std::string, std::string> parameters;
    nlohmann::json results = nlohmann::json::array();
    std::string status = "pass";  // pass, fail or partial
    std::int64_t timing_ms = 0;

    void add_result(nlohmann::json record);
    void absorb(const verify::Suite& suite);
    /// pass -> 0, fail -> 1; partial counts as pass for the exit code.
    int exit_code() const;
    nlohmann::json to_json() const;
    void write_json(const std::string& path) const;
};

}  // namespace lucanomial::cli
