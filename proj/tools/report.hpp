#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqroot/error.hpp"

namespace sqroot::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    exit_ok = 0,            ///< success / YES
    exit_failed = 1,        ///< a requested verification failed
    exit_error = 2,         ///< bad input or usage
    exit_no = 10,           ///< decision procedure answered NO
    exit_inconclusive = 20, ///< budget exhausted before a verdict
};

struct StageResult {
    std::string name;
    bool ok = true;
    double seconds = 0.0;
    nlohmann::json details = nlohmann::json::object();
    std::string error;
};

/// Stage-by-stage record of one CLI run. The JSON layout is versioned by
/// `schema_version`; fields may be added but not renamed or removed.
struct PipelineReport {
    static constexpr int schema_version = 1;

    std::string command;
    std::vector<StageResult> stages;
    int exit_status = exit_ok;

    nlohmann::json to_json() const;
    std::string to_text() const;

    /// Runs `body(details)` as a timed stage. A false return or a thrown
    /// sqroot::Error marks the stage failed; the caller decides whether to
    /// continue.
    template <typename Body>
    bool stage(const std::string& name, Body&& body)
    {
        StageResult result;
        result.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            result.ok = body(result.details);
        }
        catch (const Error& e) {
            result.ok = false;
            result.error = e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        stages.push_back(std::move(result));
        return stages.back().ok;
    }

    const StageResult* find(const std::string& name) const;
};

} // namespace sqroot::cli
