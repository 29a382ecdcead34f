#pragma once

// Job files and reports for the rspan command-line tool.
//
// A job is {"version": 1, "command": <name>, "payload": {...}}. Integers may be
// JSON integers or decimal strings. Reports are deterministic functions of the
// job and the overrides; wall time is never part of a report.

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace rspan::jobs {

struct Overrides {
    unsigned threads = 1;
    std::optional<unsigned> q_max;
    std::optional<unsigned> k_max;
};

/// Raised for schema violations and unreadable input.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_validation = 2;
inline constexpr int exit_breach = 3;

nlohmann::json parse_job_file(const std::string& path);

/// Validates and executes a job. Throws ValidationError or rspan::Error.
nlohmann::json run(const nlohmann::json& job, const Overrides& overrides);

/// Runs a job and folds failures into an error report; returns the exit code.
int run_to_report(const nlohmann::json& job, const Overrides& overrides, nlohmann::json& report);

/// Serialized report, newline-terminated.
std::string serialize(const nlohmann::json& report);

} // namespace rspan::jobs
