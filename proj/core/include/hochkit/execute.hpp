#pragma once

#include "hochkit/jobspec.hpp"

#include <string>

namespace hochkit {

struct ExecResult {
    int code = 0; // 0 success, 1 mathematical verdict failure, 2 input error
    std::string text;
};

/// Run a validated job; output is byte-deterministic for a fixed job.
ExecResult execute(const JobSpec& job);

/// Parse and run; parse/validation problems come back as code 2 with the
/// diagnostic in `text`.
ExecResult execute_spec_text(const std::string& spec_text, const std::string& format_override = "");

} // namespace hochkit
