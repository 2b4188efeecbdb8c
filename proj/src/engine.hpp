#pragma once

#include <string>

#include "json_io.hpp"

namespace higgslab {

struct RunResult {
  Json report;
  int exit_code = 0;  // 0 pass, 1 verification failed, 2 input error
};

// Dispatches a CLI command against a parsed config. Reports are byte
// deterministic for a fixed config + seed; parallel fans out independent
// items (census rows, selftest suites) with canonical result ordering.
RunResult run_command(const std::string& command, const Json& config,
                      bool parallel);

// Same, from raw JSON text; malformed text yields an exit 2 report.
RunResult run_command_text(const std::string& command,
                           const std::string& config_text, bool parallel);

const char* engine_version();

}  // namespace higgslab
