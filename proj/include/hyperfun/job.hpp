// Job runner behind the command-line tool: parses a JSON job description,
// evaluates it (optionally across worker threads), and writes CSV or JSON
// results deterministically.
#pragma once

#include "hyperfun/verify.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>

namespace hyperfun {

// Supported commands: eval-ha, eval-fa, eval-q, verify-pde, verify-system,
// verify-decomposition, singularity-scan.
bool is_known_command(const std::string& command);

// Runs one job. Results go to `output_override` when nonempty, else to the
// config's "output" path, else to `fallback_out`. Exceptions are reported as
// a one-line JSON record on `err`. Returns the process exit code: 0 success,
// 2 invalid input, 3 numerical failure (including verify thresholds).
int run_job(const std::string& command, const nlohmann::json& config,
            const std::string& output_override, std::ostream& fallback_out,
            std::ostream& err);

}  // namespace hyperfun
