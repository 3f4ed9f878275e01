// Batch job dispatch: one JSON request in, one JSON report out.  The
// report embeds a hash of the request, the seed when randomness is
// involved, and the library version, so identical configuration yields
// identical output up to the generated_at timestamp.
#pragma once

#include <string>

namespace pontra::commands {

// Mirrors the process exit codes of the command-line front end.
enum Status : int {
    kOk = 0,
    kIoError = 2,
    kValidationError = 3,
    kInternalError = 4,
};

struct JobOutcome {
    int status = kOk;
    std::string report;  // JSON text when status == kOk
    std::string error;   // human-readable message otherwise
};

JobOutcome run_job(const std::string& request_json);

std::string version();

}  // namespace pontra::commands
