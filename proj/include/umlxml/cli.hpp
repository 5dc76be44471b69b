#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umlxml::cli {

// Process exit codes; stable across releases.
enum class ExitStatus : int {
    Success = 0,
    DiagramInvalid = 1,   // diagram (or checked document) has validation errors
    ParseError = 2,       // codification or XML could not be read
    IoError = 3,
    OutputInvalid = 4,    // generated document failed its own schema check
    Usage = 5,
};

// Runs one command line (args excludes the program name). XML and schema
// output go to the named files, or to `out` for "-"; diagnostics go to `err`.
ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umlxml::cli
