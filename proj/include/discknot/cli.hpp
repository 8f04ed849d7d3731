#pragma once

// Command-line front end: invariants | branches | verify | present.

#include "discknot/pipeline.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace discknot::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kInconclusive = 3,
};

const char* tool_version();

/// Runs the tool on args (without the program name). Reports go to out, or
/// to the --out file; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// The JSON form of one analysis run, as embedded in branches/verify results.
std::string report_json(const pipeline::DiscriminantReport& r, int indent = 2);

}  // namespace discknot::cli
