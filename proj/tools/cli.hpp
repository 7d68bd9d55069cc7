#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fgring/spectrum.hpp"
#include "json.hpp"

namespace fgring::cli {

enum ExitCode { kOk = 0, kUsage = 1, kRefused = 2, kInvariant = 3 };

/// Report fields with stable key order.
nlohmann::ordered_json report_json(const ClassificationReport& report);
nlohmann::ordered_json prime_json(const PrimeCertificate& prime);

/// Runs one invocation (args exclude the program name). JSON goes to `out`,
/// diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fgring::cli
