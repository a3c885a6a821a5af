#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gaingraph/theorem_lab.hpp"

namespace gaingraph {

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitTheoremFailure = 1;
inline constexpr int kExitUsage = 2;

/// Renders a report as JSON: {"graph_summary", "checks": [{check_id, status, details}]}.
std::string report_to_json(const VerificationReport& report, int indent = 2);
/// Human-readable aligned table.
std::string report_to_text(const VerificationReport& report);

/// Dispatches a command line (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaingraph
