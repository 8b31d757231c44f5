#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "reesalg/error.hpp"
#include "reesalg/instance.hpp"

namespace reesalg {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  // Timings and tool metadata; off for byte-stable output.
  bool meta = true;
  // Degree for the `power` command.
  int power_n = 1;
};

struct CommandResult {
  nlohmann::ordered_json json;
  // Set instead of json by `power`.
  std::string csv;
  bool violation = false;
};

// power, depth-seq, ass-seq, spread, dim, burch, grade, cm-equality,
// cowsik-nori, report
const std::vector<std::string>& command_names();

// Runs one command. Analyses that do not apply to the instance come back as
// UNSUPPORTED markers; other failures propagate as reesalg::Error.
CommandResult run_command(const Instance& inst, const std::string& command, const RunOptions& options = {});

nlohmann::ordered_json unsupported_marker(const std::string& reason);
nlohmann::ordered_json error_json(const Error& err);
// 2 parse, 3 validation/domain/unsupported, 4 resource, 5 internal.
int exit_code(ErrorCode code);

}  // namespace reesalg
