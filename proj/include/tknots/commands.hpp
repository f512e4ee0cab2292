#pragma once

#include <optional>
#include <string>

#include "tknots/json_io.hpp"

namespace tknots {

/// One CLI invocation. Structure and diagram come from files unless the
/// inline documents are set (the Python bindings pass them directly).
struct RunConfig {
  std::string subcommand;
  std::string structure_path, diagram_path;
  std::optional<Json> structure, diagram;
  std::string theory = "sb";
  int degree = 2;
  int64_t modulus = 0;
  std::string cocycle;      // mochizuki:<n> or a cochain file
  std::optional<Json> cocycle_json;
  std::string form = "sb";  // mochizuki only
  int n = 3;                // mochizuki only
  bool transported = false;
  bool classes = true;
  std::string output;
  int jobs = 1;
};

struct Report {
  Json json;
  int status = 0;  // 0 ok, 1 a checked property failed, 2 bad input
};

/// Runs one subcommand. Library errors become an error report, never an exception.
Report execute(const RunConfig& cfg);

}  // namespace tknots
