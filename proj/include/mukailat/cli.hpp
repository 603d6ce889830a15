#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace mukailat::cli {

enum class Status { Ok = 0, NotFound = 1, InvalidInput = 2 };

struct CommandOutcome {
  Status status = Status::Ok;
  nlohmann::json payload;
  std::string output;  // what goes to stdout
  std::string error;   // what goes to stderr

  int exit_code() const { return static_cast<int>(status); }
};

/// Runs one command line (without the program name). Never throws; bad input
/// comes back as Status::InvalidInput.
CommandOutcome run(const std::vector<std::string>& args);

}  // namespace mukailat::cli
