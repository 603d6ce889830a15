#pragma once

#include <string>
#include <vector>

namespace mukailat::sweep {

/// One exhaustive (or seeded randomized) verification suite.
struct SuiteResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteInfo {
  int id;
  std::string name;
};

const std::vector<SuiteInfo>& suites();

/// Runs the selected suites (all when `ids` is empty) on up to `threads`
/// workers; threads <= 1 runs sequentially. Results are sorted by id and do
/// not depend on the thread count. Throws std::invalid_argument on an unknown
/// id.
std::vector<SuiteResult> run(const std::vector<int>& ids, unsigned threads);

/// Thread cap from MUKAILAT_THREADS (unset, empty or 0 means sequential).
unsigned threads_from_env();

}  // namespace mukailat::sweep
