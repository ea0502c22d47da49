#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hecke {

struct CaseResult {
  std::string id;
  bool pass = false;
  std::string detail;  // first failing coefficient or mismatch description
};

// Outcome of one verification suite.  Deterministic for fixed seed and
// flags; wall-clock timing is reported on the human channel only so the
// machine-readable report stays byte-identical across runs.
struct Report {
  std::string suite;
  std::string claim;  // the verified statement with its section number
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CaseResult> cases;

  int failures() const {
    int n = 0;
    for (const CaseResult& c : cases)
      if (!c.pass) ++n;
    return n;
  }
  bool pass() const { return failures() == 0; }
};

}  // namespace hecke
