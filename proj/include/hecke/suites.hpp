#pragma once

#include <cstdint>

#include "hecke/rational.hpp"
#include "hecke/report.hpp"

namespace hecke {

struct SuiteOptions {
  int max_size = 0;  // 0 = the suite's default
  std::uint64_t seed = 1;
  int samples = 20;
  int jobs = 1;
  bool symbolic = false;  // RatFunc coefficients end to end (small sizes only)
};

struct SuiteInfo {
  std::string name;
  int default_max = 0;
  int hard_cap = 0;
  std::string claim;
};

const std::vector<SuiteInfo>& suite_catalog();

// Runs one named suite; throws ParseError for an unknown name and
// PreconditionError when max_size exceeds the suite's hard cap.
Report run_suite(const std::string& name, const SuiteOptions& opt);

// Every suite with its default parameters.
std::vector<Report> run_all(const SuiteOptions& opt);

// Seeded evaluation points u = P/Q with P prime and P > 2*n*Q: never an
// integer, clear of every denominator u + c - d and of all integer zeros
// and poles of the closed forms in range.
std::vector<Rational> generic_points(int n, int count, std::uint64_t seed);

}  // namespace hecke
