#include "doctest.h"
#include "hecke/errors.hpp"
#include "hecke/suites.hpp"

using namespace hecke;

namespace {

SuiteOptions small_opt(int max_size, int jobs = 2) {
  SuiteOptions o;
  o.max_size = max_size;
  o.seed = 1;
  o.jobs = jobs;
  o.samples = 5;
  return o;
}

bool same_report(const Report& a, const Report& b) {
  if (a.suite != b.suite || a.claim != b.claim || a.params != b.params) return false;
  if (a.cases.size() != b.cases.size()) return false;
  for (size_t i = 0; i < a.cases.size(); ++i)
    if (a.cases[i].id != b.cases[i].id || a.cases[i].pass != b.cases[i].pass ||
        a.cases[i].detail != b.cases[i].detail)
      return false;
  return true;
}

}  // namespace

TEST_CASE("small runs of every suite pass") {
  for (const SuiteInfo& info : suite_catalog()) {
    CAPTURE(info.name);
    Report r = run_suite(info.name, small_opt(3));
    CHECK(r.pass());
    CHECK(!r.cases.empty());
  }
}

TEST_CASE("suite selection and caps") {
  CHECK_THROWS_AS(run_suite("nonsense", small_opt(3)), ParseError);
  SuiteOptions over = small_opt(9);
  CHECK_THROWS_AS(run_suite("theorem1", over), PreconditionError);
  CHECK_THROWS_AS(run_suite("eq4", over), PreconditionError);
  CHECK_NOTHROW(run_suite("hookdim", small_opt(8)));
}

TEST_CASE("reports are deterministic for a fixed seed, independent of jobs") {
  for (const std::string name : {"theorem1", "eq4", "yangbaxter"}) {
    SuiteOptions serial = small_opt(3, 1);
    SuiteOptions parallel = small_opt(3, 4);
    Report a = run_suite(name, serial);
    Report b = run_suite(name, parallel);
    Report c = run_suite(name, serial);
    CHECK(same_report(a, b));
    CHECK(same_report(a, c));
  }
  // A different seed moves the evaluation points.
  SuiteOptions other = small_opt(3);
  other.seed = 99;
  CHECK(generic_points(3, 3, 1) != generic_points(3, 3, 99));
}

TEST_CASE("symbolic mode agrees with point mode on small sizes") {
  SuiteOptions sym = small_opt(3);
  sym.symbolic = true;
  CHECK(run_suite("theorem1", sym).pass());
  CHECK(run_suite("theorem2", sym).pass());
  SuiteOptions too_big = small_opt(6);
  too_big.symbolic = true;
  CHECK_THROWS_AS(run_suite("theorem1", too_big), PreconditionError);
}

TEST_CASE("full-depth formula suites") {
  CHECK(run_suite("rtheta", small_opt(8, 4)).pass());
  CHECK(run_suite("prop7", small_opt(8, 4)).pass());
}
