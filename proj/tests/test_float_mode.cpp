#include <doctest.h>

#include <set>

#include "g2/verify.hpp"

using namespace g2;

TEST_CASE("float mode passes the catalog and matches the exact pass set") {
  RunConfig cfg;
  cfg.samples = 30;
  auto exact = run_verify(cfg);
  cfg.float_mode = true;
  auto fl = run_verify(cfg);

  CHECK(exact.all_pass);
  CHECK(fl.all_pass);
  REQUIRE(exact.checks.size() == fl.checks.size());
  for (size_t i = 0; i < exact.checks.size(); ++i) {
    CHECK(exact.checks[i].id == fl.checks[i].id);
    CHECK(exact.checks[i].pass == fl.checks[i].pass);
  }

  std::set<std::string> ids;
  for (const auto& c : exact.checks) ids.insert(c.id);
  CHECK(ids.size() == exact.checks.size());  // ids are unique
  CHECK(report_to_json(exact) == report_to_json(run_verify(RunConfig{.samples = 30})));
}
