#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace g2 {

struct RunConfig {
  uint64_t seed = 42;
  int samples = 1000;
  bool float_mode = false;
  long range = 9;
  bool strict = false;
};

struct CheckResult {
  std::string id;
  std::string statement;
  std::string residual;  // largest relative residual seen, "0" when exact
  int samples_run = 0;   // random samples drawn; 0 for structural checks
  bool pass = false;
};

struct Note {
  std::string id;
  std::string text;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckResult> checks;
  std::vector<Note> notes;
  int passed = 0;
  bool all_pass = false;
};

// Runs the whole identity catalog; exact rational arithmetic by default,
// binary64 with relative tolerance 1e-9 when cfg.float_mode is set.
VerificationReport run_verify(const RunConfig& cfg);

std::string report_to_json(const VerificationReport& rep);
std::string report_to_markdown(const VerificationReport& rep);

}  // namespace g2
