#pragma once

#include <string>
#include <vector>

#include "fibrecheck/power.hpp"
#include "fibrecheck/verticality.hpp"

namespace fibrecheck {

struct Report {
  Problem problem;
  WithinBlock order = WithinBlock::Grevlex;
  std::vector<Verdict> verdicts;
  bool trace = false;  // include per-power timings
};

std::string version_string();

std::string render_text(const Report& report);
// Deterministic unless trace is set: timings are reported as 0 otherwise.
std::string render_json(const Report& report);

}  // namespace fibrecheck
