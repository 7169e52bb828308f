#pragma once

#include <string>
#include <vector>

#include "matchmonoid/json_io.hpp"

namespace matchmonoid {

// One frozen-expectation check. `expected` is a constant baked into the
// binary; `computed` is rebuilt from scratch on every run; pass means the
// two JSON values are identical.
struct ReproReport {
  std::string claim;
  std::string source;  // one-line description of what the expectation pins
  ojson expected;
  ojson computed;
  bool pass = false;
  double seconds = 0.0;
  std::vector<std::string> notes;
};

ojson repro_report_json(const ReproReport& r);

// All known claim ids, in execution order for "all".
const std::vector<std::string>& repro_claim_ids();

// Runs one claim, or every claim for "all" (UnknownClaim otherwise). For the
// two projection-table claims, n > 0 selects a single table size; the
// default covers sizes 1..4.
std::vector<ReproReport> reproduce(const std::string& claim, int n = -1);

}  // namespace matchmonoid
