#ifndef FINTOP_SUITES_HPP
#define FINTOP_SUITES_HPP

#include <string>
#include <vector>

#include "fintop/report.hpp"
#include "fintop/space.hpp"

namespace fintop {

struct SuiteOptions {
  int n_max = 0;  // 0 means the suite default
  int bound = 0;  // 0 means the suite default (pushout/absolute-closure bound)
  Budget budget;
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

// Re-runs the named check against a serialized witness; returns true when the
// recorded failure reproduces.
bool replay_witness(const std::string& check_id, const std::string& witness_text);

}  // namespace fintop

#endif
