#pragma once

// The fixture expectation table, runnable from the CLI and the acceptance
// test. Everything runs over Q.

#include <cstdint>
#include <string>
#include <vector>

namespace taureg {

struct PaperOptions {
  int trials = 16;
  std::uint64_t seed = 42;
  int cap = 10;
  int property_modules = 240;  ///< random modules for criterion 8
  int property_complexes = 120;
  std::vector<int> only;       ///< criterion ids to run; empty runs all
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit = 0;  ///< seconds allowed
};

std::vector<CriterionResult> run_paper_examples(const PaperOptions& opt = {});

}  // namespace taureg
