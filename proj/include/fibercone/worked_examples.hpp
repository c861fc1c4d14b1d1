#pragma once

#include <string>
#include <vector>

namespace fibercone {

struct ExampleResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Built-in regression suite over the worked examples for every family.
std::vector<ExampleResult> run_worked_examples();

}  // namespace fibercone
