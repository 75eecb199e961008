#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qnd {

  // Exit codes: 0 success / claim holds, 1 claim fails or counterexample
  // found, 2 usage or input error. args[0] is the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  struct ExampleCheck {
    std::string name;
    bool        ok;
    std::string detail;
  };

  // The two worked counterexamples (split epimorphism kernel pair and the
  // failure of left cancellation for E1), checked step by step.
  std::vector<ExampleCheck> worked_example_checks();

}  // namespace qnd
