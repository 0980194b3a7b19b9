#pragma once

// Verification batteries shared by the command-line driver.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace oncgl2 {

struct CheckResult {
  std::string name;
  std::size_t bound = 0;
  bool pass = true;
  std::size_t cases = 0;
  std::vector<std::string> failures;
  double seconds = 0;
};

/// confluence, hopf, layers, filtration, standard-hom, semi, induced, simples, sl2, poset.
const std::vector<std::string>& check_suite_names();
std::size_t default_bound(const std::string& suite);

/// Throws std::invalid_argument for unknown suites.
CheckResult run_check(const std::string& suite, std::optional<std::size_t> bound = std::nullopt);

}  // namespace oncgl2
