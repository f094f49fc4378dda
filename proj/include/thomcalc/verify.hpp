#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "thomcalc/polynomial_io.hpp"
#include "thomcalc/residue.hpp"
#include "thomcalc/thom.hpp"

namespace thomcalc {

struct Check {
  std::string id;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  bool ok() const;
  int exit_code() const { return ok() ? 0 : 1; }
};

struct VerifyOptions {
  std::uint64_t seed = 0;  // resolved by the caller; 0 here means the default seed
  QhatRegistry registry;
};

const std::vector<std::string>& verify_suites();
// Throws PreconditionError for an unknown suite name.
VerifyReport run_verify(const std::string& suite, const VerifyOptions& options = {});

std::string to_text(const VerifyReport& report);
json to_json(const VerifyReport& report);

// Residue problems exercised by the robustness checks, with labels.
std::vector<std::pair<std::string, ResidueProblem>> engine_suite_problems();
// Single-variable problems with distinct simple poles.
std::vector<std::pair<std::string, ResidueProblem>> single_variable_problems();
// Runs the exact pole-sum backend on a one-variable problem.
Polynomial exact_backend(const ResidueProblem& p);

}  // namespace thomcalc
