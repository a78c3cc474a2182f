#pragma once

// Check registry over a workspace. Every object section has a list of
// suites; each applicable suite yields one named check "<suite>:<object>".
// Relations between objects (composable cells, comodules over a cell's
// target) yield checks named by the participants joined with '/'.

#include "coring/workspace.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coring {

struct CheckCase {
  std::string name;
  std::function<Report()> run;
};

/// Every applicable check, sorted by name. The workspace must outlive the cases.
std::vector<CheckCase> collect_checks(const Workspace& w);

/// The adjunction suites for sigma with its own dual basis family.
std::vector<CheckCase> adjunction_checks(const std::string& name, const AdjunctionEntry& entry);

class SelectionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Shell-style patterns, any of which may match. No patterns selects all.
/// Throws SelectionError for an empty or malformed pattern or an empty result.
std::vector<CheckCase> select_checks(const std::vector<CheckCase>& all, const std::vector<std::string>& patterns);
void validate_pattern(const std::string& pattern);

struct CheckOutcome {
  std::string name;
  Report report;
};

/// Runs on up to `jobs` threads; outcomes keep the order of `cases`.
std::vector<CheckOutcome> run_checks(const std::vector<CheckCase>& cases, std::size_t jobs = 1);

struct FormatOptions {
  bool json = false;
  bool verbose = false;
  bool timing = false;
};

std::string format_outcomes(const std::vector<CheckOutcome>& outcomes, const FormatOptions& options);

/// 0 when everything passed, 1 otherwise.
int exit_code(const std::vector<CheckOutcome>& outcomes);

}  // namespace coring
