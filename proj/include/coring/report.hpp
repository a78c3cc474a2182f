#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace coring {

struct Failure {
  std::string law;
  std::string witness;
};

/// Outcome of one law check. Failures are data, never exceptions.
class Report {
 public:
  Report() = default;
  Report(std::string check, std::string instance)
      : check_(std::move(check)), instance_(std::move(instance)) {}

  const std::string& check() const { return check_; }
  const std::string& instance() const { return instance_; }
  void set_instance(std::string instance) { instance_ = std::move(instance); }

  bool passed() const { return failures_.empty(); }
  std::size_t total_failures() const { return failures_.size(); }
  const std::vector<Failure>& failures() const { return failures_; }
  /// True iff some failure's law contains `law_fragment`.
  bool failed_law(const std::string& law_fragment) const;

  void fail(std::string law, std::string witness);
  /// Appends all failures of `other`, prefixing laws with `prefix` if given.
  void absorb(const Report& other, const std::string& prefix = {});

  double timing_ms() const { return timing_ms_; }
  void set_timing_ms(double ms) { timing_ms_ = ms; }

  /// Number of failures shown in summaries unless verbose output is requested.
  static constexpr std::size_t kShownFailures = 10;

  std::string summary() const;

 private:
  std::string check_;
  std::string instance_;
  std::vector<Failure> failures_;
  double timing_ms_ = 0;
};

}  // namespace coring
