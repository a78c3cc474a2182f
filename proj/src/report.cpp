#include "coring/report.hpp"

#include <sstream>

namespace coring {

bool Report::failed_law(const std::string& law_fragment) const {
  for (const auto& f : failures_)
    if (f.law.find(law_fragment) != std::string::npos) return true;
  return false;
}

void Report::fail(std::string law, std::string witness) {
  failures_.push_back({std::move(law), std::move(witness)});
}

void Report::absorb(const Report& other, const std::string& prefix) {
  for (const auto& f : other.failures_)
    failures_.push_back({prefix.empty() ? f.law : prefix + ": " + f.law, f.witness});
}

std::string Report::summary() const {
  std::ostringstream out;
  out << (passed() ? "PASS " : "FAIL ") << check_;
  if (!instance_.empty()) out << " [" << instance_ << "]";
  if (!passed()) {
    out << " (" << failures_.size() << " failure" << (failures_.size() == 1 ? "" : "s") << ")";
    std::size_t shown = 0;
    for (const auto& f : failures_) {
      if (shown++ == kShownFailures) break;
      out << "\n    " << f.law << ": " << f.witness;
    }
  }
  return out.str();
}

}  // namespace coring
