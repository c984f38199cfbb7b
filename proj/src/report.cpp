#include "qlorentz/report.hpp"

#include <algorithm>

namespace qlorentz {

std::string to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kFlagged: return "flagged";
  }
  return "?";
}

int VerificationReport::count(Status s) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

VerificationReport VerificationReport::filter(const std::string& prefix) const {
  VerificationReport out;
  for (const auto& e : entries)
    if (e.name.compare(0, prefix.size(), prefix) == 0) out.add(e);
  return out;
}

}  // namespace qlorentz
