#pragma once

#include <string>
#include <vector>

namespace qlorentz {

/// flagged marks a known discrepancy in the source formulas that is
/// reproduced on purpose; it does not fail a run.
enum class Status { kPass, kFail, kFlagged };

std::string to_string(Status s);

struct ReportEntry {
  std::string name;
  std::string anchor;   // which relation family the entry belongs to
  std::string backend;  // symbolic, exact, float
  std::string block;    // "-" when not block based
  std::string p;        // "generic" for symbolic checks
  Status status = Status::kPass;
  std::string residual;
};

struct VerificationReport {
  std::vector<ReportEntry> entries;

  void add(ReportEntry e) { entries.push_back(std::move(e)); }
  void append(const VerificationReport& o) { entries.insert(entries.end(), o.entries.begin(), o.entries.end()); }
  int count(Status s) const;
  bool ok() const { return count(Status::kFail) == 0; }
  /// Entries whose name starts with prefix.
  VerificationReport filter(const std::string& prefix) const;
};

}  // namespace qlorentz
