#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gwo {

/// One concrete axiom violation: the check it belongs to, the element
/// tuple it was found at, and the two values that should have agreed.
struct CheckFailure {
  std::string check;        // axiom identifier, e.g. "algebra.add_assoc"
  std::string op;           // operation name when the axiom is per-op
  std::vector<int> tuple;   // element indices substituted into the axiom
  int lhs = 0;
  int rhs = 0;
  std::string note;

  bool operator==(const CheckFailure&) const = default;
};

/// Result of an exhaustive validation pass. `checks_run` lists every
/// axiom that was evaluated so reports can show per-check status; at
/// most kMaxPerCheck counterexamples are kept per axiom.
class ValidationReport {
 public:
  static constexpr int kMaxPerCheck = 10;

  void mark_run(const std::string& check);
  void add(CheckFailure failure);

  bool ok() const { return failures_.empty(); }
  bool check_passed(const std::string& check) const;
  int count_for(const std::string& check) const;

  const std::vector<std::string>& checks_run() const { return checks_run_; }
  const std::vector<CheckFailure>& failures() const { return failures_; }

  /// Prefixes every check id (run or failed) with `prefix` + "."; used
  /// when folding a component's report into a composite one.
  void absorb(const ValidationReport& sub, const std::string& prefix);

  std::string summary() const;

 private:
  std::vector<std::string> checks_run_;
  std::vector<CheckFailure> failures_;
};

}  // namespace gwo
