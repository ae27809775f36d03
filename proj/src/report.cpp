#include "gwo/report.hpp"

#include <algorithm>
#include <sstream>

namespace gwo {

void ValidationReport::mark_run(const std::string& check) {
  if (std::find(checks_run_.begin(), checks_run_.end(), check) ==
      checks_run_.end()) {
    checks_run_.push_back(check);
  }
}

void ValidationReport::add(CheckFailure failure) {
  mark_run(failure.check);
  if (count_for(failure.check) >= kMaxPerCheck) return;
  failures_.push_back(std::move(failure));
}

bool ValidationReport::check_passed(const std::string& check) const {
  return count_for(check) == 0;
}

int ValidationReport::count_for(const std::string& check) const {
  int n = 0;
  for (const auto& f : failures_)
    if (f.check == check) ++n;
  return n;
}

void ValidationReport::absorb(const ValidationReport& sub,
                              const std::string& prefix) {
  const std::string head = prefix.empty() ? "" : prefix + ".";
  for (const auto& c : sub.checks_run_) mark_run(head + c);
  for (auto f : sub.failures_) {
    f.check = head + f.check;
    if (count_for(f.check) < kMaxPerCheck) failures_.push_back(std::move(f));
  }
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  if (ok()) {
    out << "ok (" << checks_run_.size() << " checks)";
    return out.str();
  }
  out << failures_.size() << " violation(s):";
  for (const auto& f : failures_) {
    out << "\n  " << f.check;
    if (!f.op.empty()) out << " [" << f.op << "]";
    out << " at (";
    for (size_t i = 0; i < f.tuple.size(); ++i) {
      if (i) out << ",";
      out << f.tuple[i];
    }
    out << "): " << f.lhs << " != " << f.rhs;
    if (!f.note.empty()) out << "  " << f.note;
  }
  return out.str();
}

}  // namespace gwo
