#pragma once

#include <string>
#include <vector>

namespace lpwb {

// Verification outcome: a sorted list of violated instances plus notes
// (for example an explicitly reported budget truncation).
struct Report {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool truncated = false;

  bool ok() const { return violations.empty(); }
  void violation(std::string v) { violations.push_back(std::move(v)); }
};

} // namespace lpwb
