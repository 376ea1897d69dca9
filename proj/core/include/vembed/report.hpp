#pragma once

#include <string>
#include <utility>
#include <vector>

namespace vembed {

enum class Status { exact, window_verified, lower_bound, paper_asserted, failed };

std::string status_name(Status s);

struct Fact {
  std::string claim;
  Status status;
  long long window = -1;  // set for window-verified facts
  std::string witness;
};

/// A command run: echoed inputs plus one status-carrying line per claim.
/// The machine rendering is byte-stable for identical inputs (the elapsed
/// time field is normalized there; the text rendering shows the real one).
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<Fact> facts;
  long long ms = 0;

  void add(std::string claim, Status status, std::string witness = "",
           long long window = -1);
  bool any_failed() const;

  std::string to_text() const;
  std::string to_machine() const;  // JSON with keys command, inputs, facts, ms
};

}  // namespace vembed
