#include "vembed/report.hpp"

#include <algorithm>

#include <fmt/format.h>
#include <json.hpp>

namespace vembed {

std::string status_name(Status s) {
  switch (s) {
    case Status::exact: return "exact";
    case Status::window_verified: return "window-verified";
    case Status::lower_bound: return "lower-bound";
    case Status::paper_asserted: return "paper-asserted";
    case Status::failed: return "failed";
  }
  return "?";
}

void Report::add(std::string claim, Status status, std::string witness,
                 long long window) {
  facts.push_back(Fact{std::move(claim), status, window, std::move(witness)});
}

bool Report::any_failed() const {
  return std::any_of(facts.begin(), facts.end(),
                     [](const Fact& f) { return f.status == Status::failed; });
}

std::string Report::to_text() const {
  std::string out = fmt::format("command: {}\n", command);
  for (const auto& [key, value] : inputs) {
    out += fmt::format("input {}: {}\n", key, value);
  }
  for (const Fact& f : facts) {
    std::string status = status_name(f.status);
    if (f.status == Status::window_verified && f.window >= 0) {
      status += fmt::format("({})", f.window);
    }
    out += fmt::format("fact: {} | status: {}", f.claim, status);
    if (!f.witness.empty()) out += fmt::format(" | witness: {}", f.witness);
    out += '\n';
  }
  out += fmt::format("ms: {}\n", ms);
  return out;
}

std::string Report::to_machine() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json in = nlohmann::ordered_json::object();
  for (const auto& [key, value] : inputs) in[key] = value;
  j["inputs"] = std::move(in);
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (const Fact& f : facts) {
    nlohmann::ordered_json jf;
    jf["claim"] = f.claim;
    jf["status"] = status_name(f.status);
    if (f.status == Status::window_verified && f.window >= 0) jf["window"] = f.window;
    jf["witness"] = f.witness;
    all.push_back(std::move(jf));
  }
  j["facts"] = std::move(all);
  j["ms"] = 0;  // kept byte-stable across runs
  return j.dump(2) + "\n";
}

}  // namespace vembed
