#include "nodal/cli/report.hpp"

#include <chrono>
#include <exception>

namespace nodal::cli {

std::string status_str(Status s) {
  switch (s) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skip: return "skip";
  }
  return "?";
}

bool Report::failed() const {
  for (const auto &c : checks)
    if (c.status == Status::fail) return true;
  return false;
}

nlohmann::json Report::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto &c : checks) {
    nlohmann::json j{{"id", c.id}, {"paper_ref", c.anchor}, {"status", status_str(c.status)},
                     {"summary", c.summary}, {"details", c.details}};
    if (timing) j["elapsed_ms"] = std::to_string(static_cast<long long>(c.elapsed_ms));
    cs.push_back(std::move(j));
  }
  return {{"tool_version", kToolVersion}, {"seed", std::to_string(seed)}, {"checks", cs}};
}

Check run_check(std::string id, std::string anchor, const std::function<void(Check &)> &body) {
  Check c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception &e) {
    c.status = Status::fail;
    c.details["error"] = e.what();
    if (c.summary.empty()) c.summary = e.what();
  }
  c.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

} // namespace nodal::cli
