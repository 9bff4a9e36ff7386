#pragma once

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nodal::cli {

inline constexpr const char *kToolVersion = "0.1.0";

enum class Status { pass, fail, skip };
std::string status_str(Status s);

struct Check {
  std::string id;
  std::string anchor; // reported as "paper_ref"
  Status status = Status::skip;
  std::string summary;
  nlohmann::json details = nlohmann::json::object();
  double elapsed_ms = 0;
};

struct Report {
  std::uint64_t seed = 0;
  bool timing = true;
  std::vector<Check> checks;
  [[nodiscard]] bool failed() const;
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Runs body, timing it; exceptions become failed checks carrying the message.
Check run_check(std::string id, std::string anchor, const std::function<void(Check &)> &body);

} // namespace nodal::cli
