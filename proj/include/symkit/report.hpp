#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace symkit {

enum class Status { pass, fail, partial };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct Check {
  std::string id;
  Status status = Status::fail;
  std::string detail;
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0.0;

  friend bool operator==(const Check&, const Check&) = default;
};

struct VerificationReport {
  std::string id;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  std::string version;

  bool all_pass() const;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

void to_json(nlohmann::json& j, const Check& c);
void from_json(const nlohmann::json& j, Check& c);
void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

enum class Format { human, json };

std::string emit_report(const VerificationReport& report, Format format);
VerificationReport parse_report(const std::string& json_text);

/// Runs `body`, stamping the wall time. An exception turns into a FAIL whose
/// detail is the message.
Check timed_check(const std::string& id, const std::function<void(Check&)>& body);

std::string tool_version();

}  // namespace symkit
