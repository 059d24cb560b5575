#include "symkit/report.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace symkit {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::partial:
      return "PARTIAL";
    case Status::fail:
    default:
      return "FAIL";
  }
}

Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::pass;
  if (s == "PARTIAL") return Status::partial;
  if (s == "FAIL") return Status::fail;
  throw std::invalid_argument("unknown status '" + s + "'");
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (c.status != Status::pass) return false;
  return true;
}

void to_json(nlohmann::json& j, const Check& c) {
  j = {{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"witness", c.witness},
       {"seconds", c.seconds}};
}

void from_json(const nlohmann::json& j, Check& c) {
  c.id = j.at("id").get<std::string>();
  c.status = status_from_string(j.at("status").get<std::string>());
  c.detail = j.value("detail", "");
  c.witness = j.value("witness", nlohmann::json::object());
  c.seconds = j.value("seconds", 0.0);
}

void to_json(nlohmann::json& j, const VerificationReport& r) {
  j = {{"id", r.id}, {"checks", r.checks}, {"seed", r.seed}, {"version", r.version}};
}

void from_json(const nlohmann::json& j, VerificationReport& r) {
  r.id = j.at("id").get<std::string>();
  r.checks = j.at("checks").get<std::vector<Check>>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.version = j.at("version").get<std::string>();
}

std::string emit_report(const VerificationReport& report, Format format) {
  if (format == Format::json) return nlohmann::json(report).dump(2) + "\n";
  std::ostringstream out;
  out << report.id << "  (seed " << report.seed << ", symkit " << report.version << ")\n";
  for (const auto& c : report.checks) {
    out << std::left << std::setw(8) << to_string(c.status) << std::setw(34) << c.id << ' ' << std::fixed
        << std::setprecision(3) << c.seconds << "s";
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  return out.str();
}

VerificationReport parse_report(const std::string& json_text) {
  return nlohmann::json::parse(json_text).get<VerificationReport>();
}

Check timed_check(const std::string& id, const std::function<void(Check&)>& body) {
  Check c;
  c.id = id;
  auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = Status::fail;
    c.detail = e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::string tool_version() { return SYMKIT_VERSION; }

}  // namespace symkit
