#include "rumin/report.hpp"

#include <algorithm>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

bool Report::all_pass() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) {
    return c.status == CheckRecord::Status::fail;
  });
}

std::string status_name(CheckRecord::Status s) {
  switch (s) {
    case CheckRecord::Status::pass:
      return "pass";
    case CheckRecord::Status::fail:
      return "fail";
    case CheckRecord::Status::vacuous:
      return "vacuous";
  }
  return "unknown";
}

CheckRecord::Status status_from_name(const std::string& name) {
  if (name == "pass") return CheckRecord::Status::pass;
  if (name == "fail") return CheckRecord::Status::fail;
  if (name == "vacuous") return CheckRecord::Status::vacuous;
  throw ParseError("unknown check status: " + name);
}

nlohmann::json report_to_json(const Report& report) {
  nlohmann::json doc;
  doc["command"] = report.command;
  doc["checks"] = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    nlohmann::json rec;
    rec["name"] = c.name;
    rec["status"] = status_name(c.status);
    rec["witness"] = c.witness;
    rec["runtime_ms"] = c.runtime_ms;
    doc["checks"].push_back(std::move(rec));
  }
  return doc;
}

Report report_from_json(const nlohmann::json& doc) {
  Report report;
  report.command = doc.at("command").get<std::string>();
  for (const auto& rec : doc.at("checks")) {
    CheckRecord c;
    c.name = rec.at("name").get<std::string>();
    c.status = status_from_name(rec.at("status").get<std::string>());
    c.witness = rec.at("witness");
    c.runtime_ms = rec.at("runtime_ms").get<double>();
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::string render_json(const Report& report) { return report_to_json(report).dump(2) + "\n"; }

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "# " << report.command << "\n";
  for (const CheckRecord& c : report.checks) {
    std::string tag = status_name(c.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << "[" << tag << "] " << c.name;
    if (c.witness.contains("summary")) os << " " << c.witness["summary"].get<std::string>();
    os << "\n";
  }
  return os.str();
}

}  // namespace rumin
