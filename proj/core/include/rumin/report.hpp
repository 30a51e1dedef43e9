#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace rumin {

/// One verification record. Failures always carry a reproducible witness:
/// the exact inputs and the exact residual, as strings of literals.
struct CheckRecord {
  enum class Status { pass, fail, vacuous };

  std::string name;
  Status status = Status::pass;
  nlohmann::json witness = nlohmann::json::object();
  double runtime_ms = 0;
};

struct Report {
  std::string command;
  std::vector<CheckRecord> checks;

  bool all_pass() const;  // no fail records; vacuous does not fail
};

std::string status_name(CheckRecord::Status s);
CheckRecord::Status status_from_name(const std::string& name);

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& doc);

/// Canonical JSON rendering; parsing and re-rendering is byte-identical.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace rumin
