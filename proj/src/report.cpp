#include "qgl3/cli/report.hpp"

namespace qgl3 {

void record_results(CheckRecord& rec, const std::vector<IdentityResult>& rs) {
  rec.ok = true;
  rec.first_failing.clear();
  for (const auto& r : rs) {
    if (r.ok) continue;
    rec.ok = false;
    rec.first_failing = r.label;
    if (!r.detail.empty()) rec.first_failing += " [" + r.detail + "]";
    return;
  }
}

nlohmann::ordered_json record_json(const CheckRecord& rec) {
  nlohmann::ordered_json j;
  j["check-id"] = rec.check_id;
  j["representation"] = rec.representation;
  j["grading"] = rec.grading;
  j["order"] = rec.order;
  j["status"] = rec.ok ? "pass" : "fail";
  if (rec.ok)
    j["first-failing-coefficient"] = nullptr;
  else
    j["first-failing-coefficient"] = rec.first_failing;
  j["wall-time"] = rec.wall_time;
  if (!rec.notes.empty()) j["notes"] = rec.notes;
  return j;
}

nlohmann::ordered_json report_json(const nlohmann::ordered_json& configuration,
                                   const std::vector<CheckRecord>& records) {
  nlohmann::ordered_json j;
  j["configuration"] = configuration;
  j["records"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : records) {
    j["records"].push_back(record_json(r));
    all = all && r.ok;
  }
  j["status"] = all ? "pass" : "fail";
  return j;
}

}  // namespace qgl3
