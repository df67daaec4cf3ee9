// Check records and the JSON report emitted by the verification front-end.
// Field order is fixed so identical configurations produce byte-identical
// reports up to the wall-time values.
#pragma once

#include "qgl3/checks/identity.hpp"

#include <json.hpp>

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace qgl3 {

// One verification record: a named check suite run against one representation
// at one grading and truncation order.
struct CheckRecord {
  std::string check_id;
  std::string representation;
  std::array<long, 3> grading{1, 1, 1};
  std::size_t order = 0;
  bool ok = true;
  std::string first_failing;  // first failing identity, "label [detail]"
  double wall_time = 0.0;     // seconds
  std::vector<std::string> notes;
};

// Folds a result list into the pass/fail and first-failure fields.
void record_results(CheckRecord& rec, const std::vector<IdentityResult>& rs);

nlohmann::ordered_json record_json(const CheckRecord& rec);

// Full report: the configuration echo, one object per record, the aggregate
// status.
nlohmann::ordered_json report_json(const nlohmann::ordered_json& configuration,
                                   const std::vector<CheckRecord>& records);

}  // namespace qgl3
