#include "fsl/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace fsl::cli {

const char* certification_name(Certification c) {
  switch (c) {
    case Certification::Exact: return "exact";
    case Certification::Numeric: return "numeric";
    case Certification::UpperBoundOnly: return "upper-bound-only";
  }
  return "?";
}

bool Report::all_claims_pass() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const auto& c) { return c.second; });
}

namespace {
template <typename T>
std::vector<std::pair<std::string, T>> sorted(
    std::vector<std::pair<std::string, T>> v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}
}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "certification: " << certification_name(certification) << "\n";
  for (const auto& [k, v] : sorted(inputs)) os << "input." << k << ": " << v << "\n";
  for (const auto& [k, v] : sorted(results)) os << "result." << k << ": " << v << "\n";
  for (const auto& [k, v] : sorted(claims))
    os << "claim." << k << ": " << (v ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["command"] = command;
  j["certification"] = certification_name(certification);
  nlohmann::json ji = nlohmann::json::object();
  for (const auto& [k, v] : inputs) ji[k] = v;
  j["inputs"] = ji;
  nlohmann::json jr = nlohmann::json::object();
  for (const auto& [k, v] : results) jr[k] = v;
  j["results"] = jr;
  nlohmann::json jc = nlohmann::json::object();
  for (const auto& [k, v] : claims) jc[k] = v ? "pass" : "fail";
  j["claims"] = jc;
  return j.dump(2) + "\n";
}

}  // namespace fsl::cli
