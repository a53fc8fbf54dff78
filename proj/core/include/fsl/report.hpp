#pragma once

// Structured command reports: deterministic key-sorted text or JSON.

#include <string>
#include <vector>

namespace fsl::cli {

enum class Certification { Exact, Numeric, UpperBoundOnly };

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> results;
  Certification certification = Certification::Exact;
  std::vector<std::pair<std::string, bool>> claims;  // id -> pass

  void input(const std::string& k, const std::string& v) { inputs.emplace_back(k, v); }
  void result(const std::string& k, const std::string& v) { results.emplace_back(k, v); }
  void claim(const std::string& id, bool pass) { claims.emplace_back(id, pass); }

  bool all_claims_pass() const;
  std::string to_text() const;
  std::string to_json() const;
};

const char* certification_name(Certification c);

}  // namespace fsl::cli
