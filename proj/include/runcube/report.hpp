#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace runcube {

struct Check {
  std::string label;
  bool passed = false;
  std::string detail;
};

// A named list of pass/fail checks. A report passes only when every check passes.
class Report {
 public:
  explicit Report(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Check>& checks() const { return checks_; }
  std::vector<std::string>& notes() { return notes_; }
  const std::vector<std::string>& notes() const { return notes_; }

  void add(std::string label, bool passed, std::string detail = {});
  void merge(const Report& other);  // prefixes labels with the other report's name
  bool passed() const;
  std::size_t failures() const;
  const Check* first_failure() const;

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  std::string name_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;  // observations reported without a verdict
};

}  // namespace runcube
