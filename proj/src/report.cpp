#include "runcube/report.hpp"

#include <algorithm>

namespace runcube {

void Report::add(std::string label, bool passed, std::string detail) {
  checks_.push_back({std::move(label), passed, std::move(detail)});
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back({other.name_ + ": " + c.label, c.passed, c.detail});
  for (const auto& n : other.notes_) notes_.push_back(other.name_ + ": " + n);
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(),
                                                [](const Check& c) { return !c.passed; }));
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (!c.passed) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out = name_ + ": " + (passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(checks_.size() - failures()) + "/" + std::to_string(checks_.size()) +
                    " checks)\n";
  for (const auto& c : checks_) {
    out += std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.label;
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += '\n';
  }
  for (const auto& n : notes_) out += "  note: " + n + '\n';
  return out;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"label", c.label}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  nlohmann::json j = {{"name", name_}, {"passed", passed()}, {"checks", checks}};
  if (!notes_.empty()) j["notes"] = notes_;
  if (const Check* f = first_failure()) j["first_failure"] = f->label + (f->detail.empty() ? "" : ": " + f->detail);
  return j;
}

}  // namespace runcube
