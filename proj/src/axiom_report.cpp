#include "braidkit/axiom_report.hpp"

#include <algorithm>

namespace braidkit {

const AxiomCheck& AxiomReport::expect_equal(std::string name, const ExactMatrix& lhs,
                                            const ExactMatrix& rhs) {
  AxiomCheck check{std::move(name), true, std::nullopt, {}};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() || !(lhs.field() == rhs.field())) {
    check.passed = false;
    check.detail = "shape mismatch " + std::to_string(lhs.rows()) + "x" +
                   std::to_string(lhs.cols()) + " vs " + std::to_string(rhs.rows()) + "x" +
                   std::to_string(rhs.cols());
  } else if (auto where = first_difference(lhs, rhs)) {
    check.passed = false;
    check.violation = where;
    check.detail = "lhs=" + lhs.at(where->row, where->col).to_string() +
                   " rhs=" + rhs.at(where->row, where->col).to_string();
  }
  checks_.push_back(std::move(check));
  return checks_.back();
}

const AxiomCheck& AxiomReport::expect(std::string name, bool ok, std::string detail) {
  checks_.push_back(AxiomCheck{std::move(name), ok, std::nullopt, std::move(detail)});
  return checks_.back();
}

void AxiomReport::merge(const AxiomReport& other, const std::string& prefix) {
  for (AxiomCheck c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
  if (scope_.empty()) scope_ = other.scope_;
}

bool AxiomReport::passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [&](const AxiomCheck& c) { return c.name == name; });
  return it == checks_.end() ? nullptr : &*it;
}

std::optional<std::string> AxiomReport::first_failure() const {
  for (const auto& c : checks_) {
    if (!c.passed) return c.name;
  }
  return std::nullopt;
}

bool AxiomReport::passed(const std::string& name) const {
  const AxiomCheck* c = find(name);
  return c != nullptr && c->passed;
}

}  // namespace braidkit
