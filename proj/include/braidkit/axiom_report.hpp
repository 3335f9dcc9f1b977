#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidkit/matrix.hpp"

namespace braidkit {

struct AxiomCheck {
  std::string name;
  bool passed = true;
  // Lexicographically first entry where the two sides differ.
  std::optional<Entry> violation;
  std::string detail;
};

/// Itemized verdicts. Identities are compared exactly; a failure records the
/// first differing entry.
class AxiomReport {
 public:
  AxiomReport() = default;
  explicit AxiomReport(std::string scope) : scope_(std::move(scope)) {}

  /// Records `name` as lhs == rhs. Shape mismatches are recorded as failures.
  const AxiomCheck& expect_equal(std::string name, const ExactMatrix& lhs,
                                 const ExactMatrix& rhs);
  const AxiomCheck& expect(std::string name, bool ok, std::string detail = {});
  void merge(const AxiomReport& other, const std::string& prefix = {});

  bool passed() const;
  const std::vector<AxiomCheck>& checks() const { return checks_; }
  /// nullptr when no check has that name.
  const AxiomCheck* find(const std::string& name) const;
  /// Name of the first failed check, if any.
  std::optional<std::string> first_failure() const;
  bool passed(const std::string& name) const;

  const std::string& scope() const { return scope_; }
  void set_scope(std::string scope) { scope_ = std::move(scope); }

 private:
  std::vector<AxiomCheck> checks_;
  std::string scope_;
};

}  // namespace braidkit
