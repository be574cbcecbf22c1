#pragma once

#include <string>
#include <vector>

namespace dialg {

/// Outcome of one checked clause. On failure `witness` holds the basis
/// indices (or group elements) where the identity breaks and `detail` a
/// readable description.
struct ClauseResult {
  std::string clause;
  bool passed = true;
  std::vector<long> witness;
  std::string detail;
};

struct CheckReport {
  std::vector<ClauseResult> clauses;

  bool ok() const {
    for (const auto& c : clauses) {
      if (!c.passed) return false;
    }
    return true;
  }

  const ClauseResult* first_failure() const {
    for (const auto& c : clauses) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }

  void pass(std::string clause) { clauses.push_back({std::move(clause), true, {}, {}}); }

  void fail(std::string clause, std::vector<long> witness, std::string detail) {
    clauses.push_back({std::move(clause), false, std::move(witness), std::move(detail)});
  }

  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (auto c : other.clauses) {
      c.clause = prefix + c.clause;
      clauses.push_back(std::move(c));
    }
  }
};

}  // namespace dialg
