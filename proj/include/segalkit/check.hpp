#pragma once

#include <map>
#include <string>
#include <vector>

#include "segalkit/util.hpp"

namespace segal {

/// One concrete violation found by a checker: which rule broke, on which
/// elements, with a human-readable rendering.
struct Witness {
  std::string kind;
  std::vector<std::string> subject;
  std::string detail;

  friend bool operator<(const Witness& a, const Witness& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.subject != b.subject) return a.subject < b.subject;
    return a.detail < b.detail;
  }
  friend bool operator==(const Witness& a, const Witness& b) {
    return a.kind == b.kind && a.subject == b.subject && a.detail == b.detail;
  }
};

/// Outcome of an extensional check.  `passed` holds exactly when the witness
/// list is empty; witnesses are kept sorted so reports are deterministic.
struct CheckReport {
  bool passed = true;
  std::vector<Witness> witnesses;
  std::map<std::string, long long> stats;

  void add(Witness w) {
    passed = false;
    witnesses.push_back(std::move(w));
  }

  void add(std::string kind, std::vector<std::string> subject, std::string detail) {
    add(Witness{std::move(kind), std::move(subject), std::move(detail)});
  }

  void bump(const std::string& key, long long delta = 1) { stats[key] += delta; }

  /// Fold another report in, namespacing its stats under `prefix`.
  void absorb(const CheckReport& other, const std::string& prefix);

  /// Sort witnesses and re-derive `passed`.  Call before serializing.
  void finalize();

  json to_json() const;
};

}  // namespace segal
