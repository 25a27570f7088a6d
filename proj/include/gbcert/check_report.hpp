#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gbcert/errors.hpp"

namespace gbcert {

struct CheckCondition {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Verdict of a trusted checker together with every condition it evaluated.
/// Structural defects (wrong lengths, mixed arities, a bad extension) are
/// reported through `error` rather than thrown.
struct CheckReport {
  std::string kind;
  bool accepted = true;
  std::optional<Errc> error;
  std::vector<CheckCondition> conditions;

  void require(std::string name, bool ok, std::string detail = {}) {
    if (!ok) accepted = false;
    conditions.push_back({std::move(name), ok, std::move(detail)});
  }

  void fail(Errc code, std::string detail) {
    if (!error) error = code;
    require(std::string(to_string(code)), false, std::move(detail));
  }

  /// Folds a nested report in, prefixing its condition names unless the
  /// prefix is empty.
  void absorb(const std::string& prefix, const CheckReport& inner) {
    if (!inner.accepted) accepted = false;
    if (!error && inner.error) error = inner.error;
    for (const auto& c : inner.conditions) {
      conditions.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.passed, c.detail});
    }
  }

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& c : conditions) {
      if (!c.passed) out.push_back(c.name);
    }
    return out;
  }
};

}  // namespace gbcert
