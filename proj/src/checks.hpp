#pragma once

#include <string>
#include <vector>

#include "field.hpp"

namespace higgslab {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckList {
  std::vector<CheckResult> checks;
  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({name, pass, detail});
  }
  void merge(const CheckList& o) {
    checks.insert(checks.end(), o.checks.begin(), o.checks.end());
  }
  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Records the verdict when a list is given, throws on failure otherwise.
inline void record_or_throw(CheckList* checks, Errc code, const std::string& name,
                            bool pass, const std::string& detail = "") {
  if (checks) {
    checks->add(name, pass, pass ? "" : detail);
    return;
  }
  if (!pass) throw HlError(code, name + (detail.empty() ? "" : ": " + detail));
}

}  // namespace higgslab
