#pragma once

#include <string>

#include <json.hpp>

namespace sunspot {

// Three-way outcome of a hypothesis-guarded check. NotApplicable is distinct
// from Holds so vacuous passes stay visible in reports.
enum class Verdict { Holds, Violated, NotApplicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

struct CheckResult {
  Verdict verdict = Verdict::NotApplicable;
  nlohmann::json detail;
};

} // namespace sunspot
