#pragma once

#include <string>

#include "json.hpp"

namespace blockscope {

/// Ordered by severity: combining two verdicts keeps the worse one, except
/// that `unsupported` is only set explicitly.
enum class Verdict { pass, inconclusive, fail, unsupported };

std::string to_string(Verdict v);

/// Result of one verification task: a verdict plus structured evidence.
/// JSON objects keep their keys sorted, so serialized reports are stable.
struct Report {
  std::string name;
  Verdict verdict = Verdict::pass;
  nlohmann::json data = nlohmann::json::object();

  /// Records a named boolean check; a false check fails the report.
  bool require(const std::string& check, bool ok);
  void inconclusive(const std::string& why);
  void unsupported(const std::string& why);
  void merge(const Report& sub);
  bool ok() const { return verdict == Verdict::pass; }
  nlohmann::json to_json() const;
};

}  // namespace blockscope
