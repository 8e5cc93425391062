#include "blockscope/report.hpp"

namespace blockscope {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::fail: return "fail";
    case Verdict::unsupported: return "unsupported";
  }
  return "?";
}

bool Report::require(const std::string& check, bool ok) {
  data["checks"][check] = ok;
  if (!ok && verdict != Verdict::unsupported) verdict = Verdict::fail;
  return ok;
}

void Report::inconclusive(const std::string& why) {
  data["notes"].push_back(why);
  if (verdict == Verdict::pass) verdict = Verdict::inconclusive;
}

void Report::unsupported(const std::string& why) {
  data["notes"].push_back(why);
  verdict = Verdict::unsupported;
}

void Report::merge(const Report& sub) {
  data["parts"][sub.name] = sub.to_json();
  if (sub.verdict == Verdict::unsupported) return;
  if (static_cast<int>(sub.verdict) > static_cast<int>(verdict) && verdict != Verdict::unsupported)
    verdict = sub.verdict;
}

nlohmann::json Report::to_json() const {
  nlohmann::json j = data;
  j["name"] = name;
  j["verdict"] = to_string(verdict);
  return j;
}

}  // namespace blockscope
