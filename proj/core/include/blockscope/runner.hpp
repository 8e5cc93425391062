#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "blockscope/hopf.hpp"

namespace blockscope {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kReportSchema = 1;

struct RunConfig {
  std::string algebra = "kZ/2@p2";  // builtin name or path to a spec file
  int cap = 10;
  std::uint64_t seed = 0xB10C;
  long long budget = 20000;
  int field = 0;  // base change to F_q when nonzero
  bool slow = false;
  bool cache = true;
  std::string cache_dir;  // empty: default_cache_dir()
};

/// Throws PreconditionError when cap < 2 or budget < 1.
void validate(const RunConfig& c);

/// $BLOCKSCOPE_CACHE, else $XDG_CACHE_HOME/blockscope, else ~/.cache/blockscope.
std::string default_cache_dir();

/// Builtin name or spec path, then the field override.
HopfAlgebra load_algebra(const RunConfig& c);

std::vector<std::string> section_names();  // info, blocks, cohomology, support, adjoint, hochschild, pipoints
std::vector<std::string> verify_names();
bool is_task(const std::string& task);

struct RunResult {
  nlohmann::json report;
  int exit_code = 0;    // 0 ok (possibly inconclusive), 2 fail, 3 unsupported
  std::string message;  // unsupported reason or failing checks
};

/// Runs `task` (a section name, verify:<name>, verify:all or all).
RunResult run(const std::string& task, const RunConfig& c);

/// Sorted keys, two-space indent, trailing newline.
std::string dump_report(const nlohmann::json& report);

/// Paths that differ between report and golden, ignoring "timing" keys.
/// Lines are "~path: golden -> report", "+path" (only in report) or
/// "-path" (only in golden).
std::vector<std::string> compare_golden(const nlohmann::json& report, const nlohmann::json& golden);
nlohmann::json load_json(const std::string& path);

/// File name for an algebra's golden report: characters outside
/// [A-Za-z0-9@^.-] become '_', plus ".json".
std::string golden_filename(const std::string& algebra);

}  // namespace blockscope
