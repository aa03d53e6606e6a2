#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "zg/ring.hpp"

namespace zg::cli {

/// Process exit codes. Codes 10 and 11 describe results, not failures.
namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kVerificationFailure = 3;
inline constexpr int kPredictionFalse = 10;
inline constexpr int kNoCounterexample = 11;
}  // namespace exit_code

/// Rendered result of one subcommand: the JSON document, the human-readable
/// text and the exit code derived from the report.
struct CommandOutcome {
  nlohmann::json document;
  std::string text;
  int exit_code = exit_code::kOk;
};

/// [[name, "coefficient"], ...] over the support, in index order.
nlohmann::json ring_json(const RingElement& w);

CommandOutcome run_criterion(const std::string& spec);
CommandOutcome run_counterexample(const std::string& spec);
CommandOutcome run_reproduce(long long p);
CommandOutcome run_hoechsmann(const std::string& spec, const std::string& element, long long i,
                              long long j, long long k);
CommandOutcome run_bicyclic(const std::string& spec, const std::string& x, const std::string& y);
CommandOutcome run_search_units(const std::string& spec, long long bound, unsigned threads);

/// Full command-line entry point; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zg::cli
