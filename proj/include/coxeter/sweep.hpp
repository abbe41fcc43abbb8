#ifndef COXETER_SWEEP_HPP
#define COXETER_SWEEP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "coxeter/theorem_suite.hpp"

namespace coxeter {

enum class Scope {
  /// Exhaustive when the universe has at most `exhaustive_limit` elements.
  Auto,
  Exhaustive,
  Sample,
};

struct SweepOptions {
  Scope scope = Scope::Auto;
  std::uint64_t seed = 0;
  /// Instances drawn per statement in sample mode.
  std::size_t samples = 500;
  std::size_t exhaustive_limit = 200;
  /// Keep passing reports too, not only failures and skips.
  bool keep_all_reports = false;
};

struct SweepSummary {
  std::string statement_id;
  bool exhaustive = false;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::size_t failed = 0;
  std::vector<VerificationReport> reports;
};

/// Every statement id run_sweep() accepts, in the order "all" runs them.
const std::vector<std::string>& known_statements();
bool is_known_statement(std::string_view id);

/// Runs one statement over `universe` (normally a full enumeration of a
/// finite group, or a capped ball). Throws InvalidArgument for unknown ids.
SweepSummary run_sweep(const CoxeterSystem& system, const Enumeration& universe,
                       std::string_view statement_id, const SweepOptions& options);

/// One line: "<id> PASS|FAIL|SKIP <instance>[ | witness: ...][ | skipped: ...]".
std::string report_to_text(const VerificationReport& report);
/// Compact JSON object mirroring report_to_text().
std::string report_to_json(const VerificationReport& report);
std::string summary_to_text(const SweepSummary& summary);

Scope parse_scope(std::string_view text);

}  // namespace coxeter

#endif  // COXETER_SWEEP_HPP
