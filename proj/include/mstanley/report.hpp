#ifndef MSTANLEY_REPORT_HPP
#define MSTANLEY_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mstanley/instance.hpp"
#include "mstanley/invariants.hpp"
#include "mstanley/split.hpp"

namespace mstanley {

/// How a verification run ended. Formula/oracle disagreement is kept apart
/// from a conjecture failure: the first means a depth case was misapplied,
/// the second that the decomposer produced too small an sdepth.
enum class VerifyStatus {
  kOk,
  kFormulaMismatch,
  kConjectureFailure,
  kInvariantViolation,
  kBudgetExceeded,
  kError,
};

std::string to_string(VerifyStatus status);

struct ConjectureReport {
  InstanceSpec instance;
  std::size_t n = 0;
  SizeResult size;
  std::optional<DepthResult> depth_formula;
  std::optional<DepthResult> depth_oracle;
  std::optional<std::size_t> sdepth_exact;
  std::optional<StanleyDecomposition> decomposition;
  std::size_t sdepth_constructed = 0;
  bool conjecture_holds = false;
  SplitTrace trace;
  VerifyStatus status = VerifyStatus::kOk;
  std::string failed_stage;
  std::string message;
  std::map<std::string, double> timings_ms;
};

struct VerifyOptions {
  bool run_exact = true;
  SolverOptions solver;
  BettiOptions betti;
};

/// Runs size, depth formula, depth oracle, the constructive decomposition
/// (splitting for three components, the solver for two),
/// validation and optionally the exact sdepth. Stage errors are recorded in
/// the report, never thrown.
ConjectureReport verify(const PrimaryDecomposition& decomposition,
                        const VerifyOptions& options = {});

nlohmann::ordered_json to_json(const ConjectureReport& report, bool include_timings = true);

struct BatchParams {
  RandomParams instance;  // `seed` is the batch seed; instance i uses derive_seed(seed, i)
  std::size_t count = 0;
  unsigned threads = 1;
  VerifyOptions verify;
};

struct BatchSummary {
  std::size_t count = 0;
  std::size_t passed = 0;
  std::map<std::string, std::size_t> statuses;
  std::map<std::string, std::size_t> cases;
  /// p50, p90, p99 and max of the per-instance total time.
  std::map<std::string, double> timing_percentiles_ms;
};

struct BatchResult {
  std::vector<ConjectureReport> reports;  // by instance index
  BatchSummary summary;
};

BatchResult batch(const BatchParams& params);

nlohmann::ordered_json to_json(const BatchSummary& summary, bool include_timings = true);

}  // namespace mstanley

#endif  // MSTANLEY_REPORT_HPP
