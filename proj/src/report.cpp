#include "mstanley/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <future>

#include "mstanley/errors.hpp"

namespace mstanley {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Strips the "+merged" suffix so histograms group by case.
std::string case_name(const std::string& method) {
  return method.substr(0, method.find('+'));
}

nlohmann::ordered_json monomial_json(const Monomial& m) {
  auto out = nlohmann::ordered_json::array();
  for (Exponent e : m.exponents()) out.push_back(e);
  return out;
}

}  // namespace

std::string to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::kOk:
      return "ok";
    case VerifyStatus::kFormulaMismatch:
      return "formula_mismatch";
    case VerifyStatus::kConjectureFailure:
      return "conjecture_failure";
    case VerifyStatus::kInvariantViolation:
      return "invariant_violation";
    case VerifyStatus::kBudgetExceeded:
      return "budget_exceeded";
    case VerifyStatus::kError:
      return "error";
  }
  return "error";
}

ConjectureReport verify(const PrimaryDecomposition& decomposition, const VerifyOptions& options) {
  ConjectureReport report;
  report.instance = to_spec(decomposition);
  report.n = decomposition.ring().n();
  const auto start = Clock::now();
  std::string stage = "input";

  auto fail = [&](VerifyStatus status, const std::string& message) {
    report.status = status;
    report.failed_stage = stage;
    report.message = message;
    report.conjecture_holds = false;
  };

  try {
    if (decomposition.size() < 2 || decomposition.size() > 3) {
      throw InvalidArgument("verify handles two or three components, got " +
                            std::to_string(decomposition.size()));
    }
    if (!is_irredundant(decomposition)) throw InvalidArgument("the decomposition is redundant");
    const MonomialIdeal ideal = decomposition.intersection();

    stage = "size";
    auto t = Clock::now();
    report.size = size(decomposition);
    report.timings_ms["size"] = elapsed_ms(t);

    stage = "depth_formula";
    t = Clock::now();
    report.depth_formula = depth_formula(decomposition);
    report.timings_ms["depth_formula"] = elapsed_ms(t);

    stage = "depth_oracle";
    t = Clock::now();
    report.depth_oracle = depth_oracle(ideal, options.betti);
    report.timings_ms["depth_oracle"] = elapsed_ms(t);
    if (report.depth_formula->depth_quotient != report.depth_oracle->depth_quotient ||
        report.depth_formula->labeling_conflict) {
      fail(VerifyStatus::kFormulaMismatch,
           "formula gives depth " + std::to_string(report.depth_formula->depth_ideal) + " (" +
               report.depth_formula->method + "), oracle gives " +
               std::to_string(report.depth_oracle->depth_ideal));
      report.timings_ms["total"] = elapsed_ms(start);
      return report;
    }
    const std::size_t depth_ideal = report.depth_formula->depth_ideal;

    stage = "decompose";
    t = Clock::now();
    DecomposeOptions decompose_options{options.solver};
    report.decomposition =
        decomposition.size() == 3
            ? decompose_three_primary(decomposition, decompose_options, &report.trace)
            : decompose_two_primary(decomposition, decompose_options);
    report.timings_ms["decompose"] = elapsed_ms(t);

    stage = "validate";
    t = Clock::now();
    const ValidationResult check = validate_decomposition(ideal, *report.decomposition);
    report.timings_ms["validate"] = elapsed_ms(t);
    if (!check) throw InvariantViolation("decomposition is invalid: " + check.diagnostic);
    report.sdepth_constructed = report.decomposition->sdepth();
    report.conjecture_holds = report.sdepth_constructed >= depth_ideal;

    if (options.run_exact) {
      stage = "sdepth_exact";
      t = Clock::now();
      try {
        report.sdepth_exact = sdepth_exact(ideal, options.solver).sdepth;
      } catch (const BudgetExceeded&) {
        // The exact value is optional; the constructed bound stands.
      }
      report.timings_ms["sdepth_exact"] = elapsed_ms(t);
      if (report.sdepth_exact && *report.sdepth_exact < report.sdepth_constructed) {
        throw InvariantViolation("exact sdepth " + std::to_string(*report.sdepth_exact) +
                                 " below constructed " +
                                 std::to_string(report.sdepth_constructed));
      }
    }
    if (!report.conjecture_holds) {
      fail(VerifyStatus::kConjectureFailure,
           "constructed sdepth " + std::to_string(report.sdepth_constructed) +
               " below depth " + std::to_string(depth_ideal));
    }
  } catch (const BudgetExceeded& e) {
    fail(VerifyStatus::kBudgetExceeded, e.what());
  } catch (const InvariantViolation& e) {
    fail(VerifyStatus::kInvariantViolation, e.what());
  } catch (const std::exception& e) {
    fail(VerifyStatus::kError, e.what());
  }
  report.timings_ms["total"] = elapsed_ms(start);
  return report;
}

nlohmann::ordered_json to_json(const ConjectureReport& report, bool include_timings) {
  nlohmann::ordered_json out;
  out["instance"] = print_instance(report.instance);
  out["n"] = report.n;
  out["size"] = {{"v", report.size.v}, {"h", report.size.h}, {"size", report.size.size}};
  nlohmann::ordered_json depth = nlohmann::ordered_json::object();
  if (report.depth_formula) {
    depth["formula"] = report.depth_formula->depth_ideal;
    depth["case"] = report.depth_formula->method;
  }
  if (report.depth_oracle) depth["oracle"] = report.depth_oracle->depth_ideal;
  out["depth"] = depth;
  nlohmann::ordered_json sdepth = nlohmann::ordered_json::object();
  if (report.sdepth_exact) sdepth["exact"] = *report.sdepth_exact;
  if (report.decomposition) sdepth["constructed"] = report.sdepth_constructed;
  out["sdepth"] = sdepth;
  auto intervals = nlohmann::ordered_json::array();
  if (report.decomposition) {
    for (const StanleyInterval& s : report.decomposition->intervals()) {
      auto zset = nlohmann::ordered_json::array();
      for (std::size_t k : s.zset.indices()) zset.push_back(k + 1);
      intervals.push_back({{"base", monomial_json(s.base)}, {"zset", zset}});
    }
  }
  out["decomposition"] = intervals;
  out["conjecture_holds"] = report.conjecture_holds;
  out["status"] = to_string(report.status);
  if (report.status != VerifyStatus::kOk) {
    out["error"] = {{"stage", report.failed_stage}, {"message", report.message}};
  }
  out["split"] = {{"frames", report.trace.frames},
                  {"leaves", report.trace.leaves},
                  {"max_depth", report.trace.max_depth},
                  {"raised_targets", report.trace.raised_targets}};
  if (include_timings) {
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    for (const auto& [stage, ms] : report.timings_ms) timings[stage] = ms;
    out["timings_ms"] = timings;
  }
  return out;
}

BatchResult batch(const BatchParams& params) {
  BatchResult result;
  result.reports.resize(params.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= params.count) return;
      RandomParams p = params.instance;
      p.seed = derive_seed(params.instance.seed, i);
      try {
        result.reports[i] = verify(random_instance(p), params.verify);
      } catch (const std::exception& e) {
        ConjectureReport failed;
        failed.n = p.n;
        failed.status = VerifyStatus::kError;
        failed.failed_stage = "generate";
        failed.message = e.what();
        result.reports[i] = std::move(failed);
      }
    }
  };
  const unsigned threads = std::max(1u, params.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
    for (auto& job : jobs) job.get();
  }

  BatchSummary& summary = result.summary;
  summary.count = params.count;
  std::vector<double> totals;
  for (const ConjectureReport& r : result.reports) {
    if (r.status == VerifyStatus::kOk && r.conjecture_holds) ++summary.passed;
    ++summary.statuses[to_string(r.status)];
    if (r.depth_formula) ++summary.cases[case_name(r.depth_formula->method)];
    if (auto it = r.timings_ms.find("total"); it != r.timings_ms.end()) totals.push_back(it->second);
  }
  std::sort(totals.begin(), totals.end());
  if (!totals.empty()) {
    auto pct = [&](double q) {
      const auto idx = static_cast<std::size_t>(std::ceil(q * static_cast<double>(totals.size()))) ;
      return totals[std::min(totals.size() - 1, idx == 0 ? 0 : idx - 1)];
    };
    summary.timing_percentiles_ms = {
        {"p50", pct(0.50)}, {"p90", pct(0.90)}, {"p99", pct(0.99)}, {"max", totals.back()}};
  }
  return result;
}

nlohmann::ordered_json to_json(const BatchSummary& summary, bool include_timings) {
  nlohmann::ordered_json out;
  out["count"] = summary.count;
  out["passed"] = summary.passed;
  out["failed"] = summary.count - summary.passed;
  out["statuses"] = summary.statuses;
  out["cases"] = summary.cases;
  if (include_timings) out["timings_ms"] = summary.timing_percentiles_ms;
  return out;
}

}  // namespace mstanley
