// Command-line front end: instance inspection, invariants, decompositions and
// the batch verifier.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "mstanley/report.hpp"

namespace ms = mstanley;

namespace {

enum Exit { kSuccess = 0, kUsage = 1, kBudget = 2, kInvariant = 3 };

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ms::InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ms::PrimaryDecomposition load(const std::string& path) {
  return ms::to_decomposition(ms::parse_instance(read_file(path)));
}

void print_decomposition(const ms::StanleyDecomposition& d) {
  for (const ms::StanleyInterval& s : d.intervals()) {
    std::cout << ms::to_string(s.base) << " K[" << ms::to_string(s.zset) << "]\n";
  }
  std::cout << "sdepth " << d.sdepth() << "\n";
}

int exit_for(ms::VerifyStatus status) {
  switch (status) {
    case ms::VerifyStatus::kOk:
      return kSuccess;
    case ms::VerifyStatus::kBudgetExceeded:
      return kBudget;
    case ms::VerifyStatus::kError:
      return kUsage;
    default:
      return kInvariant;
  }
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ms::InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stanley depth of intersections of primary monomial ideals"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));

  std::string file;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "instance file, - for stdin")->required();
  };

  auto* parse_cmd = app.add_subcommand("parse", "check an instance and print it canonically");
  add_file(parse_cmd);

  auto* size_cmd = app.add_subcommand("size", "Lyubeznik size");
  add_file(size_cmd);

  auto* depth_cmd = app.add_subcommand("depth", "depth of S/I and of I");
  add_file(depth_cmd);
  std::string field = "q";
  depth_cmd->add_option("--field", field, "q or fp:<p>");
  bool oracle_only = false;
  bool formula_only = false;
  auto* oracle_flag = depth_cmd->add_flag("--oracle-only", oracle_only);
  depth_cmd->add_flag("--formula-only", formula_only)->excludes(oracle_flag);

  auto* sdepth_cmd = app.add_subcommand("sdepth", "exact Stanley depth");
  add_file(sdepth_cmd);
  std::size_t budget = ms::SolverOptions{}.max_poset;
  sdepth_cmd->add_option("--budget", budget, "largest characteristic poset box");
  std::uint64_t max_nodes = 0;
  sdepth_cmd->add_option("--max-nodes", max_nodes, "search node limit, 0 for none");

  auto* decompose_cmd = app.add_subcommand("decompose", "print a Stanley decomposition");
  add_file(decompose_cmd);
  std::string method = "split";
  decompose_cmd->add_option("--method", method)->check(CLI::IsMember({"split", "exact"}));

  auto* verify_cmd = app.add_subcommand("verify", "check sdepth >= depth on one instance");
  add_file(verify_cmd);
  std::string json_out;
  verify_cmd->add_option("--json", json_out, "report file, - for stdout");
  bool no_exact = false;
  verify_cmd->add_flag("--no-exact", no_exact, "skip the exact sdepth search");

  auto* batch_cmd = app.add_subcommand("batch", "verify seeded random instances");
  ms::BatchParams batch_params;
  batch_params.instance.n = 4;
  batch_cmd->add_option("--seed", batch_params.instance.seed)->required();
  batch_cmd->add_option("--count", batch_params.count)->required();
  batch_cmd->add_option("--n", batch_params.instance.n)->required()->check(CLI::Range(1, 16));
  batch_cmd->add_option("--components", batch_params.instance.components)
      ->required()
      ->check(CLI::IsMember({2, 3}));
  batch_cmd->add_option("--max-exp", batch_params.instance.max_exp)
      ->required()
      ->check(CLI::Range(1, 16));
  batch_cmd->add_option("--max-gens", batch_params.instance.max_gens);
  std::string jsonl_out;
  batch_cmd->add_option("--jsonl", jsonl_out, "per-instance reports, one per line");
  bool no_timings = false;
  batch_cmd->add_flag("--no-timings", no_timings, "omit timings for byte-stable output");
  batch_cmd->add_flag("--no-exact", no_exact, "skip the exact sdepth search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    ms::SolverOptions solver;
    solver.threads = threads;

    if (*parse_cmd) {
      const ms::PrimaryDecomposition d = load(file);
      std::cout << ms::print_instance(ms::to_spec(d));
      return kSuccess;
    }
    if (*size_cmd) {
      const ms::SizeResult s = ms::size(load(file));
      std::cout << "v " << s.v << "\nh " << s.h << "\nsize " << s.size << "\n";
      return kSuccess;
    }
    if (*depth_cmd) {
      const ms::PrimaryDecomposition d = load(file);
      ms::BettiOptions betti;
      betti.field = ms::Field::parse(field);
      betti.threads = threads;
      std::optional<ms::DepthResult> formula;
      std::optional<ms::DepthResult> oracle;
      if (!oracle_only) formula = ms::depth_formula(d);
      if (!formula_only) oracle = ms::depth_oracle(d.intersection(), betti);
      if (formula) {
        std::cout << "formula depth(S/I) " << formula->depth_quotient << " depth(I) "
                  << formula->depth_ideal << " case " << formula->method << "\n";
      }
      if (oracle) {
        std::cout << "oracle  depth(S/I) " << oracle->depth_quotient << " depth(I) "
                  << oracle->depth_ideal << " field " << betti.field.name() << "\n";
      }
      if (formula && (formula->labeling_conflict ||
                      (oracle && formula->depth_quotient != oracle->depth_quotient))) {
        std::cerr << "mstanley: formula and oracle disagree\n";
        return kInvariant;
      }
      return kSuccess;
    }
    if (*sdepth_cmd) {
      const ms::PrimaryDecomposition d = load(file);
      solver.max_poset = budget;
      solver.max_nodes = max_nodes;
      const ms::SdepthResult r = ms::sdepth_exact(d.intersection(), solver);
      std::cout << "sdepth " << r.sdepth << "\nposet " << r.poset_size << "\n";
      return kSuccess;
    }
    if (*decompose_cmd) {
      const ms::PrimaryDecomposition d = load(file);
      ms::DecomposeOptions options{solver};
      if (method == "exact") {
        print_decomposition(ms::sdepth_exact(d.intersection(), solver).witness);
      } else if (d.size() == 3) {
        print_decomposition(ms::decompose_three_primary(d, options));
      } else if (d.size() == 2) {
        print_decomposition(ms::decompose_two_primary(d, options));
      } else {
        throw ms::InvalidArgument("--method split needs two or three components");
      }
      return kSuccess;
    }
    if (*verify_cmd) {
      const ms::PrimaryDecomposition d = load(file);
      ms::VerifyOptions options;
      options.solver = solver;
      options.run_exact = !no_exact;
      const ms::ConjectureReport report = ms::verify(d, options);
      if (!json_out.empty()) {
        write_or_print(json_out, ms::to_json(report).dump(2) + "\n");
      }
      if (json_out != "-") {
        std::cout << (report.conjecture_holds ? "holds" : "fails") << " depth "
                  << (report.depth_formula ? std::to_string(report.depth_formula->depth_ideal)
                                           : "?")
                  << " sdepth " << report.sdepth_constructed;
        if (report.sdepth_exact) std::cout << " exact " << *report.sdepth_exact;
        std::cout << "\n";
        if (report.status != ms::VerifyStatus::kOk) {
          std::cerr << "mstanley: " << ms::to_string(report.status) << " in "
                    << report.failed_stage << ": " << report.message << "\n";
        }
      }
      return exit_for(report.status);
    }
    if (*batch_cmd) {
      batch_params.threads = threads;
      batch_params.verify.run_exact = !no_exact;
      const ms::BatchResult result = ms::batch(batch_params);
      if (!jsonl_out.empty()) {
        std::string lines;
        for (const ms::ConjectureReport& r : result.reports) {
          lines += ms::to_json(r, !no_timings).dump() + "\n";
        }
        write_or_print(jsonl_out, lines);
      }
      std::cout << ms::to_json(result.summary, !no_timings).dump(2) << "\n";
      for (const ms::ConjectureReport& r : result.reports) {
        const int code = exit_for(r.status);
        if (code == kInvariant) return kInvariant;
      }
      return kSuccess;
    }
  } catch (const ms::BudgetExceeded& e) {
    std::cerr << "mstanley: " << e.what() << "\n";
    return kBudget;
  } catch (const ms::InvariantViolation& e) {
    std::cerr << "mstanley: " << e.what() << "\n";
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "mstanley: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
