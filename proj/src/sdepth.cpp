#include "mstanley/sdepth.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <limits>
#include <mutex>
#include <string>
#include <unordered_set>

#include "mstanley/errors.hpp"

namespace mstanley {

CharacteristicPoset::CharacteristicPoset(const MonomialIdeal& ideal, VarSet ring_vars,
                                         std::size_t budget)
    : ring_(ideal.ring()), ring_vars_(ring_vars), g_(ideal.gens_lcm()) {
  if (ideal.is_zero()) throw InvalidArgument("the characteristic poset of the zero ideal is empty");
  if (!ideal.support().subset_of(ring_vars)) {
    throw InvalidArgument("ideal " + to_string(ideal) + " has generators outside " +
                          to_string(ring_vars));
  }
  coords_ = ring_vars.indices();
  strides_.assign(coords_.size(), 1);
  for (std::size_t j = coords_.size(); j-- > 0;) {
    strides_[j] = box_size_;
    const std::size_t extent = static_cast<std::size_t>(g_[coords_[j]]) + 1;
    if (box_size_ > budget / extent) {
      throw BudgetExceeded("characteristic poset box exceeds budget of " + std::to_string(budget));
    }
    box_size_ *= extent;
  }
  in_ideal_.assign(box_size_, 0);
  for (std::size_t code = 0; code < box_size_; ++code) {
    Monomial a = decode(code);
    if (ideal.contains(a)) {
      in_ideal_[code] = 1;
      elements_.push_back(std::move(a));
    }
  }
}

std::size_t CharacteristicPoset::rho(const Monomial& b) const {
  std::size_t r = 0;
  for (std::size_t k : coords_) r += b[k] == g_[k] ? 1 : 0;
  return r;
}

std::size_t CharacteristicPoset::encode(const Monomial& a) const {
  std::size_t code = 0;
  for (std::size_t j = 0; j < coords_.size(); ++j) code += a[coords_[j]] * strides_[j];
  return code;
}

Monomial CharacteristicPoset::decode(std::size_t code) const {
  std::vector<Exponent> e(ring_.n(), 0);
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    e[coords_[j]] = static_cast<Exponent>(code / strides_[j]);
    code %= strides_[j];
  }
  return Monomial(std::move(e));
}

namespace {

// Shared between the workers of one find_partition call.
struct SearchShared {
  std::atomic<std::size_t> best_root{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::uint64_t> nodes{0};
};

// A candidate interval [bottom, top] and the element codes it contains.
struct Row {
  std::size_t bottom;
  std::size_t top;
  std::vector<std::size_t> cells;
};

// Rows are the intervals [c, d] with c deficient (rho(c) < k) and rho(d) ≥ k.
// Intervals with a non-deficient bottom contain no deficient element, and
// every non-deficient element may stand alone as [a, a], so only the
// deficient elements need covering.
struct CoverProblem {
  std::vector<Row> rows;
  std::vector<std::size_t> primary;    // deficient element codes, lex order
  std::vector<std::size_t> secondary;  // the other element codes
};

CoverProblem build_problem(const CharacteristicPoset& poset, std::size_t k) {
  const std::size_t d = poset.coords().size();
  std::vector<std::size_t> gk(d);
  for (std::size_t j = 0; j < d; ++j) gk[j] = poset.g()[poset.coords()[j]];
  auto unpack = [&](std::size_t code) {
    std::vector<std::size_t> c(d);
    for (std::size_t j = 0; j < d; ++j) {
      c[j] = code / poset.strides()[j];
      code %= poset.strides()[j];
    }
    return c;
  };
  auto rho_of = [&](const std::vector<std::size_t>& c) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < d; ++j) r += c[j] == gk[j] ? 1 : 0;
    return r;
  };

  CoverProblem problem;
  for (std::size_t code = 0; code < poset.box_size(); ++code) {
    if (!poset.in_ideal(code)) continue;
    (rho_of(unpack(code)) < k ? problem.primary : problem.secondary).push_back(code);
  }
  for (std::size_t bottom : problem.primary) {
    const std::vector<std::size_t> lo = unpack(bottom);
    // Tops in [bottom, g] by increasing rho, lexicographic within. Trying the
    // smallest admissible tops first finds feasible partitions far sooner.
    std::vector<std::pair<std::size_t, std::size_t>> tops;  // (rho, code)
    std::vector<std::size_t> cur = lo;
    while (true) {
      const std::size_t rho = rho_of(cur);
      if (rho >= k) {
        std::size_t code = 0;
        for (std::size_t j = 0; j < d; ++j) code += cur[j] * poset.strides()[j];
        tops.push_back({rho, code});
      }
      std::size_t j = d;
      while (j > 0 && cur[j - 1] == gk[j - 1]) {
        cur[j - 1] = lo[j - 1];
        --j;
      }
      if (j == 0) break;
      ++cur[j - 1];
    }
    std::stable_sort(tops.begin(), tops.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [rho, top] : tops) {
      Row row{bottom, top, {}};
      const std::vector<std::size_t> hi = unpack(top);
      std::vector<std::size_t> c = lo;
      while (true) {
        std::size_t code = 0;
        for (std::size_t j = 0; j < d; ++j) code += c[j] * poset.strides()[j];
        row.cells.push_back(code);
        std::size_t j = d;
        while (j > 0 && c[j - 1] == hi[j - 1]) {
          c[j - 1] = lo[j - 1];
          --j;
        }
        if (j == 0) break;
        ++c[j - 1];
      }
      problem.rows.push_back(std::move(row));
    }
  }
  return problem;
}

// Knuth's Algorithm X on dancing links. Primary columns must be covered
// exactly once, secondary columns at most once. The column with the fewest
// remaining rows is branched on (ties: lowest index), and rows are tried in
// the order they were added, so the first solution found is deterministic.
class ExactCover {
 public:
  ExactCover(const CoverProblem& problem, std::size_t box_size, const SolverOptions& options,
             SearchShared& shared)
      : problem_(problem), options_(options), shared_(shared) {
    const std::size_t ncols = problem.primary.size() + problem.secondary.size();
    column_of_.assign(box_size, kNone);
    for (std::size_t i = 0; i < problem.primary.size(); ++i) column_of_[problem.primary[i]] = i;
    for (std::size_t i = 0; i < problem.secondary.size(); ++i) {
      column_of_[problem.secondary[i]] = problem.primary.size() + i;
    }
    // Node 0 is the root; nodes 1..ncols are column headers.
    nodes_.resize(ncols + 1);
    size_.assign(ncols + 1, 0);
    for (std::size_t c = 0; c <= ncols; ++c) {
      nodes_[c] = {c, c, c, c, c, kNone};
    }
    // Only primary headers are linked into the root list.
    std::size_t prev = 0;
    for (std::size_t c = 1; c <= problem.primary.size(); ++c) {
      nodes_[prev].right = c;
      nodes_[c].left = prev;
      prev = c;
    }
    nodes_[prev].right = 0;
    nodes_[0].left = prev;

    row_start_.reserve(problem.rows.size());
    for (std::size_t r = 0; r < problem.rows.size(); ++r) {
      std::size_t first = kNone;
      for (std::size_t cell : problem.rows[r].cells) {
        const std::size_t col = column_of_[cell] + 1;
        const std::size_t id = nodes_.size();
        nodes_.push_back({id, id, nodes_[col].up, col, col, r});
        nodes_[nodes_[col].up].down = id;
        nodes_[col].up = id;
        ++size_[col];
        if (first == kNone) {
          first = id;
        } else {
          nodes_[id].left = nodes_[first].left;
          nodes_[id].right = first;
          nodes_[nodes_[first].left].right = id;
          nodes_[first].left = id;
        }
      }
      row_start_.push_back(first);
    }
    covered_.assign(ncols + 1, '0');
  }

  /// The rows of column `col` (1-based header index) in order.
  std::vector<std::size_t> column_rows(std::size_t col) const {
    std::vector<std::size_t> out;
    for (std::size_t i = nodes_[col].down; i != col; i = nodes_[i].down) out.push_back(nodes_[i].row);
    return out;
  }

  std::size_t choose_column() const {
    std::size_t best = kNone;
    std::size_t best_size = kNone;
    for (std::size_t c = nodes_[0].right; c != 0; c = nodes_[c].right) {
      if (size_[c] < best_size) {
        best = c;
        best_size = size_[c];
        if (best_size == 0) break;
      }
    }
    return best;
  }

  void select_row(std::size_t r) {
    const std::size_t start = row_start_[r];
    cover(nodes_[start].col);
    for (std::size_t j = nodes_[start].right; j != start; j = nodes_[j].right) cover(nodes_[j].col);
    solution_.push_back(r);
  }

  bool search(std::size_t root) {
    if (nodes_[0].right == 0) return true;
    if (shared_.best_root.load(std::memory_order_relaxed) < root) return false;
    const std::uint64_t visited = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options_.max_nodes != 0 && visited > options_.max_nodes) {
      throw BudgetExceeded("sdepth search exceeded " + std::to_string(options_.max_nodes) +
                           " nodes");
    }
    if (failed_.count(covered_) != 0) return false;
    const std::size_t col = choose_column();
    if (size_[col] == 0) return false;
    const std::string key = covered_;

    cover(col);
    for (std::size_t i = nodes_[col].down; i != col; i = nodes_[i].down) {
      solution_.push_back(nodes_[i].row);
      for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) cover(nodes_[j].col);
      if (search(root)) return true;
      for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) uncover(nodes_[j].col);
      solution_.pop_back();
    }
    uncover(col);
    if (failed_.size() < kMemoLimit) failed_.insert(key);
    return false;
  }

  const std::vector<std::size_t>& solution() const { return solution_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kMemoLimit = 200000;

  struct Node {
    std::size_t left, right, up, down, col, row;
  };

  void cover(std::size_t c) {
    covered_[c] = '1';
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (std::size_t i = nodes_[c].down; i != c; i = nodes_[i].down) {
      for (std::size_t j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --size_[nodes_[j].col];
      }
    }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = nodes_[c].up; i != c; i = nodes_[i].up) {
      for (std::size_t j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++size_[nodes_[j].col];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
    covered_[c] = '0';
  }

  const CoverProblem& problem_;
  const SolverOptions& options_;
  SearchShared& shared_;
  std::vector<std::size_t> column_of_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> row_start_;
  std::vector<std::size_t> solution_;
  std::string covered_;
  std::unordered_set<std::string> failed_;
};

// The chosen rows plus singletons for the elements they leave out.
std::vector<PosetInterval> assemble(const CharacteristicPoset& poset, const CoverProblem& problem,
                                    const std::vector<std::size_t>& chosen) {
  std::vector<char> used(poset.box_size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t r : chosen) {
    pairs.push_back({problem.rows[r].bottom, problem.rows[r].top});
    for (std::size_t cell : problem.rows[r].cells) used[cell] = 1;
  }
  for (std::size_t code : problem.secondary) {
    if (!used[code]) pairs.push_back({code, code});
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<PosetInterval> out;
  out.reserve(pairs.size());
  for (auto [bottom, top] : pairs) out.push_back({poset.decode(bottom), poset.decode(top)});
  return out;
}

}  // namespace

std::optional<std::vector<PosetInterval>> find_partition(const CharacteristicPoset& poset,
                                                         std::size_t k,
                                                         const SolverOptions& options) {
  const CoverProblem problem = build_problem(poset, k);
  SearchShared shared;
  ExactCover probe(problem, poset.box_size(), options, shared);
  if (problem.primary.empty()) return assemble(poset, problem, {});
  const unsigned threads = std::max(1u, options.threads);
  const std::size_t root_col = probe.choose_column();
  const std::vector<std::size_t> roots = probe.column_rows(root_col);

  if (threads == 1 || roots.size() < 2) {
    if (probe.search(0)) return assemble(poset, problem, probe.solution());
    return std::nullopt;
  }

  // Workers claim first-level rows in order; the lowest successful index wins,
  // which is the solution the sequential search would have returned.
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::vector<std::optional<std::vector<std::size_t>>> found(roots.size());
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= roots.size() || shared.best_root.load() < i) return;
      ExactCover search(problem, poset.box_size(), options, shared);
      search.select_row(roots[i]);
      if (search.search(i)) {
        std::lock_guard<std::mutex> lock(mutex);
        found[i] = search.solution();
        std::size_t prev = shared.best_root.load();
        while (i < prev && !shared.best_root.compare_exchange_weak(prev, i)) {
        }
      }
    }
  };
  std::vector<std::future<void>> jobs;
  for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, worker));
  std::exception_ptr error;
  for (auto& job : jobs) {
    try {
      job.get();
    } catch (...) {
      if (!error) error = std::current_exception();
    }
  }
  const std::size_t best = shared.best_root.load();
  if (best < roots.size()) return assemble(poset, problem, *found[best]);
  if (error) std::rethrow_exception(error);
  return std::nullopt;
}

StanleyDecomposition lift_partition(const CharacteristicPoset& poset,
                                    const std::vector<PosetInterval>& partition) {
  StanleyDecomposition out(poset.ring());
  const auto& coords = poset.coords();
  for (const PosetInterval& iv : partition) {
    VarSet z;
    std::vector<std::size_t> fixed;
    for (std::size_t k : coords) {
      if (iv.top[k] == poset.g()[k]) {
        z.insert(k);
      } else {
        fixed.push_back(k);
      }
    }
    std::vector<Exponent> e(iv.bottom.exponents().begin(), iv.bottom.exponents().end());
    while (true) {
      out.add({Monomial(e), z});
      std::size_t j = fixed.size();
      while (j > 0) {
        const std::size_t k = fixed[j - 1];
        if (e[k] < iv.top[k]) {
          ++e[k];
          break;
        }
        e[k] = iv.bottom[k];
        --j;
      }
      if (j == 0) break;
    }
  }
  return out;
}

SdepthResult sdepth_exact(const MonomialIdeal& ideal, const SolverOptions& options) {
  return sdepth_exact(ideal, VarSet::all(ideal.nvars()), options);
}

SdepthResult sdepth_exact(const MonomialIdeal& ideal, VarSet ring_vars,
                          const SolverOptions& options) {
  const CharacteristicPoset poset(ideal, ring_vars, options.max_poset);
  for (std::size_t k = ring_vars.size() + 1; k-- > 0;) {
    if (auto partition = find_partition(poset, k, options)) {
      SdepthResult out{k, lift_partition(poset, *partition), std::move(*partition), poset.size()};
      return out;
    }
  }
  throw InvariantViolation("no interval partition found even with k = 0");
}

std::optional<SdepthResult> sdepth_at_least(const MonomialIdeal& ideal, VarSet ring_vars,
                                            std::size_t target, const SolverOptions& options) {
  const CharacteristicPoset poset(ideal, ring_vars, options.max_poset);
  auto partition = find_partition(poset, target, options);
  if (!partition) return std::nullopt;
  StanleyDecomposition witness = lift_partition(poset, *partition);
  const std::size_t achieved = witness.sdepth();
  return SdepthResult{achieved, std::move(witness), std::move(*partition), poset.size()};
}

}  // namespace mstanley
