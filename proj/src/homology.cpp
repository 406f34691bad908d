#include "mstanley/homology.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <unordered_map>

#include "mstanley/errors.hpp"

namespace mstanley {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
  Wide out;
  if (__builtin_mul_overflow(a, b, &out)) throw InvariantViolation("overflow in exact rank computation");
  return out;
}

Wide checked_sub(Wide a, Wide b) {
  Wide out;
  if (__builtin_sub_overflow(a, b, &out)) throw InvariantViolation("overflow in exact rank computation");
  return out;
}

// Fraction-free Gaussian elimination (Bareiss). Every intermediate entry is a
// minor of the input, so the divisions are exact.
std::size_t rank_rational(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::vector<std::vector<Wide>> m(rows.size(), std::vector<Wide>(ncols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) m[r][c] = rows[r][c];
  }
  Wide prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        m[r][c] = checked_sub(checked_mul(m[rank][col], m[r][c]),
                              checked_mul(m[r][col], m[rank][c])) /
                  prev_pivot;
      }
      m[r][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  const auto mod = static_cast<std::int64_t>(p);
  std::vector<std::vector<std::int64_t>> m = rows;
  for (auto& row : m) {
    for (auto& x : row) x = ((x % mod) + mod) % mod;
  }
  auto inverse = [&](std::int64_t a) {
    std::int64_t result = 1, base = a, e = mod - 2;
    while (e > 0) {
      if (e & 1) result = result * base % mod;
      base = base * base % mod;
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = inverse(m[rank][col]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const std::int64_t factor = m[r][col] * inv % mod;
      for (std::size_t c = col; c < ncols; ++c) {
        m[r][c] = ((m[r][c] - factor * m[rank][c]) % mod + mod) % mod;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InvalidArgument("unsupported field characteristic " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(const std::string& text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.rfind("fp:", 0) == 0) {
    const std::string digits = text.substr(3);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) ||
        digits.size() > 12) {
      throw InvalidArgument("bad field characteristic '" + digits + "'");
    }
    return prime(std::stoull(digits));
  }
  throw InvalidArgument("unknown field '" + text + "' (expected q or fp:<p>)");
}

std::string Field::name() const {
  return characteristic_ == 0 ? "q" : "fp:" + std::to_string(characteristic_);
}

std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, Field field) {
  if (field.characteristic() == 0) return rank_rational(std::move(rows));
  return rank_mod_p(rows, field.characteristic());
}

void BettiTable::set(std::size_t index, const Monomial& degree, std::size_t rank) {
  if (rank == 0) {
    entries_.erase({index, degree});
  } else {
    entries_[{index, degree}] = rank;
  }
}

std::size_t BettiTable::at(std::size_t index, const Monomial& degree) const {
  auto it = entries_.find({index, degree});
  return it == entries_.end() ? 0 : it->second;
}

std::size_t BettiTable::max_index() const {
  std::size_t out = 0;
  for (const auto& [key, rank] : entries_) out = std::max(out, key.first);
  return out;
}

std::size_t BettiTable::total(std::size_t index) const {
  std::size_t out = 0;
  for (const auto& [key, rank] : entries_) {
    if (key.first == index) out += rank;
  }
  return out;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size) {
  std::set<Monomial> lattice(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& l : frontier) {
      for (const Monomial& g : ideal.gens()) {
        Monomial m = lcm(l, g);
        if (lattice.insert(m).second) {
          if (lattice.size() > max_size) {
            throw BudgetExceeded("lcm lattice exceeds " + std::to_string(max_size) + " elements");
          }
          next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  return {lattice.begin(), lattice.end()};
}

std::vector<std::size_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& degree,
                                         Field field) {
  const std::vector<std::size_t> vars = degree.support().indices();
  const std::size_t k = vars.size();
  std::vector<std::size_t> result(k + 1, 0);
  if (!ideal.contains(degree)) return result;  // void complex

  // Faces are subsets of supp(a), encoded as masks over `vars`.
  std::vector<std::vector<std::uint32_t>> faces(k + 1);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<Exponent> e(degree.exponents().begin(), degree.exponents().end());
    for (std::size_t j = 0; j < k; ++j) {
      if (mask & (1u << j)) --e[vars[j]];
    }
    if (ideal.contains(Monomial(std::move(e)))) {
      faces[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
  }

  // rank of the boundary map from faces of cardinality c to cardinality c-1.
  std::vector<std::size_t> boundary_rank(k + 2, 0);
  for (std::size_t c = 1; c <= k; ++c) {
    if (faces[c].empty() || faces[c - 1].empty()) continue;
    std::unordered_map<std::uint32_t, std::size_t> row_of;
    for (std::size_t r = 0; r < faces[c - 1].size(); ++r) row_of[faces[c - 1][r]] = r;
    std::vector<std::vector<std::int64_t>> matrix(faces[c - 1].size(),
                                                  std::vector<std::int64_t>(faces[c].size(), 0));
    for (std::size_t col = 0; col < faces[c].size(); ++col) {
      const std::uint32_t face = faces[c][col];
      std::int64_t sign = 1;
      for (std::size_t j = 0; j < k; ++j) {
        if (!(face & (1u << j))) continue;
        auto it = row_of.find(face & ~(1u << j));
        if (it != row_of.end()) matrix[it->second][col] = sign;
        sign = -sign;
      }
    }
    boundary_rank[c] = matrix_rank(std::move(matrix), field);
  }
  for (std::size_t c = 0; c <= k; ++c) {
    result[c] = faces[c].size() - boundary_rank[c] - boundary_rank[c + 1];
  }
  return result;
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument("betti_table needs a non-zero proper ideal");
  }
  const std::vector<Monomial> lattice = lcm_lattice(ideal, options.max_lattice_size);
  std::vector<std::vector<std::size_t>> ranks(lattice.size());

  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < lattice.size(); i += stride) {
      ranks[i] = koszul_homology(ideal, lattice[i], options.field);
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1 || lattice.size() < 2 * threads) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t) jobs.push_back(std::async(std::launch::async, work, t, threads));
    for (auto& job : jobs) job.get();
  }

  BettiTable table;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t index = 0; index < ranks[i].size(); ++index) {
      table.set(index, lattice[i], ranks[i][index]);
    }
  }
  return table;
}

}  // namespace mstanley
