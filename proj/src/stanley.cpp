#include "mstanley/stanley.hpp"

#include <algorithm>
#include <limits>

#include "mstanley/errors.hpp"

namespace mstanley {

StanleyDecomposition::StanleyDecomposition(RingContext ring, std::vector<StanleyInterval> intervals)
    : ring_(ring), intervals_(std::move(intervals)) {
  for (const StanleyInterval& s : intervals_) {
    if (s.base.nvars() != ring_.n()) throw InvalidArgument("ring mismatch in Stanley decomposition");
  }
}

void StanleyDecomposition::add(StanleyInterval interval) {
  if (interval.base.nvars() != ring_.n()) {
    throw InvalidArgument("ring mismatch in Stanley decomposition");
  }
  intervals_.push_back(std::move(interval));
}

void StanleyDecomposition::append(const StanleyDecomposition& other) {
  if (other.ring_ != ring_) throw InvalidArgument("ring mismatch in Stanley decomposition");
  intervals_.insert(intervals_.end(), other.intervals_.begin(), other.intervals_.end());
}

std::size_t StanleyDecomposition::sdepth() const {
  std::size_t out = ring_.n();
  for (const StanleyInterval& s : intervals_) out = std::min(out, s.zset.size());
  return out;
}

StanleyDecomposition StanleyDecomposition::prefixed(const Monomial& w) const {
  StanleyDecomposition out(ring_);
  for (const StanleyInterval& s : intervals_) out.add({w * s.base, s.zset});
  return out;
}

StanleyDecomposition StanleyDecomposition::with_free_vars(VarSet vars) const {
  StanleyDecomposition out(ring_);
  for (const StanleyInterval& s : intervals_) out.add({s.base, s.zset | vars});
  return out;
}

bool spaces_intersect(const StanleyInterval& a, const StanleyInterval& b) {
  check_same_ring(a.base, b.base);
  for (std::size_t k = 0; k < a.base.nvars(); ++k) {
    const bool free_a = a.zset.contains(k);
    const bool free_b = b.zset.contains(k);
    if (free_a && free_b) continue;
    if (free_a && b.base[k] < a.base[k]) return false;
    if (free_b && a.base[k] < b.base[k]) return false;
    if (!free_a && !free_b && a.base[k] != b.base[k]) return false;
  }
  return true;
}

bool space_contains(const StanleyInterval& space, const Monomial& m) {
  check_same_ring(space.base, m);
  for (std::size_t k = 0; k < m.nvars(); ++k) {
    if (space.zset.contains(k) ? m[k] < space.base[k] : m[k] != space.base[k]) return false;
  }
  return true;
}

ValidationResult validate_decomposition(const MonomialIdeal& ideal,
                                        const StanleyDecomposition& decomposition) {
  return validate_decomposition(ideal, decomposition, VarSet::all(ideal.nvars()));
}

ValidationResult validate_decomposition(const MonomialIdeal& ideal,
                                        const StanleyDecomposition& decomposition,
                                        VarSet ring_vars) {
  if (ideal.ring() != decomposition.ring()) {
    throw InvalidArgument("ring mismatch between ideal and decomposition");
  }
  const std::size_t n = ideal.nvars();
  auto fail = [](std::string message, std::optional<Monomial> witness) {
    ValidationResult r;
    r.diagnostic = std::move(message);
    r.witness = std::move(witness);
    return r;
  };

  const auto spaces = decomposition.intervals();
  for (const StanleyInterval& s : spaces) {
    if (!s.base.support().subset_of(ring_vars) || !s.zset.subset_of(ring_vars)) {
      return fail("space " + to_string(s.base) + "K" + to_string(s.zset) +
                      " leaves the ring " + to_string(ring_vars),
                  s.base);
    }
    if (!ideal.contains(s.base)) {
      return fail("base " + to_string(s.base) + " is not in the ideal", s.base);
    }
  }
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    for (std::size_t j = i + 1; j < spaces.size(); ++j) {
      if (spaces_intersect(spaces[i], spaces[j])) {
        const Monomial common = lcm(spaces[i].base, spaces[j].base);
        return fail("spaces " + std::to_string(i) + " and " + std::to_string(j) + " overlap at " +
                        to_string(common),
                    common);
      }
    }
  }

  std::vector<Exponent> bound(n, 0);
  for (const Monomial& g : ideal.gens()) {
    for (std::size_t k = 0; k < n; ++k) bound[k] = std::max(bound[k], g[k]);
  }
  for (const StanleyInterval& s : spaces) {
    for (std::size_t k = 0; k < n; ++k) bound[k] = std::max(bound[k], s.base[k]);
  }
  const std::vector<std::size_t> coords = ring_vars.indices();
  double box = 1;
  for (std::size_t k : coords) box *= static_cast<double>(bound[k]) + 2;
  if (box > 5e7) throw BudgetExceeded("coverage box too large to enumerate");

  std::vector<Exponent> e(n, 0);
  while (true) {
    const Monomial m(e);
    if (ideal.contains(m)) {
      const bool covered = std::any_of(spaces.begin(), spaces.end(),
                                       [&](const StanleyInterval& s) { return space_contains(s, m); });
      if (!covered) return fail("monomial " + to_string(m) + " is not covered", m);
    }
    // Odometer over the box, last coordinate fastest.
    std::size_t pos = coords.size();
    while (pos > 0) {
      const std::size_t k = coords[pos - 1];
      if (e[k] < bound[k] + 1) {
        ++e[k];
        break;
      }
      e[k] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  ValidationResult ok;
  ok.valid = true;
  return ok;
}

}  // namespace mstanley
