#include "mstanley/invariants.hpp"

#include <algorithm>

#include "mstanley/errors.hpp"

namespace mstanley {

std::vector<VarSet> assoc_primes(const PrimaryDecomposition& decomposition) {
  std::vector<VarSet> out;
  for (const PrimaryComponent& c : decomposition.components()) {
    if (std::find(out.begin(), out.end(), c.radical()) == out.end()) out.push_back(c.radical());
  }
  return out;
}

SizeResult size(const PrimaryDecomposition& decomposition) {
  const std::size_t s = decomposition.size();
  if (s >= 32) throw InvalidArgument("size: too many components for subset enumeration");
  const VarSet full = decomposition.support();
  SizeResult out;
  out.h = full.size();
  out.v = s;
  for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
    const auto count = static_cast<std::size_t>(std::popcount(mask));
    if (count >= out.v) continue;
    VarSet covered;
    for (std::size_t i = 0; i < s; ++i) {
      if (mask & (1u << i)) covered = covered | decomposition[i].radical();
    }
    if (covered == full) out.v = count;
  }
  out.size = static_cast<long>(out.v) + static_cast<long>(decomposition.ring().n()) -
             static_cast<long>(out.h) - 1;
  return out;
}

std::size_t dim_quotient_of_sum(std::span<const VarSet> primes, const RingContext& ring) {
  VarSet u;
  for (VarSet p : primes) u = u | p;
  return ring.n() - u.size();
}

std::size_t depth_primary_quotient(const PrimaryComponent& component, const RingContext& ring) {
  return ring.n() - component.radical().size();
}

DepthResult depth_oracle(const MonomialIdeal& ideal, const BettiOptions& options) {
  const BettiTable table = betti_table(ideal, options);
  const std::size_t pd_quotient = table.max_index() + 1;
  const std::size_t n = ideal.nvars();
  if (pd_quotient > n) throw InvariantViolation("projective dimension exceeds the ring dimension");
  DepthResult out;
  out.depth_quotient = n - pd_quotient;
  out.depth_ideal = out.depth_quotient + 1;
  out.method = "oracle";
  return out;
}

bool contained_in_sum(const PrimaryComponent& qi, const PrimaryComponent& qj,
                      const PrimaryComponent& qk) {
  for (const Monomial& g : qi.ideal().gens()) {
    if (!qj.ideal().contains(g) && !qk.ideal().contains(g)) return false;
  }
  return true;
}

std::vector<PrimaryComponent> normalize_components(std::vector<PrimaryComponent> components) {
  std::vector<PrimaryComponent> merged;
  for (PrimaryComponent& c : components) {
    auto same = std::find_if(merged.begin(), merged.end(),
                             [&](const PrimaryComponent& m) { return m.radical() == c.radical(); });
    if (same == merged.end()) {
      merged.push_back(std::move(c));
    } else {
      *same = *as_primary(intersect(same->ideal(), c.ideal()));
    }
  }
  // Drop redundant components one at a time until none is left.
  for (bool changed = true; changed && merged.size() > 1;) {
    changed = false;
    MonomialIdeal full = merged.front().ideal();
    for (std::size_t i = 1; i < merged.size(); ++i) full = intersect(full, merged[i].ideal());
    for (std::size_t drop = 0; drop < merged.size(); ++drop) {
      std::optional<MonomialIdeal> rest;
      for (std::size_t i = 0; i < merged.size(); ++i) {
        if (i == drop) continue;
        rest = rest ? intersect(*rest, merged[i].ideal()) : merged[i].ideal();
      }
      if (*rest == full) {
        merged.erase(merged.begin() + static_cast<std::ptrdiff_t>(drop));
        changed = true;
        break;
      }
    }
  }
  return merged;
}

namespace {

struct CaseValue {
  std::size_t depth_quotient;
  std::string tag;
  bool conflict = false;
};

// Case analysis on the reduced ring, where the radicals cover every variable.
CaseValue reduced_depth(const std::vector<PrimaryComponent>& comps, VarSet ring_vars) {
  const std::size_t n = ring_vars.size();
  auto dim = [&](VarSet p) { return n - p.size(); };

  if (comps.size() == 1) return {dim(comps[0].radical()), "primary"};
  for (const PrimaryComponent& c : comps) {
    if (c.radical() == ring_vars) return {0, "maximal-prime"};
  }
  if (comps.size() == 2) return {1, "two-component"};

  std::vector<CaseValue> values;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = i == 0 ? 1 : 0;
    const std::size_t k = i == 2 ? 1 : 2;
    if (!contained_in_sum(comps[i], comps[j], comps[k])) continue;
    const VarSet p1 = comps[i].radical();
    const VarSet p2 = comps[j].radical();
    const VarSet p3 = comps[k].radical();
    const bool in2 = p1.subset_of(p2);
    const bool in3 = p1.subset_of(p3);
    if (!in2 && !in3) {
      values.push_back({1 + std::min(dim(p1 | p2), dim(p1 | p3)), "case-a"});
    } else if (in2 && !in3) {
      values.push_back({std::min(dim(p2), 1 + dim(p1 | p3)), "case-b"});
    } else if (!in2 && in3) {
      values.push_back({std::min(dim(p3), 1 + dim(p1 | p2)), "case-b"});
    } else {
      values.push_back({std::min(dim(p2), dim(p3)), "case-c"});
    }
  }
  if (values.empty()) {
    // No component lies in the sum of the other two: depth S/I equals size I.
    std::size_t v = 3;
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        if ((comps[a].radical() | comps[b].radical()) == ring_vars) v = 2;
      }
    }
    const std::size_t size_value = v - 1;
    return {size_value, size_value == 1 ? "case-d" : "case-e"};
  }
  CaseValue out = values.front();
  for (const CaseValue& other : values) {
    if (other.depth_quotient != out.depth_quotient) out.conflict = true;
  }
  return out;
}

}  // namespace

DepthResult depth_formula(const PrimaryDecomposition& decomposition) {
  if (decomposition.size() > 3) {
    throw InvalidArgument("depth_formula supports at most three components; use depth_oracle");
  }
  if (!is_irredundant(decomposition)) {
    throw InvalidArgument("depth_formula needs an irredundant decomposition");
  }
  return depth_formula(decomposition.components(), VarSet::all(decomposition.ring().n()));
}

DepthResult depth_formula(std::span<const PrimaryComponent> components, VarSet ring_vars) {
  if (components.empty() || components.size() > 3) {
    throw InvalidArgument("depth_formula supports one to three components");
  }
  std::vector<PrimaryComponent> comps =
      normalize_components({components.begin(), components.end()});
  VarSet support;
  for (const PrimaryComponent& c : comps) support = support | c.radical();
  if (!support.subset_of(ring_vars)) {
    throw InvalidArgument("component radicals leave the ring " + to_string(ring_vars));
  }
  const std::size_t free_vars = ring_vars.size() - support.size();

  const CaseValue value = reduced_depth(comps, support);
  DepthResult out;
  out.labeling_conflict = value.conflict;
  out.depth_quotient = value.depth_quotient + free_vars;
  out.depth_ideal = out.depth_quotient + 1;
  out.method = comps.size() < components.size() ? value.tag + "+merged" : value.tag;
  return out;
}

bool lyubeznik_bound_check(const PrimaryDecomposition& decomposition,
                           const BettiOptions& options) {
  const DepthResult depth = depth_oracle(decomposition.intersection(), options);
  return static_cast<long>(depth.depth_ideal) >= 1 + size(decomposition).size;
}

}  // namespace mstanley
