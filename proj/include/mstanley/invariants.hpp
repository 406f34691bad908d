#ifndef MSTANLEY_INVARIANTS_HPP
#define MSTANLEY_INVARIANTS_HPP

#include <string>
#include <vector>

#include "mstanley/homology.hpp"
#include "mstanley/primary.hpp"

namespace mstanley {

/// Lyubeznik's size: v + (n - h) - 1.
struct SizeResult {
  std::size_t v = 0;  // fewest components whose radicals already sum to the full support
  std::size_t h = 0;  // height of the sum of all components
  long size = 0;

  friend bool operator==(const SizeResult&, const SizeResult&) = default;
};

struct DepthResult {
  std::size_t depth_quotient = 0;  // depth S/I
  std::size_t depth_ideal = 0;     // depth I = depth S/I + 1
  std::string method;              // "oracle" or a formula case tag
  /// Set when several admissible labelings of a containment case produced
  /// different values. `depth_quotient` is then the first labeling's value.
  bool labeling_conflict = false;
};

/// Radicals of the components, in order, without duplicates.
std::vector<VarSet> assoc_primes(const PrimaryDecomposition& decomposition);

SizeResult size(const PrimaryDecomposition& decomposition);

/// dim S/(sum of the primes) = n - |union of supports|.
std::size_t dim_quotient_of_sum(std::span<const VarSet> primes, const RingContext& ring);

/// depth S/Q = dim S/P for a P-primary Q.
std::size_t depth_primary_quotient(const PrimaryComponent& component, const RingContext& ring);

/// depth via Auslander–Buchsbaum from the multigraded Betti numbers of I.
DepthResult depth_oracle(const MonomialIdeal& ideal, const BettiOptions& options = {});

/// Q_i ⊂ Q_j + Q_k tested generator-wise.
bool contained_in_sum(const PrimaryComponent& qi, const PrimaryComponent& qj,
                      const PrimaryComponent& qk);

/// Closed-form depth for decompositions with at most three components.
/// Throws InvalidArgument for four or more components or a redundant input.
DepthResult depth_formula(const PrimaryDecomposition& decomposition);

/// The same formula for an irredundant list of components read as ideals of
/// the sub-ring K[ring_vars]; variables of `ring_vars` outside every radical
/// count as free.
DepthResult depth_formula(std::span<const PrimaryComponent> components, VarSet ring_vars);

/// depth I >= 1 + size I, with depth taken from the oracle.
bool lyubeznik_bound_check(const PrimaryDecomposition& decomposition,
                           const BettiOptions& options = {});

/// Merges components that share a radical (their intersection is again
/// primary with the same radical), then drops redundant components. The
/// intersection is unchanged.
std::vector<PrimaryComponent> normalize_components(std::vector<PrimaryComponent> components);

}  // namespace mstanley

#endif  // MSTANLEY_INVARIANTS_HPP
