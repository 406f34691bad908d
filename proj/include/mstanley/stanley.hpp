#ifndef MSTANLEY_STANLEY_HPP
#define MSTANLEY_STANLEY_HPP

#include <optional>
#include <string>
#include <vector>

#include "mstanley/ideal.hpp"

namespace mstanley {

/// The K-space u·K[Z].
struct StanleyInterval {
  Monomial base;
  VarSet zset;

  friend bool operator==(const StanleyInterval&, const StanleyInterval&) = default;
};

/// A finite list of Stanley spaces, meant to be a direct sum equal to an ideal.
class StanleyDecomposition {
 public:
  explicit StanleyDecomposition(RingContext ring, std::vector<StanleyInterval> intervals = {});

  const RingContext& ring() const { return ring_; }
  std::span<const StanleyInterval> intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }

  void add(StanleyInterval interval);
  void append(const StanleyDecomposition& other);

  /// min |Z| over the spaces. An empty decomposition (of the zero ideal)
  /// imposes no constraint and reports n.
  std::size_t sdepth() const;

  /// Multiplies every base by `w` (w·(uK[Z]) = (wu)K[Z]).
  StanleyDecomposition prefixed(const Monomial& w) const;
  /// Adds `vars` to every zset.
  StanleyDecomposition with_free_vars(VarSet vars) const;

 private:
  RingContext ring_;
  std::vector<StanleyInterval> intervals_;
};

/// True iff u·K[Z] and v·K[W] share a monomial.
bool spaces_intersect(const StanleyInterval& a, const StanleyInterval& b);

/// True iff m ∈ u·K[Z].
bool space_contains(const StanleyInterval& space, const Monomial& m);

struct ValidationResult {
  bool valid = false;
  std::string diagnostic;
  std::optional<Monomial> witness;

  explicit operator bool() const { return valid; }
};

/// Checks that `decomposition` is a Stanley decomposition of `ideal` viewed
/// in the sub-ring K[ring_vars]: every base lies in the ideal, the spaces are
/// pairwise disjoint, and every monomial of the ideal supported in
/// `ring_vars` is covered. Coverage is checked on the box with
/// B_k = 1 + (largest exponent of x_k among generators and bases), which is
/// exact: capping an uncovered monomial at B keeps it uncovered.
ValidationResult validate_decomposition(const MonomialIdeal& ideal,
                                        const StanleyDecomposition& decomposition);
ValidationResult validate_decomposition(const MonomialIdeal& ideal,
                                        const StanleyDecomposition& decomposition,
                                        VarSet ring_vars);

}  // namespace mstanley

#endif  // MSTANLEY_STANLEY_HPP
