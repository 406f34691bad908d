#ifndef MSTANLEY_SDEPTH_HPP
#define MSTANLEY_SDEPTH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mstanley/stanley.hpp"

namespace mstanley {

/// The finite poset { a ≤ g : x^a ∈ I } ordered componentwise, where g is the
/// lcm exponent of the minimal generators. Coordinates outside `ring_vars`
/// are always zero. Interval partitions of this poset correspond to Stanley
/// decompositions of I in K[ring_vars].
class CharacteristicPoset {
 public:
  /// Throws BudgetExceeded when the box Π(g_k + 1) exceeds `budget`, and
  /// InvalidArgument for the zero ideal or generators outside `ring_vars`.
  CharacteristicPoset(const MonomialIdeal& ideal, VarSet ring_vars, std::size_t budget);

  const Monomial& g() const { return g_; }
  VarSet ring_vars() const { return ring_vars_; }
  const RingContext& ring() const { return ring_; }

  /// Elements in lexicographic order.
  const std::vector<Monomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  /// #{k in ring_vars : b_k = g_k}.
  std::size_t rho(const Monomial& b) const;

  // Dense encoding of the box [0, g]; code order is lexicographic order.
  std::size_t box_size() const { return box_size_; }
  std::size_t encode(const Monomial& a) const;
  Monomial decode(std::size_t code) const;
  bool in_ideal(std::size_t code) const { return in_ideal_[code] != 0; }
  const std::vector<std::size_t>& coords() const { return coords_; }
  const std::vector<std::size_t>& strides() const { return strides_; }

 private:
  RingContext ring_;
  VarSet ring_vars_;
  Monomial g_;
  std::vector<std::size_t> coords_;
  std::vector<std::size_t> strides_;
  std::size_t box_size_ = 1;
  std::vector<char> in_ideal_;
  std::vector<Monomial> elements_;
};

/// A closed interval [bottom, top] of the characteristic poset.
struct PosetInterval {
  Monomial bottom;
  Monomial top;
};

struct SolverOptions {
  /// Largest characteristic-poset box the solver accepts.
  std::size_t max_poset = 4096;
  /// Search-node limit per target value; 0 means unlimited.
  std::uint64_t max_nodes = 0;
  /// Workers exploring disjoint first-level subtrees. Results do not depend
  /// on this value.
  unsigned threads = 1;
};

/// Finds a partition of the poset into intervals whose tops all satisfy
/// rho(top) ≥ k, or nullopt if none exists. Elements with rho ≥ k that no
/// chosen interval needs become singletons. The search is an exact cover
/// over the elements with rho < k: branch on the element with the fewest
/// admissible intervals (ties: lexicographically first), trying intervals by
/// bottom, then increasing rho(top), then top. The result is deterministic
/// and independent of the thread count.
std::optional<std::vector<PosetInterval>> find_partition(const CharacteristicPoset& poset,
                                                         std::size_t k,
                                                         const SolverOptions& options = {});

/// Turns an interval partition into Stanley spaces. Each [c, d] becomes the
/// spaces x^c' K[Z] with Z = {k : d_k = g_k}, where c' agrees with c on Z and
/// ranges over [c_k, d_k] elsewhere.
StanleyDecomposition lift_partition(const CharacteristicPoset& poset,
                                    const std::vector<PosetInterval>& partition);

struct SdepthResult {
  std::size_t sdepth = 0;
  StanleyDecomposition witness;
  std::vector<PosetInterval> partition;
  std::size_t poset_size = 0;
};

/// sdepth of the ideal in K[ring_vars], searching k downward from |ring_vars|.
SdepthResult sdepth_exact(const MonomialIdeal& ideal, const SolverOptions& options = {});
SdepthResult sdepth_exact(const MonomialIdeal& ideal, VarSet ring_vars,
                          const SolverOptions& options = {});

/// A decomposition with sdepth ≥ target, or nullopt if none exists.
std::optional<SdepthResult> sdepth_at_least(const MonomialIdeal& ideal, VarSet ring_vars,
                                            std::size_t target, const SolverOptions& options = {});

}  // namespace mstanley

#endif  // MSTANLEY_SDEPTH_HPP
