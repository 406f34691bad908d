#ifndef MSTANLEY_SPLIT_HPP
#define MSTANLEY_SPLIT_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mstanley/primary.hpp"
#include "mstanley/sdepth.hpp"

namespace mstanley {

/// Bookkeeping for one splitting step I = I' ⊕ J, where
/// I' = Q1 ∩ Q2 ∩ (Q3 ∩ K[P1])S and J = ⊕_w w·((I : w) ∩ K[S̄]).
struct SplitFrame {
  /// Indices of the components playing Q1, Q2, Q3; Q1 ⊂ Q2 + Q3.
  std::array<std::size_t, 3> labeling{};
  /// The ring the step happens in (free variables already removed).
  VarSet ring_vars;
  VarSet supp_p1;
  /// supp P1 ∩ supp P3. Never empty in this branch.
  VarSet overlap;
  /// Variables of S' (= supp P1).
  VarSet s_prime;
  /// Variables of S̄ (= ring_vars minus overlap).
  VarSet s_bar;
  /// Monomials of K[overlap] outside Q3, in lexicographic order.
  std::vector<Monomial> w_list;
};

/// Decides whether a normalized three-component list, read in K[ring_vars]
/// whose variables are all covered by the radicals, takes the splitting
/// branch: some Q1 lies in the sum of the other two and neither P1 + P2 nor
/// P1 + P3 is the whole variable set. The first admissible Q1 is used; the
/// other two keep their relative order.
std::optional<SplitFrame> split_frame(std::span<const PrimaryComponent> components,
                                      VarSet ring_vars);

/// The summands of one splitting step, in ambient coordinates.
struct SplitPieces {
  /// Q1, Q2 and the extension of Q3 ∩ K[P1].
  std::vector<PrimaryComponent> prime_components;
  MonomialIdeal prime_ideal;
  struct WPiece {
    Monomial w;
    /// Primary components of (I : w) ∩ K[S̄]; empty when it is the unit ideal.
    std::vector<PrimaryComponent> components;
    MonomialIdeal ideal;
  };
  /// One entry per w whose piece is non-zero.
  std::vector<WPiece> w_pieces;
};

SplitPieces split_pieces(std::span<const PrimaryComponent> components, const SplitFrame& frame);

/// Counts of monomials, supported in the frame's ring, inside the box
/// x_k ≤ 1 + (largest exponent of x_k among the generators of I).
struct BoxCount {
  std::size_t ideal = 0;
  std::size_t prime_part = 0;
  std::size_t w_part = 0;

  bool holds() const { return ideal == prime_part + w_part; }
};

BoxCount count_split_partition(std::span<const PrimaryComponent> components,
                               const SplitFrame& frame);

/// Per-run statistics of the recursive decomposer.
struct SplitTrace {
  std::size_t frames = 0;      // splitting steps taken
  std::size_t leaves = 0;      // solver calls
  std::size_t max_depth = 0;   // recursion depth
  /// Pieces whose own depth was below the bound the parent needed; the
  /// solver was asked for the larger value.
  std::size_t raised_targets = 0;
};

struct DecomposeOptions {
  SolverOptions solver;
};

/// Two primary components: a validated decomposition with
/// sdepth ≥ depth I, found by the solver with target depth I.
/// Throws InvariantViolation if no such decomposition exists.
StanleyDecomposition decompose_two_primary(const PrimaryDecomposition& decomposition,
                                           const DecomposeOptions& options = {});

/// Three primary components, built by the recursive splitting.
/// The result is validated before it is returned; a failed validation or an
/// sdepth below depth I throws InvariantViolation.
StanleyDecomposition decompose_three_primary(const PrimaryDecomposition& decomposition,
                                             const DecomposeOptions& options = {},
                                             SplitTrace* trace = nullptr);

/// Recursive decomposer for one to three components in K[ring_vars], with
/// every piece asked for sdepth ≥ max(its own depth, `required`).
StanleyDecomposition decompose_components(const RingContext& ring,
                                          std::vector<PrimaryComponent> components,
                                          VarSet ring_vars, std::size_t required,
                                          const DecomposeOptions& options,
                                          SplitTrace* trace = nullptr, std::size_t level = 0);

}  // namespace mstanley

#endif  // MSTANLEY_SPLIT_HPP
