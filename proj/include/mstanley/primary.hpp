#ifndef MSTANLEY_PRIMARY_HPP
#define MSTANLEY_PRIMARY_HPP

#include <optional>
#include <vector>

#include "mstanley/ideal.hpp"

namespace mstanley {

/// A monomial primary ideal together with its radical support. Construct
/// through as_primary().
class PrimaryComponent {
 public:
  const MonomialIdeal& ideal() const { return ideal_; }
  VarSet radical() const { return radical_; }

  /// Smallest c with x_k^c in the ideal, for k in the radical.
  Exponent pure_power(std::size_t k) const;

  friend bool operator==(const PrimaryComponent&, const PrimaryComponent&) = default;

 private:
  friend std::optional<PrimaryComponent> as_primary(const MonomialIdeal& ideal);
  PrimaryComponent(MonomialIdeal ideal, VarSet radical)
      : ideal_(std::move(ideal)), radical_(radical) {}

  MonomialIdeal ideal_;
  VarSet radical_;
};

/// A monomial ideal is primary iff every variable dividing a generator has a
/// pure power among the generators. Returns nullopt for the zero ideal, the
/// unit ideal and non-primary ideals.
std::optional<PrimaryComponent> as_primary(const MonomialIdeal& ideal);

/// An ordered list of primary components in one ring.
class PrimaryDecomposition {
 public:
  /// Throws InvalidArgument if `components` is empty or mixes rings.
  PrimaryDecomposition(RingContext ring, std::vector<PrimaryComponent> components);

  const RingContext& ring() const { return ring_; }
  std::span<const PrimaryComponent> components() const { return components_; }
  const PrimaryComponent& operator[](std::size_t i) const { return components_[i]; }
  std::size_t size() const { return components_.size(); }

  /// Union of the radical supports.
  VarSet support() const;

  MonomialIdeal intersection() const;

  friend bool operator==(const PrimaryDecomposition&, const PrimaryDecomposition&) = default;

 private:
  RingContext ring_;
  std::vector<PrimaryComponent> components_;
};

/// True iff dropping any single component changes the intersection.
bool is_irredundant(const PrimaryDecomposition& decomposition);

/// Intersection of the components at `indices` (the unit ideal for none).
MonomialIdeal intersect_components(const PrimaryDecomposition& decomposition,
                                   std::span<const std::size_t> indices);

}  // namespace mstanley

#endif  // MSTANLEY_PRIMARY_HPP
