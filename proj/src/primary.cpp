#include "mstanley/primary.hpp"

#include <limits>

#include "mstanley/errors.hpp"

namespace mstanley {

Exponent PrimaryComponent::pure_power(std::size_t k) const {
  if (!radical_.contains(k)) {
    throw InvalidArgument("variable " + std::to_string(k + 1) + " is not in the radical");
  }
  Exponent best = std::numeric_limits<Exponent>::max();
  for (const Monomial& g : ideal_.gens()) {
    if (g.support() == VarSet{k}) best = std::min(best, g[k]);
  }
  return best;
}

std::optional<PrimaryComponent> as_primary(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return std::nullopt;
  VarSet support;
  VarSet pure;
  for (const Monomial& g : ideal.gens()) {
    VarSet s = g.support();
    support = support | s;
    if (s.size() == 1) pure = pure | s;
  }
  if (support != pure) return std::nullopt;
  return PrimaryComponent(ideal, support);
}

PrimaryDecomposition::PrimaryDecomposition(RingContext ring,
                                           std::vector<PrimaryComponent> components)
    : ring_(ring), components_(std::move(components)) {
  if (components_.empty()) throw InvalidArgument("a primary decomposition needs a component");
  for (const PrimaryComponent& c : components_) {
    if (c.ideal().ring() != ring_) throw InvalidArgument("ring mismatch in primary decomposition");
  }
}

VarSet PrimaryDecomposition::support() const {
  VarSet s;
  for (const PrimaryComponent& c : components_) s = s | c.radical();
  return s;
}

MonomialIdeal PrimaryDecomposition::intersection() const {
  MonomialIdeal out = components_.front().ideal();
  for (std::size_t i = 1; i < components_.size(); ++i) out = intersect(out, components_[i].ideal());
  return out;
}

MonomialIdeal intersect_components(const PrimaryDecomposition& decomposition,
                                   std::span<const std::size_t> indices) {
  MonomialIdeal out = MonomialIdeal::unit(decomposition.ring());
  for (std::size_t i : indices) out = intersect(out, decomposition[i].ideal());
  return out;
}

bool is_irredundant(const PrimaryDecomposition& decomposition) {
  const MonomialIdeal full = decomposition.intersection();
  for (std::size_t drop = 0; drop < decomposition.size(); ++drop) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < decomposition.size(); ++i) {
      if (i != drop) rest.push_back(i);
    }
    if (intersect_components(decomposition, rest) == full) return false;
  }
  return true;
}

}  // namespace mstanley
