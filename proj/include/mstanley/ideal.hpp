#ifndef MSTANLEY_IDEAL_HPP
#define MSTANLEY_IDEAL_HPP

#include <span>
#include <string>
#include <vector>

#include "mstanley/monomial.hpp"

namespace mstanley {

/// A monomial ideal stored by its minimal generators in lexicographic order,
/// so equal ideals compare equal as values. No generators means the zero
/// ideal; the single generator 1 means the unit ideal.
class MonomialIdeal {
 public:
  /// The zero ideal of `ring`.
  explicit MonomialIdeal(RingContext ring);
  /// Minimalizes `gens`. Throws InvalidArgument on a ring mismatch.
  MonomialIdeal(RingContext ring, std::vector<Monomial> gens);

  static MonomialIdeal unit(RingContext ring);

  const RingContext& ring() const { return ring_; }
  std::size_t nvars() const { return ring_.n(); }
  std::span<const Monomial> gens() const { return gens_; }
  std::size_t num_gens() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_principal() const { return gens_.size() == 1; }

  /// Monomial membership: some generator divides m.
  bool contains(const Monomial& m) const;

  /// Union of the supports of the generators.
  VarSet support() const;

  /// Componentwise maximum of the generator exponents (the lcm of all gens).
  Monomial gens_lcm() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  RingContext ring_;
  std::vector<Monomial> gens_;
};

/// Keeps the divisibility-minimal elements and sorts them.
MonomialIdeal minimalize(RingContext ring, std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// a ⊆ b.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

/// An ideal of the sub-ring K[vars], kept in the ambient ring's coordinates.
struct SubringIdeal {
  VarSet vars;
  MonomialIdeal ideal;
};

/// I ∩ K[vars]: the generators of I supported in `vars`.
SubringIdeal contract(const MonomialIdeal& ideal, VarSet vars);

/// The extension of a sub-ring ideal back to the ambient ring. Coordinates are
/// shared, so this only drops the tag.
MonomialIdeal extend(const SubringIdeal& sub);

/// "(x1^2, x2)" or "(0)".
std::string to_string(const MonomialIdeal& ideal);

}  // namespace mstanley

#endif  // MSTANLEY_IDEAL_HPP
