#ifndef MSTANLEY_MONOMIAL_HPP
#define MSTANLEY_MONOMIAL_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mstanley {

using Exponent = std::uint32_t;

/// Upper bound on the number of ring variables (VarSet is a 64-bit mask).
inline constexpr std::size_t kMaxVariables = 64;

/// The polynomial ring K[x1..xn]. Only the variable count matters here; the
/// coefficient field enters solely through the homology oracle.
class RingContext {
 public:
  explicit RingContext(std::size_t n);

  std::size_t n() const { return n_; }
  std::string variable_name(std::size_t index) const;  // 0-based index -> "x<index+1>"

  friend bool operator==(const RingContext&, const RingContext&) = default;

 private:
  std::size_t n_;
};

/// A subset of variable indices, stored as a bitmask (bit k = variable x_{k+1}).
class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint64_t bits) : bits_(bits) {}
  VarSet(std::initializer_list<std::size_t> indices);

  static VarSet all(std::size_t n);
  static VarSet of(std::span<const std::size_t> indices);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U) != 0; }
  constexpr bool subset_of(VarSet other) const { return (bits_ & ~other.bits_) == 0; }

  void insert(std::size_t i);
  void erase(std::size_t i);

  /// Ascending 0-based indices.
  std::vector<std::size_t> indices() const;

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.bits_ | b.bits_); }
  friend constexpr VarSet operator&(VarSet a, VarSet b) { return VarSet(a.bits_ & b.bits_); }
  friend constexpr VarSet operator-(VarSet a, VarSet b) { return VarSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VarSet, VarSet) = default;
  friend constexpr auto operator<=>(VarSet a, VarSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// "{x1,x3}" style rendering.
std::string to_string(VarSet vars);

/// A monomial x^a represented by its exponent vector. The all-zero vector is 1.
/// The length of the vector is the number of ring variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial one(std::size_t n);
  static Monomial variable(std::size_t n, std::size_t index, Exponent power = 1);

  std::size_t nvars() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  bool is_one() const;
  VarSet support() const;
  std::uint64_t degree() const;

  /// Lexicographic on exponent vectors.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// u | v. Throws InvalidArgument when the rings differ.
bool divides(const Monomial& u, const Monomial& v);

Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);

/// Product with overflow checking.
Monomial operator*(const Monomial& u, const Monomial& v);

/// v / u; requires u | v.
Monomial quotient(const Monomial& v, const Monomial& u);

/// Product of the variables in the support.
Monomial squarefree_part(const Monomial& u);

/// Keep only the exponents of variables in `vars`; the rest become zero.
Monomial restrict_to(const Monomial& u, VarSet vars);

/// "x1^2*x3", or "1".
std::string to_string(const Monomial& u);

/// Throws InvalidArgument unless both monomials live in the same ring.
void check_same_ring(const Monomial& u, const Monomial& v);

}  // namespace mstanley

#endif  // MSTANLEY_MONOMIAL_HPP
