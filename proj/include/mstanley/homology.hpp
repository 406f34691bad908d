#ifndef MSTANLEY_HOMOLOGY_HPP
#define MSTANLEY_HOMOLOGY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mstanley/ideal.hpp"

namespace mstanley {

/// Coefficient field for homology ranks: the rationals (characteristic 0) or
/// a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws InvalidArgument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// "q" or "fp:<p>".
  static Field parse(const std::string& text);

  std::uint64_t characteristic() const { return characteristic_; }
  std::string name() const;

 private:
  explicit Field(std::uint64_t characteristic) : characteristic_(characteristic) {}
  std::uint64_t characteristic_;
};

/// Rank of an integer matrix over `field`. Rows of equal length.
std::size_t matrix_rank(std::vector<std::vector<std::int64_t>> rows, Field field);

/// Multigraded Betti numbers beta_{i,a} of an ideal, nonzero entries only.
class BettiTable {
 public:
  using Key = std::pair<std::size_t, Monomial>;

  void set(std::size_t index, const Monomial& degree, std::size_t rank);
  std::size_t at(std::size_t index, const Monomial& degree) const;
  const std::map<Key, std::size_t>& entries() const { return entries_; }

  /// Largest i with some beta_{i,a} nonzero; the projective dimension of I.
  std::size_t max_index() const;
  /// Total Betti number beta_i = sum over multidegrees.
  std::size_t total(std::size_t index) const;

 private:
  std::map<Key, std::size_t> entries_;
};

struct BettiOptions {
  Field field = Field::rationals();
  std::size_t max_lattice_size = 1u << 16;
  unsigned threads = 1;
};

/// Elements of the lcm lattice of the minimal generators: lcms of every
/// non-empty subset of generators, sorted.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::size_t max_size);

/// Reduced homology ranks of the upper Koszul complex
/// K^a(I) = { F ⊆ supp(a) : x^a / x^F ∈ I }; entry d is dim H~_{d-1}, so
/// entry i is beta_{i,a}(I).
std::vector<std::size_t> koszul_homology(const MonomialIdeal& ideal, const Monomial& degree,
                                         Field field);

/// Requires a non-zero proper ideal.
BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options = {});

}  // namespace mstanley

#endif  // MSTANLEY_HOMOLOGY_HPP
