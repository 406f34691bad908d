#ifndef MSTANLEY_INSTANCE_HPP
#define MSTANLEY_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mstanley/errors.hpp"
#include "mstanley/primary.hpp"

namespace mstanley {

class ParseError : public InvalidArgument {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A decomposition instance as written in an instance file:
///
///     ring 4
///     # comment
///     component: x1^2, x1*x2, x2^2
///     component: x1^2, x3
///
/// Generators are kept in the order written.
struct InstanceSpec {
  std::size_t n = 0;
  std::vector<std::vector<Monomial>> components;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

enum class RedundancyPolicy { kReject, kAllow };

InstanceSpec parse_instance(const std::string& text);
std::string print_instance(const InstanceSpec& spec);

/// Parses one monomial such as "x1^2*x3" in a ring with n variables.
Monomial parse_monomial(const std::string& text, std::size_t n);

/// Builds the decomposition. Throws InvalidArgument if a component is not
/// primary, or (under kReject) if the decomposition is redundant.
PrimaryDecomposition to_decomposition(const InstanceSpec& spec,
                                      RedundancyPolicy policy = RedundancyPolicy::kReject);

/// Canonical form: minimal generators in decreasing lex order.
InstanceSpec to_spec(const PrimaryDecomposition& decomposition);

/// Parameters for the seeded instance generator.
struct RandomParams {
  std::uint64_t seed = 1;
  std::size_t n = 4;
  std::size_t components = 3;
  Exponent max_exp = 2;
  /// Upper bound on the generators of one component, pure powers included.
  std::size_t max_gens = 6;
  /// Require the radicals to cover every variable.
  bool reject_free_vars = true;
  /// Allow a component whose radical is the whole variable set.
  bool allow_maximal = false;
  std::size_t max_attempts = 100000;
};

/// Draws an irredundant decomposition with pairwise distinct radicals by
/// rejection sampling. Identical params give identical instances on every
/// platform. Throws BudgetExceeded when no draw is accepted.
PrimaryDecomposition random_instance(const RandomParams& params);

/// Derives the seed of instance `index` in a batch.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace mstanley

#endif  // MSTANLEY_INSTANCE_HPP
