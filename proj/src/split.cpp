#include "mstanley/split.hpp"

#include <algorithm>
#include <map>

#include "mstanley/errors.hpp"
#include "mstanley/invariants.hpp"

namespace mstanley {

namespace {

MonomialIdeal intersect_all(const RingContext& ring, std::span<const PrimaryComponent> comps) {
  MonomialIdeal out = MonomialIdeal::unit(ring);
  for (const PrimaryComponent& c : comps) out = intersect(out, c.ideal());
  return out;
}

PrimaryComponent require_primary(const MonomialIdeal& ideal, const char* what) {
  auto primary = as_primary(ideal);
  if (!primary) {
    throw InvariantViolation(std::string(what) + " " + to_string(ideal) + " is not primary");
  }
  return std::move(*primary);
}

}  // namespace

std::optional<SplitFrame> split_frame(std::span<const PrimaryComponent> components,
                                      VarSet ring_vars) {
  if (components.size() != 3) return std::nullopt;
  for (const PrimaryComponent& c : components) {
    if (c.radical() == ring_vars) return std::nullopt;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = i == 0 ? 1 : 0;
    const std::size_t k = i == 2 ? 1 : 2;
    if (!contained_in_sum(components[i], components[j], components[k])) continue;

    const VarSet p1 = components[i].radical();
    const VarSet p2 = components[j].radical();
    const VarSet p3 = components[k].radical();
    if ((p1 | p2) == ring_vars || (p1 | p3) == ring_vars) return std::nullopt;

    SplitFrame frame;
    frame.labeling = {i, j, k};
    frame.ring_vars = ring_vars;
    frame.supp_p1 = p1;
    frame.overlap = p1 & p3;
    frame.s_prime = p1;
    frame.s_bar = ring_vars - frame.overlap;
    if (frame.overlap.empty()) {
      throw InvariantViolation("Q1 lies in Q2 + Q3 but its radical misses P3; input is redundant");
    }

    const PrimaryComponent& q3 = components[k];
    const std::vector<std::size_t> coords = frame.overlap.indices();
    const std::size_t n = q3.ideal().nvars();
    std::vector<Exponent> limit(n, 0);
    for (std::size_t c : coords) limit[c] = q3.pure_power(c) - 1;
    std::vector<Exponent> e(n, 0);
    while (true) {
      Monomial w(e);
      if (!q3.ideal().contains(w)) frame.w_list.push_back(std::move(w));
      std::size_t pos = coords.size();
      while (pos > 0) {
        const std::size_t c = coords[pos - 1];
        if (e[c] < limit[c]) {
          ++e[c];
          break;
        }
        e[c] = 0;
        --pos;
      }
      if (pos == 0) break;
    }
    return frame;
  }
  return std::nullopt;
}

SplitPieces split_pieces(std::span<const PrimaryComponent> components, const SplitFrame& frame) {
  const RingContext& ring = components.front().ideal().ring();
  const PrimaryComponent& q1 = components[frame.labeling[0]];
  const PrimaryComponent& q2 = components[frame.labeling[1]];
  const PrimaryComponent& q3 = components[frame.labeling[2]];

  SplitPieces out{{}, MonomialIdeal(ring), {}};
  const MonomialIdeal q3_prime = extend(contract(q3.ideal(), frame.s_prime));
  out.prime_components = {q1, q2, require_primary(q3_prime, "(Q3 ∩ S')S")};
  out.prime_ideal = intersect_all(ring, out.prime_components);

  for (const Monomial& w : frame.w_list) {
    std::vector<PrimaryComponent> comps;
    bool zero = false;
    for (const PrimaryComponent& q : components) {
      const MonomialIdeal quotient_ideal = colon(q.ideal(), w);
      if (quotient_ideal.is_unit()) continue;
      const MonomialIdeal restricted = contract(quotient_ideal, frame.s_bar).ideal;
      if (restricted.is_zero()) {
        zero = true;
        break;
      }
      comps.push_back(require_primary(restricted, "(Q:w) ∩ S̄"));
    }
    if (zero) continue;
    MonomialIdeal ideal = intersect_all(ring, comps);
    out.w_pieces.push_back({w, std::move(comps), std::move(ideal)});
  }
  return out;
}

BoxCount count_split_partition(std::span<const PrimaryComponent> components,
                               const SplitFrame& frame) {
  const RingContext& ring = components.front().ideal().ring();
  const MonomialIdeal ideal = intersect_all(ring, components);
  const SplitPieces pieces = split_pieces(components, frame);
  const PrimaryComponent& q3 = components[frame.labeling[2]];
  std::map<Monomial, const MonomialIdeal*> by_w;
  for (const auto& piece : pieces.w_pieces) by_w[piece.w] = &piece.ideal;

  const std::size_t n = ring.n();
  std::vector<Exponent> bound(n, 0);
  for (const Monomial& g : ideal.gens()) {
    for (std::size_t k = 0; k < n; ++k) bound[k] = std::max(bound[k], g[k] + 1);
  }
  const std::vector<std::size_t> coords = frame.ring_vars.indices();
  BoxCount count;
  std::vector<Exponent> e(n, 0);
  while (true) {
    const Monomial m(e);
    if (ideal.contains(m)) ++count.ideal;
    if (pieces.prime_ideal.contains(m)) ++count.prime_part;
    const Monomial v = restrict_to(m, frame.overlap);
    if (!q3.ideal().contains(v)) {
      auto it = by_w.find(v);
      if (it != by_w.end() && it->second->contains(restrict_to(m, frame.s_bar))) ++count.w_part;
    }
    std::size_t pos = coords.size();
    while (pos > 0) {
      const std::size_t k = coords[pos - 1];
      if (e[k] < bound[k]) {
        ++e[k];
        break;
      }
      e[k] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return count;
}

StanleyDecomposition decompose_components(const RingContext& ring,
                                          std::vector<PrimaryComponent> components,
                                          VarSet ring_vars, std::size_t required,
                                          const DecomposeOptions& options, SplitTrace* trace,
                                          std::size_t level) {
  if (trace) trace->max_depth = std::max(trace->max_depth, level);
  std::vector<PrimaryComponent> comps = normalize_components(std::move(components));
  StanleyDecomposition out(ring);
  if (comps.empty()) {
    out.add({Monomial::one(ring.n()), ring_vars});
    return out;
  }
  VarSet support;
  for (const PrimaryComponent& c : comps) support = support | c.radical();
  if (!support.subset_of(ring_vars)) throw InvalidArgument("components leave the ring");
  const VarSet free_vars = ring_vars - support;
  const std::size_t reduced_required =
      required > free_vars.size() ? required - free_vars.size() : 0;

  const std::size_t own = depth_formula(comps, support).depth_ideal;
  if (reduced_required > own && trace) ++trace->raised_targets;
  const std::size_t target = std::max(own, reduced_required);

  StanleyDecomposition reduced(ring);
  if (auto frame = split_frame(comps, support)) {
    if (trace) ++trace->frames;
    const SplitPieces pieces = split_pieces(comps, *frame);
    reduced.append(decompose_components(ring, pieces.prime_components, support, target, options,
                                        trace, level + 1));
    for (const auto& piece : pieces.w_pieces) {
      if (piece.components.empty()) {
        reduced.add({piece.w, frame->s_bar});
        continue;
      }
      reduced.append(decompose_components(ring, piece.components, frame->s_bar, target, options,
                                          trace, level + 1)
                         .prefixed(piece.w));
    }
  } else {
    if (trace) ++trace->leaves;
    const MonomialIdeal ideal = intersect_all(ring, comps);
    auto found = sdepth_at_least(ideal, support, target, options.solver);
    if (!found) {
      throw InvariantViolation("no Stanley decomposition of " + to_string(ideal) +
                               " reaches sdepth " + std::to_string(target));
    }
    reduced = std::move(found->witness);
  }
  return reduced.with_free_vars(free_vars);
}

StanleyDecomposition decompose_two_primary(const PrimaryDecomposition& decomposition,
                                           const DecomposeOptions& options) {
  if (decomposition.size() != 2) {
    throw InvalidArgument("decompose_two_primary needs exactly two components");
  }
  const DepthResult depth = depth_formula(decomposition);
  const MonomialIdeal ideal = decomposition.intersection();
  auto found = sdepth_at_least(ideal, VarSet::all(decomposition.ring().n()), depth.depth_ideal,
                               options.solver);
  if (!found) {
    throw InvariantViolation("no Stanley decomposition of " + to_string(ideal) +
                             " reaches depth " + std::to_string(depth.depth_ideal));
  }
  const ValidationResult check = validate_decomposition(ideal, found->witness);
  if (!check) throw InvariantViolation("solver witness failed validation: " + check.diagnostic);
  return std::move(found->witness);
}

StanleyDecomposition decompose_three_primary(const PrimaryDecomposition& decomposition,
                                             const DecomposeOptions& options, SplitTrace* trace) {
  if (decomposition.size() != 3) {
    throw InvalidArgument("decompose_three_primary needs exactly three components");
  }
  const DepthResult depth = depth_formula(decomposition);
  const MonomialIdeal ideal = decomposition.intersection();
  StanleyDecomposition out = decompose_components(
      decomposition.ring(), {decomposition.components().begin(), decomposition.components().end()},
      VarSet::all(decomposition.ring().n()), depth.depth_ideal, options, trace);
  const ValidationResult check = validate_decomposition(ideal, out);
  if (!check) throw InvariantViolation("split decomposition failed validation: " + check.diagnostic);
  if (out.sdepth() < depth.depth_ideal) {
    throw InvariantViolation("split decomposition has sdepth " + std::to_string(out.sdepth()) +
                             " below depth " + std::to_string(depth.depth_ideal));
  }
  return out;
}

}  // namespace mstanley
