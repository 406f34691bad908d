#include "mstanley/ideal.hpp"

#include <algorithm>

#include "mstanley/errors.hpp"

namespace mstanley {

namespace {

void check_ring(const RingContext& ring, const Monomial& m) {
  if (m.nvars() != ring.n()) {
    throw InvalidArgument("ring mismatch: monomial " + to_string(m) + " has " +
                          std::to_string(m.nvars()) + " exponents, ring has " +
                          std::to_string(ring.n()));
  }
}

void check_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring() != b.ring()) throw InvalidArgument("ring mismatch between ideals");
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingContext ring) : ring_(ring) {}

MonomialIdeal::MonomialIdeal(RingContext ring, std::vector<Monomial> gens) : ring_(ring) {
  for (const Monomial& g : gens) check_ring(ring_, g);
  // Sorting lexicographically puts every divisor before its multiples, so a
  // single forward sweep keeps exactly the minimal elements.
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (Monomial& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                 [&](const Monomial& kept) { return divides(kept, g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::unit(RingContext ring) {
  return MonomialIdeal(ring, {Monomial::one(ring.n())});
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

bool MonomialIdeal::contains(const Monomial& m) const {
  check_ring(ring_, m);
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
}

VarSet MonomialIdeal::support() const {
  VarSet s;
  for (const Monomial& g : gens_) s = s | g.support();
  return s;
}

Monomial MonomialIdeal::gens_lcm() const {
  Monomial out = Monomial::one(ring_.n());
  for (const Monomial& g : gens_) out = lcm(out, g);
  return out;
}

MonomialIdeal minimalize(RingContext ring, std::vector<Monomial> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.num_gens() * b.num_gens());
  for (const Monomial& u : a.gens()) {
    for (const Monomial& v : b.gens()) gens.push_back(lcm(u, v));
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& w) {
  check_ring(ideal.ring(), w);
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_gens());
  for (const Monomial& g : ideal.gens()) gens.push_back(quotient(g, gcd(g, w)));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.num_gens());
  for (const Monomial& g : ideal.gens()) gens.push_back(squarefree_part(g));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ring(a, b);
  return std::all_of(a.gens().begin(), a.gens().end(),
                     [&](const Monomial& g) { return b.contains(g); });
}

SubringIdeal contract(const MonomialIdeal& ideal, VarSet vars) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    if (g.support().subset_of(vars)) gens.push_back(g);
  }
  return {vars, MonomialIdeal(ideal.ring(), std::move(gens))};
}

MonomialIdeal extend(const SubringIdeal& sub) { return sub.ideal; }

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const Monomial& g : ideal.gens()) {
    if (!first) out += ", ";
    out += to_string(g);
    first = false;
  }
  return out + ")";
}

}  // namespace mstanley
