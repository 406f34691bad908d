#include "mstanley/monomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "mstanley/errors.hpp"

namespace mstanley {

RingContext::RingContext(std::size_t n) : n_(n) {
  if (n == 0 || n > kMaxVariables) {
    throw InvalidArgument("ring must have between 1 and 64 variables, got " + std::to_string(n));
  }
}

std::string RingContext::variable_name(std::size_t index) const {
  return "x" + std::to_string(index + 1);
}

VarSet::VarSet(std::initializer_list<std::size_t> indices) {
  for (std::size_t i : indices) insert(i);
}

VarSet VarSet::all(std::size_t n) {
  if (n > kMaxVariables) throw InvalidArgument("VarSet supports at most 64 variables");
  return n == 64 ? VarSet(~std::uint64_t{0}) : VarSet((std::uint64_t{1} << n) - 1);
}

VarSet VarSet::of(std::span<const std::size_t> indices) {
  VarSet out;
  for (std::size_t i : indices) out.insert(i);
  return out;
}

void VarSet::insert(std::size_t i) {
  if (i >= kMaxVariables) throw InvalidArgument("variable index out of range");
  bits_ |= std::uint64_t{1} << i;
}

void VarSet::erase(std::size_t i) {
  if (i < kMaxVariables) bits_ &= ~(std::uint64_t{1} << i);
}

std::vector<std::size_t> VarSet::indices() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

std::string to_string(VarSet vars) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : vars.indices()) {
    if (!first) out += ",";
    out += "x" + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

Monomial::Monomial(std::initializer_list<Exponent> exponents) : exps_(exponents) {}

Monomial Monomial::one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }

Monomial Monomial::variable(std::size_t n, std::size_t index, Exponent power) {
  if (index >= n) throw InvalidArgument("variable index out of range");
  std::vector<Exponent> e(n, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

VarSet Monomial::support() const {
  VarSet s;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0) s.insert(i);
  }
  return s;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

void check_same_ring(const Monomial& u, const Monomial& v) {
  if (u.nvars() != v.nvars()) {
    throw InvalidArgument("ring mismatch: monomials in " + std::to_string(u.nvars()) + " and " +
                          std::to_string(v.nvars()) + " variables");
  }
}

bool divides(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  for (std::size_t i = 0; i < u.nvars(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  std::vector<Exponent> e(u.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  std::vector<Exponent> e(u.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  check_same_ring(u, v);
  std::vector<Exponent> e(u.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (__builtin_add_overflow(u[i], v[i], &e[i])) {
      throw InvalidArgument("exponent overflow in monomial product");
    }
  }
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& v, const Monomial& u) {
  if (!divides(u, v)) {
    throw InvalidArgument(to_string(u) + " does not divide " + to_string(v));
  }
  std::vector<Exponent> e(v.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = v[i] - u[i];
  return Monomial(std::move(e));
}

Monomial squarefree_part(const Monomial& u) {
  std::vector<Exponent> e(u.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = u[i] == 0 ? 0 : 1;
  return Monomial(std::move(e));
}

Monomial restrict_to(const Monomial& u, VarSet vars) {
  std::vector<Exponent> e(u.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = vars.contains(i) ? u[i] : 0;
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& u) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < u.nvars(); ++i) {
    if (u[i] == 0) continue;
    if (!first) out << '*';
    out << 'x' << (i + 1);
    if (u[i] > 1) out << '^' << u[i];
    first = false;
  }
  if (first) return "1";
  return out.str();
}

}  // namespace mstanley
