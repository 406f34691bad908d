// Test helpers and brute-force oracles. The oracles work on plain exponent
// vectors and do not call into the library's arithmetic.
#ifndef MSTANLEY_TESTS_SUPPORT_HPP
#define MSTANLEY_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mstanley/instance.hpp"
#include "mstanley/report.hpp"

namespace testing_support {

using Exps = std::vector<unsigned>;

inline mstanley::Monomial mon(std::initializer_list<mstanley::Exponent> e) {
  return mstanley::Monomial(std::vector<mstanley::Exponent>(e));
}

inline mstanley::MonomialIdeal ideal(std::size_t n,
                                     std::initializer_list<std::initializer_list<mstanley::Exponent>> gens) {
  std::vector<mstanley::Monomial> out;
  for (auto g : gens) out.push_back(mon(g));
  return mstanley::MonomialIdeal(mstanley::RingContext(n), std::move(out));
}

inline mstanley::PrimaryDecomposition decomp(const std::string& text) {
  return mstanley::to_decomposition(mstanley::parse_instance(text));
}

inline Exps exps(const mstanley::Monomial& m) { return {m.exponents().begin(), m.exponents().end()}; }

inline std::vector<Exps> gens_of(const mstanley::MonomialIdeal& I) {
  std::vector<Exps> out;
  for (const auto& g : I.gens()) out.push_back(exps(g));
  return out;
}

// Calls f on every exponent vector in [0, bound] (inclusive), last coordinate fastest.
inline void for_box(const Exps& bound, const std::function<void(const Exps&)>& f) {
  Exps e(bound.size(), 0);
  while (true) {
    f(e);
    std::size_t k = bound.size();
    while (k > 0) {
      if (e[k - 1] < bound[k - 1]) {
        ++e[k - 1];
        break;
      }
      e[k - 1] = 0;
      --k;
    }
    if (k == 0) return;
  }
}

inline bool leq(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

inline bool member(const std::vector<Exps>& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return leq(g, m); });
}

inline mstanley::Monomial to_mon(const Exps& e) {
  return mstanley::Monomial(std::vector<mstanley::Exponent>(e.begin(), e.end()));
}

// Random ideal with up to `max_gens` generators, exponents in [0, max_exp].
inline mstanley::MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, unsigned max_exp,
                                            std::size_t max_gens) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<mstanley::Monomial> gens;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<mstanley::Exponent> e(n);
    for (auto& x : e) x = exp(rng);
    gens.emplace_back(std::move(e));
  }
  return mstanley::MonomialIdeal(mstanley::RingContext(n), std::move(gens));
}

// sdepth by exhaustive search over all partitions of the characteristic
// poset into intervals, scored by the smallest number of coordinates at
// which an interval top reaches g. Each partition is met by always placing
// the lex-first uncovered element at the bottom of a new interval; the
// memo on the covered set keeps the enumeration exhaustive and cheap.
inline std::size_t brute_sdepth(const std::vector<Exps>& gens, std::size_t n) {
  Exps g(n, 0);
  for (const Exps& x : gens) {
    for (std::size_t k = 0; k < n; ++k) g[k] = std::max(g[k], x[k]);
  }
  std::vector<Exps> elems;
  for_box(g, [&](const Exps& a) {
    if (member(gens, a)) elems.push_back(a);
  });
  std::sort(elems.begin(), elems.end());
  const std::size_t count = elems.size();
  if (count > 63) throw std::runtime_error("brute_sdepth: poset too large");
  auto rho = [&](const Exps& b) {
    std::size_t r = 0;
    for (std::size_t k = 0; k < n; ++k) r += b[k] == g[k];
    return r;
  };
  std::map<std::uint64_t, long> memo;
  const std::uint64_t full = count == 64 ? ~0ULL : (1ULL << count) - 1;
  std::function<long(std::uint64_t)> best = [&](std::uint64_t covered) -> long {
    if (covered == full) return static_cast<long>(n);
    if (auto it = memo.find(covered); it != memo.end()) return it->second;
    std::size_t x = 0;
    while ((covered >> x) & 1ULL) ++x;
    long result = -1;
    for (std::size_t d = 0; d < count; ++d) {
      if (!leq(elems[x], elems[d])) continue;
      std::uint64_t interval = 0;
      bool free = true;
      for (std::size_t y = 0; y < count && free; ++y) {
        if (leq(elems[x], elems[y]) && leq(elems[y], elems[d])) {
          if ((covered >> y) & 1ULL) free = false;
          interval |= 1ULL << y;
        }
      }
      // Every point of [x, d] lies in the poset since it is above x.
      if (!free) continue;
      const long score = static_cast<long>(rho(elems[d]));
      if (score <= result) continue;
      result = std::max(result, std::min(score, best(covered | interval)));
    }
    memo[covered] = result;
    return result;
  };
  if (count == 0) return n;
  return static_cast<std::size_t>(best(0));
}

// b ∈ √Q iff some power of b lies in Q.
inline bool in_radical(const std::vector<Exps>& gens, const Exps& b, unsigned power) {
  Exps p = b;
  for (auto& x : p) x *= power;
  return member(gens, p);
}

// Primary test from the definition: ab ∈ Q, a ∉ Q forces b ∈ √Q, over all
// a, b with exponents up to one more than the largest generator exponent.
inline bool brute_primary(const std::vector<Exps>& gens, std::size_t n) {
  unsigned top = 0;
  for (const Exps& g : gens) {
    for (unsigned x : g) top = std::max(top, x);
  }
  const Exps bound(n, top + 1);
  bool ok = true;
  for_box(bound, [&](const Exps& a) {
    if (!ok || member(gens, a)) return;
    for_box(bound, [&](const Exps& b) {
      if (!ok) return;
      Exps ab(n);
      for (std::size_t k = 0; k < n; ++k) ab[k] = a[k] + b[k];
      if (member(gens, ab) && !in_radical(gens, b, top + 1)) ok = false;
    });
  });
  return ok;
}

// Q_i lies in Q_j + Q_k: each generator of Q_i is a member of Q_j or of Q_k.
inline bool brute_contained_in_sum(const std::vector<Exps>& qi, const std::vector<Exps>& qj,
                                   const std::vector<Exps>& qk) {
  return std::all_of(qi.begin(), qi.end(),
                     [&](const Exps& g) { return member(qj, g) || member(qk, g); });
}

inline std::uint64_t support_bits(const std::vector<Exps>& gens) {
  std::uint64_t bits = 0;
  for (const Exps& g : gens) {
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k] > 0) bits |= 1ULL << k;
    }
  }
  return bits;
}

// Containment arm of a three-component decomposition: "none" when no
// component lies in the sum of the other two, else "a", "b" or "c" by how the
// radical of the first such component sits in the other two radicals.
inline std::string containment_arm(const mstanley::PrimaryDecomposition& d) {
  std::vector<std::vector<Exps>> q;
  for (const auto& c : d.components()) q.push_back(gens_of(c.ideal()));
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = i == 0 ? 1 : 0;
    const std::size_t k = i == 2 ? 1 : 2;
    if (!brute_contained_in_sum(q[i], q[j], q[k])) continue;
    const std::uint64_t p1 = support_bits(q[i]);
    const bool in2 = (p1 & ~support_bits(q[j])) == 0;
    const bool in3 = (p1 & ~support_bits(q[k])) == 0;
    if (in2 && in3) return "c";
    if (in2 || in3) return "b";
    return "a";
  }
  return "none";
}

// Checks a list of spaces u·K[Z] against an ideal by counting, for every
// monomial of the box B_k = 1 + largest exponent among generators and bases,
// how many spaces hold it: one for members, none otherwise. Any two spaces
// that meet share the coordinatewise max of their bases, which lies in the box.
inline bool brute_is_stanley_decomposition(const std::vector<Exps>& gens,
                                           const mstanley::StanleyDecomposition& d,
                                           std::size_t n) {
  Exps bound(n, 0);
  std::vector<std::pair<Exps, std::uint64_t>> spaces;
  for (const auto& s : d.intervals()) spaces.emplace_back(exps(s.base), s.zset.bits());
  for (const Exps& g : gens) {
    for (std::size_t k = 0; k < n; ++k) bound[k] = std::max(bound[k], g[k]);
  }
  for (const auto& sp : spaces) {
    for (std::size_t k = 0; k < n; ++k) bound[k] = std::max(bound[k], sp.first[k]);
  }
  for (auto& b : bound) ++b;
  bool ok = true;
  for_box(bound, [&](const Exps& m) {
    if (!ok) return;
    std::size_t holders = 0;
    for (const auto& [u, z] : spaces) {
      bool in = true;
      for (std::size_t k = 0; k < n && in; ++k) {
        in = ((z >> k) & 1ULL) ? m[k] >= u[k] : m[k] == u[k];
      }
      holders += in;
    }
    if (holders != (member(gens, m) ? 1u : 0u)) ok = false;
  });
  return ok;
}

}  // namespace testing_support

#endif  // MSTANLEY_TESTS_SUPPORT_HPP
