#include "mstanley/instance.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

namespace mstanley {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && s.size() <= 9 &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Unbiased draw from [lo, hi] using only the raw engine output, which the
// standard pins down exactly (the distributions are implementation-defined).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + x % span;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : InvalidArgument("line " + std::to_string(line) + ": " + message), line_(line) {}

Monomial parse_monomial(const std::string& text, std::size_t n) {
  const std::string body = trim(text);
  if (body.empty()) throw InvalidArgument("empty monomial");
  std::vector<Exponent> exps(n, 0);
  for (const std::string& factor : split(body, '*')) {
    if (factor.size() < 2 || factor[0] != 'x') {
      throw InvalidArgument("bad factor '" + factor + "' (expected x<i> or x<i>^<e>)");
    }
    const auto caret = factor.find('^');
    const std::string index_text = trim(factor.substr(1, caret == std::string::npos ? caret : caret - 1));
    const std::string exp_text = caret == std::string::npos ? "1" : trim(factor.substr(caret + 1));
    if (!all_digits(index_text) || !all_digits(exp_text)) {
      throw InvalidArgument("bad factor '" + factor + "'");
    }
    const std::size_t index = std::stoul(index_text);
    if (index == 0 || index > n) {
      throw InvalidArgument("variable x" + index_text + " outside ring of " + std::to_string(n) +
                            " variables");
    }
    const auto e = static_cast<Exponent>(std::stoul(exp_text));
    if (__builtin_add_overflow(exps[index - 1], e, &exps[index - 1])) {
      throw InvalidArgument("exponent overflow in '" + factor + "'");
    }
  }
  return Monomial(std::move(exps));
}

InstanceSpec parse_instance(const std::string& text) {
  InstanceSpec spec;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_ring = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (!have_ring) {
      if (line.rfind("ring", 0) != 0) throw ParseError(lineno, "expected 'ring <n>' first");
      const std::string count = trim(line.substr(4));
      if (!all_digits(count)) throw ParseError(lineno, "bad ring size '" + count + "'");
      spec.n = std::stoul(count);
      if (spec.n == 0 || spec.n > kMaxVariables) {
        throw ParseError(lineno, "ring size must be between 1 and 64");
      }
      have_ring = true;
      continue;
    }
    if (line.rfind("component:", 0) != 0) {
      throw ParseError(lineno, "expected 'component: <monomials>'");
    }
    std::vector<Monomial> gens;
    for (const std::string& item : split(line.substr(10), ',')) {
      try {
        gens.push_back(parse_monomial(item, spec.n));
      } catch (const InvalidArgument& e) {
        throw ParseError(lineno, e.what());
      }
    }
    spec.components.push_back(std::move(gens));
  }
  if (!have_ring) throw ParseError(lineno, "missing 'ring <n>' line");
  if (spec.components.empty()) throw ParseError(lineno, "no components");
  return spec;
}

std::string print_instance(const InstanceSpec& spec) {
  std::string out = "ring " + std::to_string(spec.n) + "\n";
  for (const auto& gens : spec.components) {
    out += "component: ";
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (i > 0) out += ", ";
      out += to_string(gens[i]);
    }
    out += "\n";
  }
  return out;
}

PrimaryDecomposition to_decomposition(const InstanceSpec& spec, RedundancyPolicy policy) {
  const RingContext ring(spec.n);
  std::vector<PrimaryComponent> comps;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    auto primary = as_primary(MonomialIdeal(ring, spec.components[i]));
    if (!primary) {
      throw InvalidArgument("component " + std::to_string(i + 1) + " is not a proper primary ideal");
    }
    comps.push_back(std::move(*primary));
  }
  PrimaryDecomposition out(ring, std::move(comps));
  if (policy == RedundancyPolicy::kReject && !is_irredundant(out)) {
    throw InvalidArgument("the decomposition is redundant");
  }
  return out;
}

InstanceSpec to_spec(const PrimaryDecomposition& decomposition) {
  InstanceSpec spec;
  spec.n = decomposition.ring().n();
  for (const PrimaryComponent& c : decomposition.components()) {
    spec.components.emplace_back(c.ideal().gens().rbegin(), c.ideal().gens().rend());
  }
  return spec;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

PrimaryDecomposition random_instance(const RandomParams& params) {
  if (params.n == 0 || params.n > 16 || params.components == 0 || params.max_exp == 0 ||
      params.max_gens == 0) {
    throw InvalidArgument("random_instance: parameters must be positive (n at most 16)");
  }
  const RingContext ring(params.n);
  const std::uint64_t full = VarSet::all(params.n).bits();
  std::mt19937_64 rng(params.seed);

  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    std::vector<VarSet> supports;
    VarSet covered;
    bool ok = true;
    for (std::size_t c = 0; c < params.components && ok; ++c) {
      const VarSet p(draw(rng, 1, full));
      if (!params.allow_maximal && params.components > 1 && p.bits() == full) ok = false;
      if (std::find(supports.begin(), supports.end(), p) != supports.end()) ok = false;
      supports.push_back(p);
      covered = covered | p;
    }
    if (!ok) continue;
    if (params.reject_free_vars && covered.bits() != full) continue;

    std::vector<PrimaryComponent> comps;
    for (VarSet p : supports) {
      std::vector<Monomial> gens;
      std::vector<Exponent> pure(params.n, 0);
      for (std::size_t k : p.indices()) {
        pure[k] = static_cast<Exponent>(draw(rng, 1, params.max_exp));
        gens.push_back(Monomial::variable(params.n, k, pure[k]));
      }
      const std::size_t room = params.max_gens > p.size() ? params.max_gens - p.size() : 0;
      const std::size_t extra = static_cast<std::size_t>(draw(rng, 0, room));
      for (std::size_t g = 0; g < extra; ++g) {
        std::vector<Exponent> e(params.n, 0);
        for (std::size_t k : p.indices()) e[k] = static_cast<Exponent>(draw(rng, 0, pure[k] - 1));
        Monomial m(std::move(e));
        if (!m.is_one()) gens.push_back(std::move(m));
      }
      comps.push_back(*as_primary(MonomialIdeal(ring, std::move(gens))));
    }
    PrimaryDecomposition candidate(ring, std::move(comps));
    if (is_irredundant(candidate)) return candidate;
  }
  throw BudgetExceeded("random_instance: no irredundant draw within " +
                       std::to_string(params.max_attempts) + " attempts");
}

}  // namespace mstanley
