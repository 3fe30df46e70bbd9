#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "treeweight/grammar.hpp"
#include "treeweight/term.hpp"

namespace treeweight {

// Natural numbers extended with a greatest element. UINT64_MAX is reserved
// as the infinity sentinel; arithmetic saturates there, so overflow yields
// infinity instead of wrapping (weights can grow exponentially in grammar
// depth).
inline constexpr uint64_t nat_inf = UINT64_MAX;

inline uint64_t nat_add(uint64_t a, uint64_t b) {
  uint64_t s = a + b;
  return s < a ? nat_inf : s;
}

// Infinity is absorbing even for a = 0, so symbol interpretations stay
// strict in every argument.
inline uint64_t nat_mul(uint64_t a, uint64_t b) {
  if (a == nat_inf || b == nat_inf) return nat_inf;
  if (a == 0 || b == 0) return 0;
  if (a > nat_inf / b) return nat_inf;
  return a * b;
}

// A weight algebra: totally ordered weight domain with an absorbing top
// element and one interpretation per symbol. The solvers require the laws
// (checkable via check_algebra_laws):
//   - compare is a total order and infinity() its unique maximum
//   - apply(f, ..., inf, ...) = inf
//   - monotonic: pointwise <= arguments give <= results
//   - increasing: every argument is <= the result
template <typename A>
concept WeightAlgebra = requires(const A alg, SymbolId f,
                                 std::span<const typename A::Weight> args,
                                 const typename A::Weight& w) {
  typename A::Weight;
  { alg.infinity() } -> std::convertible_to<typename A::Weight>;
  { alg.compare(w, w) } -> std::convertible_to<int>;
  { alg.apply(f, args) } -> std::convertible_to<typename A::Weight>;
  { alg.render(w) } -> std::convertible_to<std::string>;
};

inline int compare_nat(uint64_t a, uint64_t b) { return a < b ? -1 : (a > b ? 1 : 0); }

inline std::string render_nat(uint64_t w) {
  return w == nat_inf ? "INF" : std::to_string(w);
}

// Weight of a term = its node count.
struct SizeAlgebra {
  using Weight = uint64_t;

  uint64_t infinity() const { return nat_inf; }
  int compare(uint64_t a, uint64_t b) const { return compare_nat(a, b); }
  std::string render(uint64_t w) const { return render_nat(w); }

  uint64_t apply(SymbolId, std::span<const uint64_t> args) const {
    uint64_t w = 1;
    for (uint64_t a : args) w = nat_add(w, a);
    return w;
  }
};

// Weight of a term = longest root-to-leaf path, counted in nodes
// (constants have height 1).
struct HeightAlgebra {
  using Weight = uint64_t;

  uint64_t infinity() const { return nat_inf; }
  int compare(uint64_t a, uint64_t b) const { return compare_nat(a, b); }
  std::string render(uint64_t w) const { return render_nat(w); }

  uint64_t apply(SymbolId, std::span<const uint64_t> args) const {
    uint64_t m = 0;
    for (uint64_t a : args) m = std::max(m, a);
    return nat_add(1, m);
  }
};

// Bottom-up fold of the algebra over a ground term. Throws InputError when
// the term uses a symbol the signature lacks.
template <WeightAlgebra A>
typename A::Weight fold_weight(const A& alg, const Signature& sig, const Term& t) {
  auto sym = sig.find(t.root());
  if (!sym) throw InputError({Diagnostic{"term uses unknown symbol '" + t.root() + "'"}});
  std::vector<typename A::Weight> args;
  args.reserve(t.children().size());
  for (const auto& c : t.children()) args.push_back(fold_weight(alg, sig, *c));
  return alg.apply(*sym, std::span<const typename A::Weight>(args));
}

// Uniform random ground term of height <= max_height; nullptr when the
// signature has no nullary symbol (then no ground term exists at all).
template <typename Rng>
TermPtr random_term(const Signature& sig, Rng& rng, uint32_t max_height) {
  std::vector<SymbolId> nullary, all;
  for (SymbolId s = 0; s < sig.size(); ++s) {
    if (sig[s].arity == 0) nullary.push_back(s);
    all.push_back(s);
  }
  if (nullary.empty()) return nullptr;
  const std::vector<SymbolId>& pool = (max_height <= 1) ? nullary : all;
  SymbolId s = pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
  std::vector<TermPtr> children;
  children.reserve(sig[s].arity);
  for (uint32_t i = 0; i < sig[s].arity; ++i) {
    children.push_back(random_term(sig, rng, max_height - 1));
  }
  return Term::make(sig[s].name, std::move(children));
}

struct LawReport {
  size_t samples_run = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Property-checks the algebra laws on weight tuples sampled from random
// small terms. Sampling-based: the laws quantify over an infinite domain,
// so a clean report is evidence, not proof.
template <WeightAlgebra A>
LawReport check_algebra_laws(const A& alg, const Signature& sig, size_t samples,
                             uint64_t seed) {
  using W = typename A::Weight;
  LawReport report;
  std::mt19937_64 rng(seed);

  std::vector<W> pool;  // weights of random ground terms, plus infinity
  pool.push_back(alg.infinity());
  for (int i = 0; i < 64; ++i) {
    TermPtr t = random_term(sig, rng, 4);
    if (!t) break;
    pool.push_back(fold_weight(alg, sig, *t));
  }
  if (pool.size() <= 1) return report;  // no ground terms to sample from

  auto pick = [&]() -> const W& {
    return pool[std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng)];
  };
  auto wmax = [&](const W& a, const W& b) { return alg.compare(a, b) < 0 ? b : a; };
  auto render_tuple = [&](const std::vector<W>& xs) {
    std::string out = "(";
    for (size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ",";
      out += alg.render(xs[i]);
    }
    return out + ")";
  };

  for (size_t n = 0; n < samples; ++n) {
    SymbolId f = std::uniform_int_distribution<SymbolId>(0, sig.size() - 1)(rng);
    uint32_t arity = sig[f].arity;
    std::vector<W> xs, ys;
    for (uint32_t i = 0; i < arity; ++i) {
      xs.push_back(pick());
      ys.push_back(wmax(xs.back(), pick()));  // ys >= xs pointwise
    }
    W fx = alg.apply(f, std::span<const W>(xs));
    W fy = alg.apply(f, std::span<const W>(ys));

    if (alg.compare(fx, fy) > 0) {
      report.violations.push_back("monotonicity: " + sig[f].name + render_tuple(xs) + " = " +
                                  alg.render(fx) + " > " + sig[f].name + render_tuple(ys) +
                                  " = " + alg.render(fy));
    }
    for (uint32_t i = 0; i < arity; ++i) {
      if (alg.compare(xs[i], fx) > 0) {
        report.violations.push_back("increasingness: argument " + std::to_string(i + 1) +
                                    " of " + sig[f].name + render_tuple(xs) + " exceeds result " +
                                    alg.render(fx));
      }
    }
    if (arity > 0) {
      std::vector<W> zs = xs;
      uint32_t at = std::uniform_int_distribution<uint32_t>(0, arity - 1)(rng);
      zs[at] = alg.infinity();
      W fz = alg.apply(f, std::span<const W>(zs));
      if (alg.compare(fz, alg.infinity()) != 0) {
        report.violations.push_back("top absorption: " + sig[f].name + render_tuple(zs) +
                                    " = " + alg.render(fz) + ", expected " +
                                    alg.render(alg.infinity()));
      }
    }
    ++report.samples_run;
  }
  return report;
}

}  // namespace treeweight
