#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "treeweight/algebra.hpp"
#include "treeweight/grammar.hpp"

namespace treeweight {

// Stop rule for the synchronous solver. Both modes provably reach the same
// weights: nt cycles always suffice, and a cycle without changes means the
// fixpoint is reached.
enum class StopMode { EarlyStop, FixedNtCycles };

template <WeightAlgebra A>
struct TraceCycle {
  // Values that changed this cycle, sorted by nonterminal id.
  std::vector<std::pair<NtId, typename A::Weight>> changes;
  // Lazy solver only: nonterminals pushed onto the front this cycle, and
  // the minimum-valued ones popped (= declared done) this cycle. The full
  // front/done sets per cycle are reconstructible from these deltas; only
  // deltas are stored to keep tracing memory linear in the activity.
  std::vector<NtId> entered_front;
  std::vector<NtId> minimals;
};

template <WeightAlgebra A>
struct Trace {
  std::vector<TraceCycle<A>> cycles;  // cycles[k-1] describes cycle k
};

struct SolverStats {
  uint64_t cycles = 0;
  uint64_t alternative_evaluations = 0;
  uint64_t heap_operations = 0;          // lazy solver only
  std::vector<uint32_t> value_changes;   // per nonterminal
};

template <WeightAlgebra A>
struct SolveResult {
  std::vector<typename A::Weight> weights;  // by nonterminal id; infinity = empty language
  Trace<A> trace;                           // filled only when requested
  SolverStats stats;
  // Lazy solver only: cycle in which each nonterminal was declared done
  // (0 = never). Witness extraction needs this order.
  std::vector<uint32_t> done_cycle;
  bool has_done_order = false;
};

namespace detail {

// Rule table flattened to arrays indexed by a global alternative id;
// alternatives keep rule order within each nonterminal.
struct FlatGrammar {
  uint32_t nt = 0;
  std::vector<uint32_t> rule_base;   // nt+1 entries; rule i owns [base[i], base[i+1])
  std::vector<NtId> alt_owner;       // per alternative
  std::vector<SymbolId> alt_symbol;  // per alternative
  std::vector<uint32_t> arg_base;    // al+1 entries into args
  std::vector<NtId> args;

  static FlatGrammar build(const Grammar& g) {
    FlatGrammar f;
    f.nt = g.nt_count();
    f.rule_base.reserve(f.nt + 1);
    f.rule_base.push_back(0);
    f.arg_base.push_back(0);
    for (NtId n = 0; n < f.nt; ++n) {
      for (const Alternative& alt : g.rules[n]) {
        f.alt_owner.push_back(n);
        f.alt_symbol.push_back(alt.symbol);
        f.args.insert(f.args.end(), alt.args.begin(), alt.args.end());
        f.arg_base.push_back(static_cast<uint32_t>(f.args.size()));
      }
      f.rule_base.push_back(static_cast<uint32_t>(f.alt_owner.size()));
    }
    return f;
  }

  uint32_t alternative_count() const { return static_cast<uint32_t>(alt_owner.size()); }

  std::span<const NtId> alt_args(uint32_t alt) const {
    return {args.data() + arg_base[alt], args.data() + arg_base[alt + 1]};
  }
};

inline void require_valid(const Grammar& g) {
  std::vector<Diagnostic> diags = validate(g);
  if (!diags.empty()) throw InputError(std::move(diags));
}

// Binary min-heap of nonterminal ids keyed by their current weight, with a
// position map so a decrease re-sorts by sift-up only.
template <typename Less>
class NtHeap {
 public:
  NtHeap(uint32_t nt, Less less) : less_(std::move(less)), pos_(nt, npos) {}

  bool empty() const { return data_.empty(); }
  bool contains(NtId n) const { return pos_[n] != npos; }
  NtId top() const { return data_[0]; }

  void push(NtId n) {
    pos_[n] = data_.size();
    data_.push_back(n);
    sift_up(data_.size() - 1);
  }

  NtId pop() {
    NtId out = data_[0];
    pos_[out] = npos;
    NtId last = data_.back();
    data_.pop_back();
    if (!data_.empty()) {
      data_[0] = last;
      pos_[last] = 0;
      sift_down(0);
    }
    return out;
  }

  void decreased(NtId n) { sift_up(pos_[n]); }

 private:
  static constexpr size_t npos = static_cast<size_t>(-1);

  void sift_up(size_t i) {
    while (i > 0) {
      size_t parent = (i - 1) / 2;
      if (!less_(data_[i], data_[parent])) break;
      std::swap(pos_[data_[i]], pos_[data_[parent]]);
      std::swap(data_[i], data_[parent]);
      i = parent;
    }
  }

  void sift_down(size_t i) {
    for (;;) {
      size_t left = 2 * i + 1, right = left + 1, best = i;
      if (left < data_.size() && less_(data_[left], data_[best])) best = left;
      if (right < data_.size() && less_(data_[right], data_[best])) best = right;
      if (best == i) break;
      std::swap(pos_[data_[i]], pos_[data_[best]]);
      std::swap(data_[i], data_[best]);
      i = best;
    }
  }

  Less less_;
  std::vector<NtId> data_;
  std::vector<size_t> pos_;
};

}  // namespace detail

// Synchronous fixpoint: start all weights at infinity and re-evaluate
// every alternative each cycle against the previous cycle's values.
template <WeightAlgebra A>
SolveResult<A> solve_naive(const Grammar& g, const A& alg,
                           StopMode stop = StopMode::EarlyStop,
                           bool record_trace = false) {
  using W = typename A::Weight;
  detail::require_valid(g);
  const detail::FlatGrammar f = detail::FlatGrammar::build(g);

  SolveResult<A> result;
  result.weights.assign(f.nt, alg.infinity());
  result.stats.value_changes.assign(f.nt, 0);
  if (f.nt == 0) return result;

  std::vector<W> next(f.nt, alg.infinity());
  std::vector<W> arg_weights;
  for (uint64_t k = 1;; ++k) {
    bool changed_any = false;
    TraceCycle<A> cycle;
    for (NtId n = 0; n < f.nt; ++n) {
      W best = alg.infinity();  // min over an empty alternative set
      for (uint32_t alt = f.rule_base[n]; alt < f.rule_base[n + 1]; ++alt) {
        arg_weights.clear();
        for (NtId arg : f.alt_args(alt)) arg_weights.push_back(result.weights[arg]);
        W w = alg.apply(f.alt_symbol[alt], std::span<const W>(arg_weights));
        ++result.stats.alternative_evaluations;
        if (alg.compare(w, best) < 0) best = w;
      }
      next[n] = best;
      if (alg.compare(best, result.weights[n]) < 0) {
        changed_any = true;
        ++result.stats.value_changes[n];
        if (record_trace) cycle.changes.push_back({n, best});
      }
    }
    result.weights.swap(next);
    result.stats.cycles = k;
    if (record_trace) result.trace.cycles.push_back(std::move(cycle));
    if (stop == StopMode::FixedNtCycles ? (k == f.nt) : !changed_any) break;
  }
  return result;
}

// Water-front fixpoint: evaluate nullary alternatives once, then per cycle
// re-evaluate only alternatives with an argument whose value just fell.
// Produces the same per-cycle values as the synchronous solver while
// skipping untouched alternatives.
template <WeightAlgebra A>
SolveResult<A> solve_liquid_flow(const Grammar& g, const A& alg,
                                 bool record_trace = false) {
  using W = typename A::Weight;
  detail::require_valid(g);
  const detail::FlatGrammar f = detail::FlatGrammar::build(g);
  const OccurrenceIndex occ = build_occurrence_index(g);

  SolveResult<A> result;
  result.weights.assign(f.nt, alg.infinity());
  result.stats.value_changes.assign(f.nt, 0);
  if (f.nt == 0) return result;

  // global alternative id of each occurrence, so candidate sets dedupe
  std::vector<std::vector<uint32_t>> occ_alt(f.nt);
  for (NtId n = 0; n < f.nt; ++n) {
    for (const Occurrence& o : occ.at[n]) {
      occ_alt[n].push_back(f.rule_base[o.owner] + o.alt_index);
    }
  }

  std::vector<uint32_t> front;  // changed last cycle
  std::vector<uint64_t> alt_stamp(f.alternative_count(), 0);
  std::vector<uint64_t> owner_stamp(f.nt, 0);
  std::vector<W> pending(f.nt, alg.infinity());
  std::vector<uint32_t> candidates, touched;
  std::vector<W> arg_weights;

  for (uint64_t k = 1;; ++k) {
    candidates.clear();
    if (k == 1) {
      for (uint32_t alt = 0; alt < f.alternative_count(); ++alt) {
        if (f.alt_args(alt).empty()) candidates.push_back(alt);
      }
    } else {
      for (NtId n : front) {
        for (uint32_t alt : occ_alt[n]) {
          if (alt_stamp[alt] != k) {
            alt_stamp[alt] = k;
            candidates.push_back(alt);
          }
        }
      }
    }

    touched.clear();
    for (uint32_t alt : candidates) {
      arg_weights.clear();
      for (NtId arg : f.alt_args(alt)) arg_weights.push_back(result.weights[arg]);
      W w = alg.apply(f.alt_symbol[alt], std::span<const W>(arg_weights));
      ++result.stats.alternative_evaluations;
      NtId owner = f.alt_owner[alt];
      if (owner_stamp[owner] != k) {
        owner_stamp[owner] = k;
        pending[owner] = result.weights[owner];
        touched.push_back(owner);
      }
      if (alg.compare(w, pending[owner]) < 0) pending[owner] = w;
    }

    // All evaluations above read the previous cycle's weights; apply the
    // improvements only now (synchronous semantics).
    front.clear();
    std::sort(touched.begin(), touched.end());
    TraceCycle<A> cycle;
    for (NtId owner : touched) {
      if (alg.compare(pending[owner], result.weights[owner]) < 0) {
        result.weights[owner] = pending[owner];
        ++result.stats.value_changes[owner];
        front.push_back(owner);
        if (record_trace) cycle.changes.push_back({owner, pending[owner]});
      }
    }
    result.stats.cycles = k;
    if (record_trace) result.trace.cycles.push_back(std::move(cycle));
    if (front.empty()) break;
  }
  return result;
}

// Lazy propagation: the front is a min-heap; each cycle pops every
// minimum-valued front member as final ("done") and bumps a counter on
// each alternative where it occurs. An alternative is evaluated exactly
// when its counter reaches its arity, so each is evaluated at most once.
template <WeightAlgebra A>
SolveResult<A> solve_lazy(const Grammar& g, const A& alg, bool record_trace = false) {
  using W = typename A::Weight;
  detail::require_valid(g);
  const detail::FlatGrammar f = detail::FlatGrammar::build(g);
  const OccurrenceIndex occ = build_occurrence_index(g);

  SolveResult<A> result;
  result.weights.assign(f.nt, alg.infinity());
  result.stats.value_changes.assign(f.nt, 0);
  result.done_cycle.assign(f.nt, 0);
  result.has_done_order = true;
  if (f.nt == 0) return result;

  std::vector<std::vector<uint32_t>> occ_alt(f.nt);
  for (NtId n = 0; n < f.nt; ++n) {
    for (const Occurrence& o : occ.at[n]) {
      occ_alt[n].push_back(f.rule_base[o.owner] + o.alt_index);
    }
  }

  auto less = [&](NtId a, NtId b) {
    int c = alg.compare(result.weights[a], result.weights[b]);
    return c != 0 ? c < 0 : a < b;
  };
  detail::NtHeap<decltype(less)> heap(f.nt, less);

  std::vector<uint32_t> done_args(f.alternative_count(), 0);  // counters
  std::vector<bool> done(f.nt, false);
  std::vector<uint32_t> ready, next_ready;
  for (uint32_t alt = 0; alt < f.alternative_count(); ++alt) {
    if (f.alt_args(alt).empty()) ready.push_back(alt);
  }

  std::vector<uint64_t> changed_stamp(f.nt, 0);
  std::vector<uint32_t> changed;
  std::vector<W> arg_weights;

  for (uint64_t k = 1;; ++k) {
    changed.clear();
    TraceCycle<A> cycle;
    for (uint32_t alt : ready) {
      arg_weights.clear();
      for (NtId arg : f.alt_args(alt)) arg_weights.push_back(result.weights[arg]);
      W w = alg.apply(f.alt_symbol[alt], std::span<const W>(arg_weights));
      ++result.stats.alternative_evaluations;
      NtId owner = f.alt_owner[alt];
      // A done owner cannot improve: the algebra laws make every new
      // evaluation at least as large as the cycle minimum that retired it.
      if (!done[owner] && alg.compare(w, result.weights[owner]) < 0) {
        result.weights[owner] = w;
        ++result.stats.value_changes[owner];
        if (changed_stamp[owner] != k) {
          changed_stamp[owner] = k;
          changed.push_back(owner);
        }
        if (heap.contains(owner)) {
          heap.decreased(owner);
          ++result.stats.heap_operations;
        } else {
          heap.push(owner);
          ++result.stats.heap_operations;
          cycle.entered_front.push_back(owner);
        }
      }
    }
    if (record_trace) {
      std::sort(changed.begin(), changed.end());
      for (NtId n : changed) cycle.changes.push_back({n, result.weights[n]});
      std::sort(cycle.entered_front.begin(), cycle.entered_front.end());
    }

    result.stats.cycles = k;
    if (heap.empty()) {
      if (record_trace) result.trace.cycles.push_back(std::move(cycle));
      break;
    }

    // Pop every front member tied for the minimum; their values are final.
    next_ready.clear();
    NtId first = heap.pop();
    ++result.stats.heap_operations;
    cycle.minimals.push_back(first);
    while (!heap.empty() &&
           alg.compare(result.weights[heap.top()], result.weights[first]) == 0) {
      cycle.minimals.push_back(heap.pop());
      ++result.stats.heap_operations;
    }
    std::sort(cycle.minimals.begin(), cycle.minimals.end());
    for (NtId n : cycle.minimals) {
      done[n] = true;
      result.done_cycle[n] = static_cast<uint32_t>(k);
      // One counter tick per occurrence: an alternative using n at several
      // positions needs all of them accounted.
      for (uint32_t alt : occ_alt[n]) {
        if (++done_args[alt] == f.alt_args(alt).size()) next_ready.push_back(alt);
      }
    }
    if (record_trace) result.trace.cycles.push_back(std::move(cycle));
    ready.swap(next_ready);
  }
  return result;
}

}  // namespace treeweight
