#include "nonblock/verify.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <unordered_map>

#include "internal.hpp"

namespace nonblock {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Forward exploration of a deterministic on-the-fly automaton. All checks
// in this module walk one: a DFA as-is, the subset construction of an NFA,
// or the tuple product of DFA components. States are hash-consed; ids are
// assigned in breadth-first discovery order with events ascending, which
// pins the numbering, the stats and the witness bit-for-bit.
template <typename State, typename Hash>
struct Exploration {
  std::vector<State> states;
  std::unordered_map<State, StateId, Hash> ids;
  std::vector<std::pair<StateId, EventId>> parent;  // discovery edge per state
  std::vector<Transition> edges;
  std::vector<bool> marked;
  SearchStats stats;

  template <typename Succ, typename IsMarked>
  void run(State init, size_t num_events, Succ succ, IsMarked is_marked,
           const SearchLimits& limits) {
    const auto start = Clock::now();
    auto intern = [&](State s, StateId from, EventId via) -> StateId {
      auto [it, inserted] = ids.emplace(std::move(s), static_cast<StateId>(states.size()));
      if (inserted) {
        states.push_back(it->first);
        parent.emplace_back(from, via);
        marked.push_back(is_marked(it->first));
        if (states.size() > limits.max_states) {
          finish(start);
          throw LimitError("explored more than " + std::to_string(limits.max_states) +
                               " states",
                           stats);
        }
      }
      return it->second;
    };

    intern(std::move(init), 0, 0);
    for (size_t head = 0; head < states.size(); ++head) {
      if ((head & 0xfff) == 0 && elapsed_ms(start) > limits.max_seconds * 1000.0) {
        finish(start);
        throw LimitError("search ran past the wall-clock budget", stats);
      }
      for (EventId e = 0; e < num_events; ++e) {
        std::optional<State> next = succ(states[head], e);
        if (!next) continue;
        StateId to = intern(std::move(*next), static_cast<StateId>(head), e);
        edges.push_back({static_cast<StateId>(head), e, to});
      }
      stats.frontier_peak =
          std::max(stats.frontier_peak, static_cast<uint64_t>(states.size() - head - 1));
    }
    finish(start);
  }

  void finish(Clock::time_point start) {
    stats.explored = states.size();
    stats.millis = elapsed_ms(start);
  }

  // Backward reachability from the marked states over the reached edges.
  std::vector<bool> coreachable() const {
    std::vector<uint32_t> indegree(states.size() + 1, 0);
    for (const Transition& t : edges) indegree[t.to + 1]++;
    for (size_t q = 0; q < states.size(); ++q) indegree[q + 1] += indegree[q];
    std::vector<StateId> rev_from(edges.size());
    {
      std::vector<uint32_t> fill = indegree;
      for (const Transition& t : edges) rev_from[fill[t.to]++] = t.from;
    }

    std::vector<bool> coreach(states.size(), false);
    std::vector<StateId> queue;
    for (StateId q = 0; q < states.size(); ++q) {
      if (marked[q]) {
        coreach[q] = true;
        queue.push_back(q);
      }
    }
    for (size_t head = 0; head < queue.size(); ++head) {
      StateId q = queue[head];
      for (uint32_t i = indegree[q]; i < indegree[q + 1]; ++i) {
        StateId p = rev_from[i];
        if (!coreach[p]) {
          coreach[p] = true;
          queue.push_back(p);
        }
      }
    }
    return coreach;
  }

  // Discovery-order path into `target`; with events ascending during the
  // walk this is the lexicographically least shortest string reaching it.
  template <typename LabelOf>
  EventString path_to(StateId target, LabelOf label_of) const {
    std::vector<EventId> rev;
    for (StateId q = target; q != 0; q = parent[q].first) rev.push_back(parent[q].second);
    EventString w;
    w.reserve(rev.size());
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) w.push_back(label_of(*it));
    return w;
  }

  template <typename LabelOf>
  Verdict nonblocking_verdict(LabelOf label_of) const {
    std::vector<bool> coreach = coreachable();
    Verdict v;
    v.stats = stats;
    // The least non-coreachable id is the first bad state discovered.
    for (StateId q = 0; q < states.size(); ++q) {
      if (!coreach[q]) {
        v.nonblocking = false;
        v.witness = path_to(q, label_of);
        return v;
      }
    }
    v.nonblocking = true;
    return v;
  }
};

std::vector<StateId> subset_step(const Automaton& a, const std::vector<StateId>& subset,
                                 EventId e) {
  std::vector<StateId> next;
  for (StateId q : subset) {
    for (const Transition& t : a.from(q)) {
      if (t.event == e) next.push_back(t.to);
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

struct SubsetExploration : Exploration<std::vector<StateId>, detail::IdVecHash> {
  explicit SubsetExploration(const Automaton& a, const SearchLimits& limits) {
    run(
        a.initial(), a.alphabet().size(),
        [&](const std::vector<StateId>& subset, EventId e) -> std::optional<std::vector<StateId>> {
          std::vector<StateId> next = subset_step(a, subset, e);
          if (next.empty()) return std::nullopt;
          return next;
        },
        [&](const std::vector<StateId>& subset) {
          for (StateId q : subset) {
            if (a.is_marked(q)) return true;
          }
          return false;
        },
        limits);
  }
};

}  // namespace

Verdict check_dfa_nonblocking(const Dfa& d) {
  // The walk is bounded by the DFA itself, so no budget applies here.
  SearchLimits unbounded{std::numeric_limits<uint64_t>::max(),
                         std::numeric_limits<double>::infinity()};
  Exploration<StateId, std::hash<StateId>> ex;
  ex.run(
      d.initial_state(), d.alphabet().size(),
      [&](StateId q, EventId e) { return d.next(q, e); },
      [&](StateId q) { return d.is_marked(q); }, unbounded);
  return ex.nonblocking_verdict([&](EventId e) { return d.alphabet().label(e); });
}

Verdict check_nfa_nonblocking(const Automaton& a, const SearchLimits& limits) {
  SubsetExploration ex(a, limits);
  return ex.nonblocking_verdict([&](EventId e) { return a.alphabet().label(e); });
}

PrefixReport check_prefix_closed(const Automaton& a, const SearchLimits& limits) {
  SubsetExploration ex(a, limits);
  std::vector<bool> coreach = ex.coreachable();
  PrefixReport report;
  report.stats = ex.stats;
  for (StateId q = 0; q < ex.states.size(); ++q) {
    if (!ex.marked[q] && coreach[q]) {
      report.prefix_closed = false;
      report.violation = ex.path_to(q, [&](EventId e) { return a.alphabet().label(e); });
      return report;
    }
  }
  report.prefix_closed = true;
  return report;
}

Verdict check_modular_nonblocking(const std::vector<Dfa>& components,
                                  const SearchLimits& limits) {
  if (components.empty()) {
    throw Error(ErrorCode::EmptyComposition, "modular check of zero components");
  }
  const size_t n = components.size();

  // Disjoint-alphabet fast path: individually nonblocking components over
  // pairwise disjoint alphabets compose to a nonblocking system.
  bool disjoint = true;
  for (size_t i = 0; i < n && disjoint; ++i) {
    for (size_t j = i + 1; j < n && disjoint; ++j) {
      for (const std::string& l : components[i].alphabet().labels()) {
        if (components[j].alphabet().contains(l)) {
          disjoint = false;
          break;
        }
      }
    }
  }
  if (disjoint && n > 1) {
    Verdict aggregate;
    aggregate.nonblocking = true;
    bool all_nonblocking = true;
    for (const Dfa& d : components) {
      Verdict v = check_dfa_nonblocking(d);
      aggregate.stats.explored += v.stats.explored;
      aggregate.stats.frontier_peak = std::max(aggregate.stats.frontier_peak,
                                               v.stats.frontier_peak);
      aggregate.stats.millis += v.stats.millis;
      if (!v.nonblocking) {
        all_nonblocking = false;
        break;
      }
    }
    if (all_nonblocking) return aggregate;
    // A blocking component needs a product witness; fall through.
  }

  std::vector<std::string> union_labels;
  for (const Dfa& d : components) {
    const auto& ls = d.alphabet().labels();
    union_labels.insert(union_labels.end(), ls.begin(), ls.end());
  }
  Alphabet alphabet(std::move(union_labels));

  constexpr EventId kNotInComponent = static_cast<EventId>(-1);
  std::vector<std::vector<EventId>> event_map(n, std::vector<EventId>(alphabet.size()));
  for (size_t i = 0; i < n; ++i) {
    for (EventId e = 0; e < alphabet.size(); ++e) {
      auto local = components[i].alphabet().find(alphabet.label(e));
      event_map[i][e] = local ? *local : kNotInComponent;
    }
  }

  std::vector<StateId> init(n);
  for (size_t i = 0; i < n; ++i) init[i] = components[i].initial_state();

  Exploration<std::vector<StateId>, detail::IdVecHash> ex;
  ex.run(
      std::move(init), alphabet.size(),
      [&](const std::vector<StateId>& tuple, EventId e) -> std::optional<std::vector<StateId>> {
        std::vector<StateId> next(n);
        for (size_t i = 0; i < n; ++i) {
          EventId local = event_map[i][e];
          if (local == kNotInComponent) {
            next[i] = tuple[i];
          } else if (auto t = components[i].next(tuple[i], local)) {
            next[i] = *t;
          } else {
            return std::nullopt;
          }
        }
        return next;
      },
      [&](const std::vector<StateId>& tuple) {
        for (size_t i = 0; i < n; ++i) {
          if (!components[i].is_marked(tuple[i])) return false;
        }
        return true;
      },
      limits);
  return ex.nonblocking_verdict([&](EventId e) { return alphabet.label(e); });
}

std::vector<StateId> coreachable_states(const Automaton& a) {
  std::vector<std::vector<StateId>> rev(a.num_states());
  for (const Transition& t : a.transitions()) rev[t.to].push_back(t.from);

  std::vector<bool> coreach(a.num_states(), false);
  std::vector<StateId> queue;
  for (StateId q : a.marked()) {
    if (!coreach[q]) {
      coreach[q] = true;
      queue.push_back(q);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (StateId p : rev[queue[head]]) {
      if (!coreach[p]) {
        coreach[p] = true;
        queue.push_back(p);
      }
    }
  }
  std::vector<StateId> out;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (coreach[q]) out.push_back(q);
  }
  return out;
}

}  // namespace nonblock
