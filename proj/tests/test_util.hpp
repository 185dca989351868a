#pragma once

#include <cstdlib>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "nonblock/automaton.hpp"
#include "nonblock/bool_matrix.hpp"
#include "nonblock/language.hpp"

namespace nonblock::testutil {

inline std::string data_path(const std::string& name) {
  const char* dir = std::getenv("NONBLOCK_DATA_DIR");
  return std::string(dir ? dir : "data") + "/" + name;
}

using LabeledTransitions =
    std::vector<std::tuple<uint32_t, std::string, uint32_t>>;

inline AutomatonData aut_data(uint32_t num_states,
                              std::vector<std::string> alphabet,
                              LabeledTransitions trans,
                              std::vector<uint32_t> initial,
                              std::vector<uint32_t> marked) {
  AutomatonData d;
  d.num_states = num_states;
  d.alphabet = std::move(alphabet);
  d.transitions = std::move(trans);
  d.initial = std::move(initial);
  d.marked = std::move(marked);
  return d;
}

inline Automaton nfa(uint32_t num_states, std::vector<std::string> alphabet,
                     LabeledTransitions trans, std::vector<uint32_t> initial,
                     std::vector<uint32_t> marked) {
  return Automaton::validate(aut_data(num_states, std::move(alphabet),
                                      std::move(trans), std::move(initial),
                                      std::move(marked)));
}

inline Dfa dfa(uint32_t num_states, std::vector<std::string> alphabet,
               LabeledTransitions trans, std::vector<uint32_t> initial,
               std::vector<uint32_t> marked) {
  return Dfa::validate(aut_data(num_states, std::move(alphabet),
                                std::move(trans), std::move(initial),
                                std::move(marked)));
}

// Plain NFA simulation, independent of the library's search code.
inline std::vector<StateId> run_string(const Automaton& a,
                                       const EventString& w) {
  std::vector<StateId> states = a.initial();
  for (const std::string& label : w) {
    states = step(a, states, label);
    if (states.empty()) break;
  }
  return states;
}

inline bool generates(const Automaton& a, const EventString& w) {
  return w.empty() || !run_string(a, w).empty();
}

inline bool accepts(const Automaton& a, const EventString& w) {
  for (StateId q : run_string(a, w)) {
    if (a.is_marked(q)) return true;
  }
  return false;
}

// States reachable from `from` using only events outside `keep` (the erased
// events of a projection), computed by direct breadth-first search.
inline std::vector<StateId> erased_closure(const Automaton& a,
                                           std::vector<StateId> from,
                                           const std::set<std::string>& keep) {
  std::vector<bool> seen(a.num_states(), false);
  std::vector<StateId> queue = std::move(from);
  for (StateId q : queue) seen[q] = true;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const Transition& t : a.from(queue[head])) {
      if (keep.count(a.alphabet().label(t.event))) continue;
      if (!seen[t.to]) {
        seen[t.to] = true;
        queue.push_back(t.to);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

// Membership of w (over `keep`) in the projection of L_m(a) onto `keep`:
// simulate a with erased events treated as silent moves.
inline bool projected_marked_member(const Automaton& a, const EventString& w,
                                    const std::vector<std::string>& keep) {
  std::set<std::string> keep_set(keep.begin(), keep.end());
  std::vector<StateId> states = erased_closure(a, a.initial(), keep_set);
  for (const std::string& label : w) {
    states = step(a, states, label);
    if (states.empty()) return false;
    states = erased_closure(a, std::move(states), keep_set);
  }
  for (StateId q : states) {
    if (a.is_marked(q)) return true;
  }
  return false;
}

// Same, for the generated (prefix-closed) language.
inline bool projected_generated_member(const Automaton& a,
                                       const EventString& w,
                                       const std::vector<std::string>& keep) {
  std::set<std::string> keep_set(keep.begin(), keep.end());
  std::vector<StateId> states = erased_closure(a, a.initial(), keep_set);
  for (const std::string& label : w) {
    states = step(a, states, label);
    if (states.empty()) return false;
    states = erased_closure(a, std::move(states), keep_set);
  }
  return true;
}

// All strings over `alphabet` of length at most max_len, in length-then-lex
// order.
inline std::vector<EventString> all_strings(
    const std::vector<std::string>& alphabet, uint32_t max_len) {
  std::vector<EventString> out{EventString{}};
  size_t level_begin = 0;
  for (uint32_t len = 0; len < max_len; ++len) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      for (const std::string& e : alphabet) {
        EventString w = out[i];
        w.push_back(e);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

// Iterate-to-fixpoint coreachability: marked states, then repeatedly add
// predecessors, until stable.
inline std::vector<StateId> coreachable_fixpoint(const Automaton& a) {
  std::vector<bool> core(a.num_states(), false);
  for (StateId q : a.marked()) core[q] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Transition& t : a.transitions()) {
      if (core[t.to] && !core[t.from]) {
        core[t.from] = true;
        changed = true;
      }
    }
  }
  std::vector<StateId> out;
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (core[q]) out.push_back(q);
  }
  return out;
}

// Schoolbook boolean matrix product, the oracle for the word-packed one.
inline BoolMatrix naive_mul(const BoolMatrix& a, const BoolMatrix& b) {
  BoolMatrix out(a.size());
  for (uint32_t i = 0; i < a.size(); ++i) {
    for (uint32_t j = 0; j < a.size(); ++j) {
      for (uint32_t k = 0; k < a.size(); ++k) {
        if (a.get(i, k) && b.get(k, j)) {
          out.set(i, j, true);
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace nonblock::testutil
