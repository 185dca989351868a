#include "nonblock/determinize.hpp"

#include <algorithm>
#include <unordered_map>

#include "internal.hpp"

namespace nonblock {

namespace {

std::vector<StateId> sorted_dedup(std::vector<StateId> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Dfa determinize(const Automaton& a, size_t max_subsets) {
  std::unordered_map<std::vector<StateId>, StateId, detail::IdVecHash> ids;
  std::vector<std::vector<StateId>> order;
  auto intern = [&](std::vector<StateId> subset) -> StateId {
    auto [it, inserted] = ids.emplace(std::move(subset), static_cast<StateId>(order.size()));
    if (inserted) {
      if (order.size() >= max_subsets) {
        throw Error(ErrorCode::StateBudgetExceeded,
                    "subset construction exceeded the budget of " +
                        std::to_string(max_subsets) + " states");
      }
      order.push_back(it->first);
    }
    return it->second;
  };

  intern(a.initial());  // already sorted and unique

  const size_t num_events = a.alphabet().size();
  std::vector<Transition> transitions;
  for (size_t head = 0; head < order.size(); ++head) {
    const std::vector<StateId> subset = order[head];
    for (EventId e = 0; e < num_events; ++e) {
      std::vector<StateId> next;
      for (StateId q : subset) {
        for (const Transition& t : a.from(q)) {
          if (t.event == e) next.push_back(t.to);
        }
      }
      if (next.empty()) continue;
      transitions.push_back(
          {static_cast<StateId>(head), e, intern(sorted_dedup(std::move(next)))});
    }
  }

  std::vector<StateId> marked;
  std::vector<std::string> names(order.size());
  for (StateId q = 0; q < order.size(); ++q) {
    bool m = false;
    for (StateId s : order[q]) {
      if (a.is_marked(s)) {
        m = true;
        break;
      }
    }
    if (m) marked.push_back(q);
    names[q] = detail::subset_name(order[q]);
  }

  Automaton out = AutomatonBuilder::assemble(
      static_cast<uint32_t>(order.size()), a.alphabet(), std::move(transitions),
      {0}, std::move(marked), std::move(names));
  return Dfa::validate(out);
}

Automaton project_onto(const Automaton& a, const std::vector<std::string>& keep) {
  Alphabet kept(keep);
  // keep must be a sub-alphabet of a's events.
  std::vector<bool> erased(a.alphabet().size(), true);
  for (const std::string& label : kept.labels()) {
    auto e = a.alphabet().find(label);
    if (!e) {
      throw Error(ErrorCode::EventNotInAlphabet,
                  "projection event '" + label + "' is not in the alphabet");
    }
    erased[*e] = false;
  }

  // Closure of each state under erased-event moves.
  std::vector<std::vector<StateId>> closure(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) {
    std::vector<bool> seen(a.num_states(), false);
    std::vector<StateId>& cl = closure[q];
    seen[q] = true;
    cl.push_back(q);
    for (size_t head = 0; head < cl.size(); ++head) {
      for (const Transition& t : a.from(cl[head])) {
        if (erased[t.event] && !seen[t.to]) {
          seen[t.to] = true;
          cl.push_back(t.to);
        }
      }
    }
    std::sort(cl.begin(), cl.end());
  }

  // (s,e,t) survives iff s' -e-> t'' for some s' in closure(s) and
  // t in closure(t''). Closing on both sides keeps the projected
  // languages exact.
  std::vector<Transition> transitions;
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (EventId e = 0; e < kept.size(); ++e) {
      EventId orig = *a.alphabet().find(kept.label(e));
      std::vector<bool> target(a.num_states(), false);
      for (StateId s : closure[q]) {
        for (const Transition& t : a.from(s)) {
          if (t.event != orig) continue;
          for (StateId u : closure[t.to]) target[u] = true;
        }
      }
      for (StateId t = 0; t < a.num_states(); ++t) {
        if (target[t]) transitions.push_back({q, e, t});
      }
    }
  }

  std::vector<StateId> initial;
  for (StateId q : a.initial()) {
    initial.insert(initial.end(), closure[q].begin(), closure[q].end());
  }

  std::vector<StateId> marked;
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (StateId s : closure[q]) {
      if (a.is_marked(s)) {
        marked.push_back(q);
        break;
      }
    }
  }

  return AutomatonBuilder::assemble(a.num_states(), std::move(kept), std::move(transitions),
                                    std::move(initial), std::move(marked), a.state_names());
}

Dfa observer(const Automaton& a, const std::vector<std::string>& keep, size_t max_subsets) {
  return determinize(project_onto(a, keep), max_subsets);
}

}  // namespace nonblock
