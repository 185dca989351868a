#include "nonblock/compose.hpp"

#include <algorithm>
#include <unordered_map>

#include "internal.hpp"

namespace nonblock {

namespace {

constexpr EventId kNotInComponent = static_cast<EventId>(-1);

std::string tuple_name(const std::vector<const Automaton*>& comps,
                       const std::vector<StateId>& tuple) {
  std::string name = "(";
  for (size_t i = 0; i < tuple.size(); ++i) {
    if (i) name += ',';
    name += comps[i]->state_name(tuple[i]);
  }
  name += ')';
  return name;
}

// Enumerates the cartesian product of per-component choice lists in
// lexicographic order, appending each tuple through `emit`.
template <typename Emit>
void cartesian(const std::vector<std::vector<StateId>>& choices, Emit emit) {
  std::vector<size_t> idx(choices.size(), 0);
  std::vector<StateId> tuple(choices.size());
  while (true) {
    for (size_t i = 0; i < choices.size(); ++i) tuple[i] = choices[i][idx[i]];
    emit(tuple);
    size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i].size()) break;
      idx[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace

Automaton parallel_compose(const std::vector<const Automaton*>& components) {
  if (components.empty()) {
    throw Error(ErrorCode::EmptyComposition, "parallel composition of zero automata");
  }
  const size_t n = components.size();

  std::vector<std::string> union_labels;
  for (const Automaton* a : components) {
    const auto& ls = a->alphabet().labels();
    union_labels.insert(union_labels.end(), ls.begin(), ls.end());
  }
  Alphabet alphabet(std::move(union_labels));

  // event_map[i][e] is component i's id for union event e, or kNotInComponent.
  std::vector<std::vector<EventId>> event_map(n, std::vector<EventId>(alphabet.size()));
  for (size_t i = 0; i < n; ++i) {
    for (EventId e = 0; e < alphabet.size(); ++e) {
      auto local = components[i]->alphabet().find(alphabet.label(e));
      event_map[i][e] = local ? *local : kNotInComponent;
    }
  }

  std::unordered_map<std::vector<StateId>, StateId, detail::IdVecHash> ids;
  std::vector<std::vector<StateId>> order;
  auto intern = [&](const std::vector<StateId>& tuple) -> StateId {
    auto [it, inserted] = ids.emplace(tuple, static_cast<StateId>(order.size()));
    if (inserted) order.push_back(tuple);
    return it->second;
  };

  std::vector<std::vector<StateId>> initial_choices(n);
  for (size_t i = 0; i < n; ++i) initial_choices[i] = components[i]->initial();
  std::vector<StateId> initial;
  cartesian(initial_choices, [&](const std::vector<StateId>& t) { initial.push_back(intern(t)); });

  std::vector<Transition> transitions;
  std::vector<std::vector<StateId>> choices(n);
  for (size_t head = 0; head < order.size(); ++head) {
    const std::vector<StateId> tuple = order[head];
    for (EventId e = 0; e < alphabet.size(); ++e) {
      bool enabled = true;
      for (size_t i = 0; i < n && enabled; ++i) {
        EventId local = event_map[i][e];
        if (local == kNotInComponent) {
          choices[i] = {tuple[i]};
        } else {
          choices[i] = components[i]->successors(tuple[i], local);
          if (choices[i].empty()) enabled = false;
        }
      }
      if (!enabled) continue;
      cartesian(choices, [&](const std::vector<StateId>& succ) {
        transitions.push_back({static_cast<StateId>(head), e, intern(succ)});
      });
    }
  }

  std::vector<StateId> marked;
  std::vector<std::string> names(order.size());
  for (StateId q = 0; q < order.size(); ++q) {
    bool all_marked = true;
    for (size_t i = 0; i < n; ++i) {
      if (!components[i]->is_marked(order[q][i])) {
        all_marked = false;
        break;
      }
    }
    if (all_marked) marked.push_back(q);
    names[q] = tuple_name(components, order[q]);
  }

  return AutomatonBuilder::assemble(static_cast<uint32_t>(order.size()), std::move(alphabet),
                                    std::move(transitions), std::move(initial),
                                    std::move(marked), std::move(names));
}

Automaton parallel_compose(const std::vector<Automaton>& components) {
  std::vector<const Automaton*> ptrs;
  ptrs.reserve(components.size());
  for (const Automaton& a : components) ptrs.push_back(&a);
  return parallel_compose(ptrs);
}

Dfa parallel_compose(const std::vector<Dfa>& components) {
  std::vector<const Automaton*> ptrs;
  ptrs.reserve(components.size());
  for (const Dfa& d : components) ptrs.push_back(&d);
  return Dfa::validate(parallel_compose(ptrs));
}

}  // namespace nonblock
