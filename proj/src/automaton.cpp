#include "nonblock/automaton.hpp"

#include <algorithm>
#include <cctype>

namespace nonblock {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInitialSet: return "EmptyInitialSet";
    case ErrorCode::UnknownEvent: return "UnknownEvent";
    case ErrorCode::NondeterministicTransition: return "NondeterministicTransition";
    case ErrorCode::BadStateId: return "BadStateId";
    case ErrorCode::EmptyComposition: return "EmptyComposition";
    case ErrorCode::StateBudgetExceeded: return "StateBudgetExceeded";
    case ErrorCode::EventNotInAlphabet: return "EventNotInAlphabet";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::SharedAlphabetViolation: return "SharedAlphabetViolation";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::FewerThanTwoComponents: return "FewerThanTwoComponents";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::RepeatedVariableInClause: return "RepeatedVariableInClause";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::ReservedEvent: return "ReservedEvent";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

namespace {

std::vector<StateId> sorted_unique(std::vector<uint32_t> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

void check_state_ids(const std::vector<StateId>& ids, uint32_t num_states,
                     const char* what) {
  for (StateId q : ids) {
    if (q >= num_states) {
      throw Error(ErrorCode::BadStateId, std::string(what) + " state " +
                                             std::to_string(q) + " out of range (" +
                                             std::to_string(num_states) + " states)");
    }
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (const auto& l : labels_) {
    if (l.empty()) {
      throw Error(ErrorCode::UnknownEvent, "empty event label");
    }
    for (unsigned char c : l) {
      if (std::isspace(c) || !std::isprint(c)) {
        throw Error(ErrorCode::UnknownEvent,
                    "event label '" + l + "' contains whitespace or unprintable characters");
      }
    }
  }
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

std::optional<EventId> Alphabet::find(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<EventId>(it - labels_.begin());
}

void Automaton::finish_construction() {
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()),
                     transitions_.end());
  row_begin_.assign(num_states_ + 1, 0);
  for (const Transition& t : transitions_) row_begin_[t.from + 1]++;
  for (uint32_t q = 0; q < num_states_; ++q) row_begin_[q + 1] += row_begin_[q];
}

Automaton Automaton::validate(const AutomatonData& data) {
  Automaton a;
  a.num_states_ = data.num_states;
  a.alphabet_ = Alphabet(data.alphabet);
  a.initial_ = sorted_unique(data.initial);
  a.marked_ = sorted_unique(data.marked);
  if (a.initial_.empty()) {
    throw Error(ErrorCode::EmptyInitialSet, "an automaton needs at least one initial state");
  }
  check_state_ids(a.initial_, a.num_states_, "initial");
  check_state_ids(a.marked_, a.num_states_, "marked");

  a.transitions_.reserve(data.transitions.size());
  for (const auto& [from, label, to] : data.transitions) {
    auto e = a.alphabet_.find(label);
    if (!e) {
      throw Error(ErrorCode::UnknownEvent,
                  "transition event '" + label + "' is not in the alphabet");
    }
    if (from >= a.num_states_ || to >= a.num_states_) {
      throw Error(ErrorCode::BadStateId,
                  "transition (" + std::to_string(from) + "," + label + "," +
                      std::to_string(to) + ") references a state out of range");
    }
    a.transitions_.push_back({from, *e, to});
  }

  if (!data.state_names.empty()) {
    if (data.state_names.size() != a.num_states_) {
      throw Error(ErrorCode::BadStateId, "state name table size does not match state count");
    }
    a.state_names_ = data.state_names;
  }

  a.finish_construction();
  return a;
}

bool Automaton::is_marked(StateId q) const {
  return std::binary_search(marked_.begin(), marked_.end(), q);
}

std::span<const Transition> Automaton::from(StateId q) const {
  return {transitions_.data() + row_begin_[q], transitions_.data() + row_begin_[q + 1]};
}

std::vector<StateId> Automaton::successors(StateId q, EventId e) const {
  std::vector<StateId> out;
  for (const Transition& t : from(q)) {
    if (t.event == e) out.push_back(t.to);
  }
  return out;
}

std::string Automaton::state_name(StateId q) const {
  if (q < state_names_.size() && !state_names_[q].empty()) return state_names_[q];
  return std::to_string(q);
}

AutomatonData Automaton::to_data() const {
  AutomatonData d;
  d.num_states = num_states_;
  d.alphabet = alphabet_.labels();
  for (const Transition& t : transitions_) {
    d.transitions.emplace_back(t.from, alphabet_.label(t.event), t.to);
  }
  d.initial = initial_;
  d.marked = marked_;
  d.state_names = state_names_;
  return d;
}

Dfa Dfa::validate(const AutomatonData& data) {
  return validate(Automaton::validate(data));
}

Dfa Dfa::validate(const Automaton& a) {
  if (a.initial().size() != 1) {
    throw Error(ErrorCode::NondeterministicTransition,
                "a DFA needs exactly one initial state, got " +
                    std::to_string(a.initial().size()));
  }
  const auto& ts = a.transitions();
  for (size_t i = 1; i < ts.size(); ++i) {
    if (ts[i - 1].from == ts[i].from && ts[i - 1].event == ts[i].event) {
      throw Error(ErrorCode::NondeterministicTransition,
                  "state " + std::to_string(ts[i].from) + " has two targets for event '" +
                      a.alphabet().label(ts[i].event) + "'");
    }
  }
  Dfa d;
  static_cast<Automaton&>(d) = a;
  return d;
}

std::optional<StateId> Dfa::next(StateId q, EventId e) const {
  for (const Transition& t : from(q)) {
    if (t.event == e) return t.to;
  }
  return std::nullopt;
}

Automaton AutomatonBuilder::assemble(uint32_t num_states, Alphabet alphabet,
                                     std::vector<Transition> transitions,
                                     std::vector<StateId> initial,
                                     std::vector<StateId> marked,
                                     std::vector<std::string> state_names) {
  Automaton a;
  a.num_states_ = num_states;
  a.alphabet_ = std::move(alphabet);
  a.transitions_ = std::move(transitions);
  a.initial_ = sorted_unique(std::move(initial));
  a.marked_ = sorted_unique(std::move(marked));
  a.state_names_ = std::move(state_names);
  a.finish_construction();
  return a;
}

bool is_deterministic(const Automaton& a) {
  if (a.initial().size() != 1) return false;
  const auto& ts = a.transitions();
  for (size_t i = 1; i < ts.size(); ++i) {
    if (ts[i - 1].from == ts[i].from && ts[i - 1].event == ts[i].event) return false;
  }
  return true;
}

Automaton accessible_part(const Automaton& a) {
  constexpr StateId kUnseen = static_cast<StateId>(-1);
  std::vector<StateId> new_id(a.num_states(), kUnseen);
  std::vector<StateId> order;  // old ids in discovery order
  order.reserve(a.num_states());
  for (StateId q : a.initial()) {
    if (new_id[q] == kUnseen) {
      new_id[q] = static_cast<StateId>(order.size());
      order.push_back(q);
    }
  }
  for (size_t head = 0; head < order.size(); ++head) {
    // from() is sorted by event then target, which fixes discovery order.
    for (const Transition& t : a.from(order[head])) {
      if (new_id[t.to] == kUnseen) {
        new_id[t.to] = static_cast<StateId>(order.size());
        order.push_back(t.to);
      }
    }
  }

  std::vector<Transition> transitions;
  for (const Transition& t : a.transitions()) {
    if (new_id[t.from] != kUnseen && new_id[t.to] != kUnseen) {
      transitions.push_back({new_id[t.from], t.event, new_id[t.to]});
    }
  }
  std::vector<StateId> initial;
  for (StateId q : a.initial()) initial.push_back(new_id[q]);
  std::vector<StateId> marked;
  for (StateId q : a.marked()) {
    if (new_id[q] != kUnseen) marked.push_back(new_id[q]);
  }
  std::vector<std::string> names;
  if (!a.state_names().empty()) {
    names.resize(order.size());
    for (size_t i = 0; i < order.size(); ++i) names[i] = a.state_names()[order[i]];
  }
  return AutomatonBuilder::assemble(static_cast<uint32_t>(order.size()), a.alphabet(),
                                    std::move(transitions), std::move(initial),
                                    std::move(marked), std::move(names));
}

Dfa accessible_part(const Dfa& d) {
  return Dfa::validate(accessible_part(static_cast<const Automaton&>(d)));
}

}  // namespace nonblock
