#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "nonblock/error.hpp"

namespace nonblock {

using StateId = uint32_t;
using EventId = uint32_t;

/// A sorted, duplicate-free set of event labels. EventIds index into the
/// sorted order, so iterating ids 0..size()-1 walks events in label order.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> labels);

  std::optional<EventId> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  const std::string& label(EventId e) const { return labels_[e]; }
  size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> labels_;
};

struct Transition {
  StateId from;
  EventId event;
  StateId to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Unvalidated automaton description, as it comes from a parser or a
/// caller assembling one by hand. Transitions refer to events by label.
struct AutomatonData {
  uint32_t num_states = 0;
  std::vector<std::string> alphabet;
  std::vector<std::tuple<uint32_t, std::string, uint32_t>> transitions;
  std::vector<uint32_t> initial;
  std::vector<uint32_t> marked;
  /// Optional display names, one per state (empty = use decimal ids).
  std::vector<std::string> state_names;
};

/// A validated NFA. States are dense ids 0..num_states()-1, the alphabet is
/// the automaton's own event set, and the transition relation is kept
/// sorted and duplicate-free. Instances are immutable after validation.
class Automaton {
 public:
  /// Checks all structural invariants and builds the automaton:
  /// a non-empty initial set, transition events drawn from the alphabet,
  /// and state ids below num_states. Duplicate transitions collapse.
  static Automaton validate(const AutomatonData& data);

  uint32_t num_states() const { return num_states_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<StateId>& initial() const { return initial_; }
  const std::vector<StateId>& marked() const { return marked_; }
  bool is_marked(StateId q) const;

  /// Targets of (q, e), in ascending id order.
  std::span<const Transition> from(StateId q) const;
  std::vector<StateId> successors(StateId q, EventId e) const;

  /// Display name of a state: the stored name, or its decimal id.
  std::string state_name(StateId q) const;
  const std::vector<std::string>& state_names() const { return state_names_; }

  AutomatonData to_data() const;

  bool operator==(const Automaton&) const = default;

 protected:
  Automaton() = default;

  uint32_t num_states_ = 0;
  Alphabet alphabet_;
  std::vector<Transition> transitions_;
  std::vector<uint32_t> row_begin_;  // transitions_ index per source state
  std::vector<StateId> initial_;
  std::vector<StateId> marked_;
  std::vector<std::string> state_names_;

  void finish_construction();
  friend class AutomatonBuilder;
};

/// A validated DFA: one initial state, at most one target per (state, event).
/// Partial transition functions are allowed; a missing transition simply
/// has no target.
class Dfa : public Automaton {
 public:
  static Dfa validate(const AutomatonData& data);
  /// Re-checks determinism on an already validated automaton.
  static Dfa validate(const Automaton& a);

  StateId initial_state() const { return initial_[0]; }
  std::optional<StateId> next(StateId q, EventId e) const;

 private:
  Dfa() = default;
};

/// Internal helper for operations that assemble automata whose parts are
/// already known to be consistent (composition, determinization, ...).
class AutomatonBuilder {
 public:
  static Automaton assemble(uint32_t num_states, Alphabet alphabet,
                            std::vector<Transition> transitions,
                            std::vector<StateId> initial,
                            std::vector<StateId> marked,
                            std::vector<std::string> state_names);
};

bool is_deterministic(const Automaton& a);

/// Sub-automaton induced by the states reachable from the initial set.
/// States are renumbered densely in breadth-first discovery order
/// (events taken in alphabet order), so the result is reproducible.
Automaton accessible_part(const Automaton& a);
Dfa accessible_part(const Dfa& d);

}  // namespace nonblock
