#pragma once

#include <set>
#include <string>
#include <vector>

#include "nonblock/automaton.hpp"

namespace nonblock {

using EventString = std::vector<std::string>;

inline constexpr uint32_t kDefaultEnumBound = 8;

/// Exact truncation of the generated and marked languages to strings of
/// bounded length. The generated set is prefix-closed within the bound and
/// the marked set is contained in it.
struct LanguageSample {
  std::set<EventString> generated;
  std::set<EventString> marked;
  uint32_t bound = 0;

  bool operator==(const LanguageSample&) const = default;
};

/// Breadth-first expansion of subset states, one level per string length.
/// Each string maps to a unique subset, so no merging is needed.
LanguageSample enumerate_strings(const Automaton& a, uint32_t max_len,
                                 uint32_t cap = kDefaultEnumBound);

/// One synchronous step: all states reachable from `states` by the event.
/// `states` need not be sorted; the result is sorted and duplicate-free.
std::vector<StateId> step(const Automaton& a, const std::vector<StateId>& states,
                          std::string_view event_label);

/// Projection of an event string onto a sub-alphabet (erases the rest).
EventString project_string(const EventString& w, const std::vector<std::string>& keep);

}  // namespace nonblock
