#include "nonblock/language.hpp"

#include <algorithm>

namespace nonblock {

LanguageSample enumerate_strings(const Automaton& a, uint32_t max_len, uint32_t cap) {
  if (max_len > cap) {
    throw Error(ErrorCode::BoundTooLarge,
                "enumeration length " + std::to_string(max_len) + " exceeds the bound " +
                    std::to_string(cap));
  }
  LanguageSample sample;
  sample.bound = max_len;

  auto record = [&](const EventString& w, const std::vector<StateId>& subset) {
    sample.generated.insert(w);
    for (StateId q : subset) {
      if (a.is_marked(q)) {
        sample.marked.insert(w);
        break;
      }
    }
  };

  std::vector<std::pair<EventString, std::vector<StateId>>> frontier;
  frontier.emplace_back(EventString{}, a.initial());
  record(frontier[0].first, frontier[0].second);

  for (uint32_t len = 0; len < max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<EventString, std::vector<StateId>>> next_frontier;
    for (const auto& [w, subset] : frontier) {
      for (EventId e = 0; e < a.alphabet().size(); ++e) {
        std::vector<StateId> next;
        for (StateId q : subset) {
          for (const Transition& t : a.from(q)) {
            if (t.event == e) next.push_back(t.to);
          }
        }
        if (next.empty()) continue;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        EventString we = w;
        we.push_back(a.alphabet().label(e));
        record(we, next);
        next_frontier.emplace_back(std::move(we), std::move(next));
      }
    }
    frontier = std::move(next_frontier);
  }
  return sample;
}

std::vector<StateId> step(const Automaton& a, const std::vector<StateId>& states,
                          std::string_view event_label) {
  auto e = a.alphabet().find(event_label);
  if (!e) return {};
  std::vector<StateId> next;
  for (StateId q : states) {
    for (const Transition& t : a.from(q)) {
      if (t.event == *e) next.push_back(t.to);
    }
  }
  std::sort(next.begin(), next.end());
  next.erase(std::unique(next.begin(), next.end()), next.end());
  return next;
}

EventString project_string(const EventString& w, const std::vector<std::string>& keep) {
  EventString out;
  for (const std::string& e : w) {
    if (std::find(keep.begin(), keep.end(), e) != keep.end()) out.push_back(e);
  }
  return out;
}

}  // namespace nonblock
