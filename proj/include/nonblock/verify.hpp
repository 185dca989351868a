#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nonblock/automaton.hpp"
#include "nonblock/language.hpp"

namespace nonblock {

struct SearchLimits {
  uint64_t max_states = 1'000'000;
  double max_seconds = 60.0;
};

struct SearchStats {
  uint64_t explored = 0;
  uint64_t frontier_peak = 0;
  double millis = 0.0;
  bool limit_hit = false;
};

/// Outcome of a nonblockingness check. When blocking, `witness` is a
/// generated string with no marked extension: the lexicographically least
/// among the shortest ones, so reruns reproduce it exactly.
struct Verdict {
  bool nonblocking = false;
  std::optional<EventString> witness;
  SearchStats stats;
};

/// Outcome of a prefix-closedness check. When the marked language is not
/// prefix-closed, `violation` is a shortest string in closure(L_m) \ L_m.
struct PrefixReport {
  bool prefix_closed = false;
  std::optional<EventString> violation;
  SearchStats stats;
};

/// Raised when a search runs past its state or wall-clock budget. Carries
/// the stats gathered up to that point.
class LimitError : public Error {
 public:
  LimitError(const std::string& message, SearchStats stats)
      : Error(ErrorCode::LimitExceeded, message), stats_(stats) {
    stats_.limit_hit = true;
  }
  const SearchStats& stats() const noexcept { return stats_; }

 private:
  SearchStats stats_;
};

/// Linear-time DFA check: nonblocking iff every reachable state can still
/// reach a marked state. Forward reachability, then backward reachability
/// from the marked states over reversed transitions.
Verdict check_dfa_nonblocking(const Dfa& d);

/// NFA check through the subset construction, explored on the fly: only
/// reached subsets are kept, never the full determinization.
Verdict check_nfa_nonblocking(const Automaton& a, const SearchLimits& limits = {});

/// L_m(a) is prefix-closed iff the reached subset DFA has no state that is
/// reachable, co-reachable and non-marked.
PrefixReport check_prefix_closed(const Automaton& a, const SearchLimits& limits = {});

/// Modular check without building the product up front: reachable state
/// tuples are explored on the fly, then co-reachability runs over the
/// reached part only. Components with pairwise disjoint alphabets that are
/// each nonblocking short-circuit to nonblocking without product search.
Verdict check_modular_nonblocking(const std::vector<Dfa>& components,
                                  const SearchLimits& limits = {});

/// States from which some marked state is reachable.
std::vector<StateId> coreachable_states(const Automaton& a);

}  // namespace nonblock
