#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nonblock/automaton.hpp"

namespace nonblock {

/// Cap on subsets materialized by determinization before it gives up with
/// StateBudgetExceeded. Exceeding it is an explicit error, not silence.
inline constexpr size_t kDefaultSubsetBudget = size_t{1} << 20;

/// Subset construction restricted to reachable subsets. A subset is marked
/// iff it intersects the marked set; the empty subset is never materialized
/// (a missing transition stands for it). Preserves both the generated and
/// the marked language.
Dfa determinize(const Automaton& a, size_t max_subsets = kDefaultSubsetBudget);

/// Projects the language onto `keep`: erased events become silent moves
/// which are then eliminated. The state set is unchanged; the initial set
/// grows to its closure under erased events; a state is marked iff its
/// closure intersects the original marked set.
Automaton project_onto(const Automaton& a, const std::vector<std::string>& keep);

/// Deterministic recognizer of the projected language:
/// determinize(project_onto(a, keep)).
Dfa observer(const Automaton& a, const std::vector<std::string>& keep,
             size_t max_subsets = kDefaultSubsetBudget);

}  // namespace nonblock
