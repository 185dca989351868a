#pragma once

#include <vector>

#include "nonblock/automaton.hpp"

namespace nonblock {

/// Synchronous product over the union alphabet: shared events synchronize,
/// private events interleave. Only reachable state tuples are built, in
/// breadth-first discovery order, so the numbering is reproducible.
/// A tuple is marked iff every component state is marked.
Automaton parallel_compose(const std::vector<const Automaton*>& components);
Automaton parallel_compose(const std::vector<Automaton>& components);

/// Composing DFAs yields a DFA.
Dfa parallel_compose(const std::vector<Dfa>& components);

}  // namespace nonblock
