#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nonblock/automaton.hpp"
#include "nonblock/bool_matrix.hpp"
#include "nonblock/reduce.hpp"

namespace nonblock {

// Deterministic pseudo-random draws, reproducible across platforms: the
// engine is fully specified by the standard and the reductions below avoid
// std::uniform_int_distribution, whose output is implementation-defined.
// Every consumer seeds its own named stream so adding draws in one place
// cannot shift another's sequence.
class RandomStream {
 public:
  RandomStream(uint64_t seed, const std::string& name);

  uint64_t next_u64() { return rng_(); }
  // Uniform-ish value in [0, bound); bound must be positive.  The modulo
  // bias is immaterial for instance generation.
  uint32_t below(uint32_t bound);
  // Uniform-ish value in [lo, hi], inclusive.
  uint32_t in_range(uint32_t lo, uint32_t hi);
  // True with probability numerator/denominator.
  bool chance(uint32_t numerator, uint32_t denominator);

 private:
  std::mt19937_64 rng_;
};

// Random NFA with 1..max_states states over the first num_events letters of
// a..z: sparse transitions, one or two initial states, each state marked
// with probability 1/3 (possibly none).
Automaton random_nfa(RandomStream& rs, uint32_t max_states,
                     uint32_t num_events);

// Random DFA over the given alphabet with 1..max_states states, a partial
// transition function, and at least one marked state.
Dfa random_dfa(RandomStream& rs, uint32_t max_states,
               const std::vector<std::string>& alphabet);

// Random nonblocking DFA: a random DFA trimmed to its reachable and
// coreachable states (re-drawn in the rare case the trim comes up empty).
Dfa random_trim_dfa(RandomStream& rs, uint32_t max_states,
                    const std::vector<std::string>& alphabet);

// n components for the generic modular checker: sometimes over pairwise
// disjoint alphabets, otherwise sharing a common pool with optional private
// letters; a mix of nonblocking and unrestricted components.
std::vector<Dfa> random_modular_instance(RandomStream& rs, uint32_t n,
                                         uint32_t max_states);

// n individually nonblocking components whose alphabets pairwise share
// exactly the event "a" (component i additionally owns a private letter).
std::vector<Dfa> random_one_shared_instance(RandomStream& rs, uint32_t n,
                                            uint32_t max_states);

Graph random_graph(RandomStream& rs, uint32_t max_nodes, uint32_t max_edges);

// Random 3CNF with 3..max_vars variables and distinct variables per clause;
// max_vars must be at least 3.
Cnf3 random_cnf3(RandomStream& rs, uint32_t max_vars, uint32_t max_clauses);

// Square matrix with each bit set with probability density_pct/100.
BoolMatrix random_bool_matrix(RandomStream& rs, uint32_t size,
                              uint32_t density_pct);

}  // namespace nonblock
