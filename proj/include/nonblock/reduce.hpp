#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nonblock/automaton.hpp"
#include "nonblock/determinize.hpp"

namespace nonblock {

struct Graph {
  uint32_t nodes = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  uint32_t source = 0;
  uint32_t target = 0;
};

struct Literal {
  uint32_t var = 0;  // 0-based variable index
  bool negated = false;

  bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

// 3CNF formula: a conjunction of width-3 clauses.
struct Cnf3 {
  uint32_t num_vars = 0;
  std::vector<Clause> clauses;
};

struct PrimeTable {
  std::vector<uint32_t> primes;
};

// First n primes, by trial division.
PrimeTable first_primes(uint32_t n);

// Single-event DFA shaped as a tail of `tail` states feeding a cycle of
// `cycle` states, with exactly one marked state: the one reached after
// tail + marked_offset occurrences of the event.  Its marked language is
// therefore the arithmetic progression of lengths tail + marked_offset
// modulo cycle (and at least tail), while it generates every string.
Dfa lasso_dfa(uint32_t tail, uint32_t cycle, uint32_t marked_offset,
              const std::string& event = "0");

// DFA that is blocking iff g's target is reachable from its source: states
// are the nodes plus a trap t', every edge becomes a transition under its
// own label ("1", "2", ... in input order), and one extra label leads from
// the target into the unmarked trap.
Dfa graph_to_dfa(const Graph& g);

// NFA that is nonblocking iff b is universal: missing transitions are
// completed into a new unmarked dump state d that loops on everything, and a
// fresh event "x" leads from non-marked states to d and from marked states
// back to every initial state.  Rejects inputs whose alphabet already uses
// the reserved event name.
Automaton universality_to_nonblocking(const Automaton& b);

// Modular system that is nonblocking iff the component marked languages have
// empty intersection.  The first output gains an unmarked detour state d_1
// plus a marked d_1' behind it (reached by "x" then "x" from any marked
// input state); every other output gains a single all-marked detour d_i.
// Each output is individually nonblocking.  Inputs must share one alphabet,
// which must not use the reserved event name "x".
std::vector<Dfa> dfaint_to_modular(const std::vector<Dfa>& components);

// One-shared-event system (single event "0") that is nonblocking iff f is
// satisfiable: residue filters pin each variable's truth value to a
// remainder of 0 or 1 modulo its prime, and one automaton per clause rules
// out the unique remainder pattern falsifying the clause.  All components
// generate 0* and are individually nonblocking.
std::vector<Dfa> cnf3_to_unary(const Cnf3& f);

// Independent ground truths for the reduction properties, by exhaustive
// enumeration; each throws InstanceTooLarge beyond its stated bound.
bool sat3_bruteforce(const Cnf3& f);                  // num_vars <= 16
bool graph_reachable(const Graph& g);                 // no bound needed
bool nfa_universal_small(const Automaton& b,
                         size_t max_subsets = kDefaultSubsetBudget);
bool dfaint_empty_small(const std::vector<Dfa>& components);

}  // namespace nonblock
