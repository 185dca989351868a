#include "nonblock/reduce.hpp"

#include <algorithm>
#include <queue>

#include "nonblock/compose.hpp"
#include "nonblock/error.hpp"

namespace nonblock {
namespace {

// The event name added by the gadget constructions.  Inputs already using it
// are rejected rather than renamed, so generated systems always mean the
// same thing.
constexpr const char* kFreshEvent = "x";

// Cap on the clause cycle length p_r * p_s * p_t; the CRT residue is found
// by scanning the full cycle, which is fine at desk scale but has to stop
// somewhere.
constexpr uint64_t kMaxClauseCycle = 1'000'000;

void reject_reserved(const Alphabet& alphabet) {
  if (alphabet.contains(kFreshEvent)) {
    throw Error(ErrorCode::ReservedEvent,
                std::string("alphabet already contains the reserved event '") +
                    kFreshEvent + "'");
  }
}

// Unique z in [0, p0*p1*p2) with z = r_i mod p_i, by scanning.  The moduli
// are distinct primes, so the solution exists and is unique.
uint64_t crt3_scan(const std::array<uint32_t, 3>& residues,
                   const std::array<uint32_t, 3>& moduli, uint64_t product) {
  for (uint64_t z = 0; z < product; ++z) {
    if (z % moduli[0] == residues[0] && z % moduli[1] == residues[1] &&
        z % moduli[2] == residues[2]) {
      return z;
    }
  }
  throw Error(ErrorCode::InstanceTooLarge,
              "no CRT solution found; moduli not coprime?");
}

// Copy of `d` with the marked set replaced by its complement.
Dfa complement_marking(const Dfa& d) {
  AutomatonData data = d.to_data();
  std::vector<uint32_t> flipped;
  for (uint32_t q = 0; q < data.num_states; ++q) {
    if (!std::binary_search(data.marked.begin(), data.marked.end(), q)) {
      flipped.push_back(q);
    }
  }
  data.marked = std::move(flipped);
  return Dfa::validate(data);
}

}  // namespace

PrimeTable first_primes(uint32_t n) {
  PrimeTable table;
  table.primes.reserve(n);
  for (uint32_t candidate = 2; table.primes.size() < n; ++candidate) {
    bool prime = true;
    for (uint32_t p : table.primes) {
      if (static_cast<uint64_t>(p) * p > candidate) break;
      if (candidate % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) table.primes.push_back(candidate);
  }
  return table;
}

Dfa lasso_dfa(uint32_t tail, uint32_t cycle, uint32_t marked_offset,
              const std::string& event) {
  if (cycle == 0 || marked_offset >= cycle) {
    throw Error(ErrorCode::BadStateId,
                "lasso needs a non-empty cycle containing the marked offset");
  }
  AutomatonData data;
  data.num_states = tail + cycle;
  data.alphabet = {event};
  for (uint32_t q = 0; q + 1 < data.num_states; ++q) {
    data.transitions.emplace_back(q, event, q + 1);
  }
  data.transitions.emplace_back(data.num_states - 1, event, tail);
  data.initial = {0};
  data.marked = {tail + marked_offset};
  return Dfa::validate(data);
}

Dfa graph_to_dfa(const Graph& g) {
  if (g.nodes == 0 || g.source >= g.nodes || g.target >= g.nodes) {
    throw Error(ErrorCode::BadStateId, "graph source/target out of range");
  }
  for (auto [u, v] : g.edges) {
    if (u >= g.nodes || v >= g.nodes) {
      throw Error(ErrorCode::BadStateId, "graph edge endpoint out of range");
    }
  }

  AutomatonData data;
  uint32_t trap = g.nodes;  // t'
  data.num_states = g.nodes + 1;
  for (size_t c = 1; c <= g.edges.size() + 1; ++c) {
    data.alphabet.push_back(std::to_string(c));
  }
  for (size_t i = 0; i < g.edges.size(); ++i) {
    data.transitions.emplace_back(g.edges[i].first, std::to_string(i + 1),
                                  g.edges[i].second);
  }
  data.transitions.emplace_back(g.target, std::to_string(g.edges.size() + 1),
                                trap);
  data.initial = {g.source};
  for (uint32_t v = 0; v < g.nodes; ++v) data.marked.push_back(v);
  for (uint32_t v = 0; v < g.nodes; ++v) {
    data.state_names.push_back(std::to_string(v));
  }
  data.state_names.push_back("t'");
  return Dfa::validate(data);
}

Automaton universality_to_nonblocking(const Automaton& b) {
  reject_reserved(b.alphabet());

  AutomatonData data = b.to_data();
  uint32_t dump = data.num_states;
  data.num_states += 1;
  if (data.state_names.empty()) {
    for (uint32_t q = 0; q < dump; ++q) {
      data.state_names.push_back(b.state_name(q));
    }
  }
  data.state_names.push_back("d");

  // Complete every missing (state, event) pair into the dump.
  for (uint32_t q = 0; q < dump; ++q) {
    for (EventId e = 0; e < b.alphabet().size(); ++e) {
      if (b.successors(q, e).empty()) {
        data.transitions.emplace_back(q, b.alphabet().label(e), dump);
      }
    }
  }
  for (const std::string& label : data.alphabet) {
    data.transitions.emplace_back(dump, label, dump);
  }
  data.alphabet.push_back(kFreshEvent);
  data.transitions.emplace_back(dump, kFreshEvent, dump);

  // x resets marked states to the initial set and strands the rest.
  for (uint32_t q = 0; q < dump; ++q) {
    if (b.is_marked(q)) {
      for (StateId i : b.initial()) {
        data.transitions.emplace_back(q, kFreshEvent, i);
      }
    } else {
      data.transitions.emplace_back(q, kFreshEvent, dump);
    }
  }
  return Automaton::validate(data);
}

std::vector<Dfa> dfaint_to_modular(const std::vector<Dfa>& components) {
  if (components.size() < 2) {
    throw Error(ErrorCode::FewerThanTwoComponents,
                "intersection gadget needs at least two automata");
  }
  const Alphabet& sigma = components[0].alphabet();
  for (const Dfa& c : components) {
    if (c.alphabet() != sigma) {
      throw Error(ErrorCode::AlphabetMismatch,
                  "components must share one alphabet");
    }
  }
  reject_reserved(sigma);

  std::vector<Dfa> out;
  out.reserve(components.size());
  for (size_t i = 0; i < components.size(); ++i) {
    const Dfa& b = components[i];
    AutomatonData data = b.to_data();
    if (data.state_names.empty()) {
      for (uint32_t q = 0; q < data.num_states; ++q) {
        data.state_names.push_back(b.state_name(q));
      }
    }
    std::string suffix = std::to_string(i + 1);
    uint32_t detour = data.num_states;

    data.alphabet.push_back(kFreshEvent);
    for (StateId m : b.marked()) {
      data.transitions.emplace_back(m, kFreshEvent, detour);
    }
    data.state_names.push_back("d" + suffix);

    if (i == 0) {
      // First component: the detour is unmarked and one more x reaches the
      // marked d_1', so only strings of the common intersection get stuck
      // halfway in the composed system.
      uint32_t detour_end = detour + 1;
      data.num_states += 2;
      data.transitions.emplace_back(detour, kFreshEvent, detour_end);
      data.state_names.push_back("d" + suffix + "'");
      data.marked.clear();
      for (uint32_t q = 0; q < data.num_states; ++q) {
        if (q != detour) data.marked.push_back(q);
      }
    } else {
      data.num_states += 1;
      data.marked.clear();
      for (uint32_t q = 0; q < data.num_states; ++q) data.marked.push_back(q);
    }
    out.push_back(Dfa::validate(data));
  }
  return out;
}

std::vector<Dfa> cnf3_to_unary(const Cnf3& f) {
  if (f.num_vars == 0) {
    throw Error(ErrorCode::BadStateId, "formula needs at least one variable");
  }
  for (const Clause& clause : f.clauses) {
    for (const Literal& lit : clause) {
      if (lit.var >= f.num_vars) {
        throw Error(ErrorCode::BadStateId, "literal variable out of range");
      }
    }
    if (clause[0].var == clause[1].var || clause[0].var == clause[2].var ||
        clause[1].var == clause[2].var) {
      throw Error(ErrorCode::RepeatedVariableInClause,
                  "clause variables must be distinct");
    }
  }

  PrimeTable primes = first_primes(f.num_vars);
  std::vector<Dfa> out;

  // Residue filters: variable u may only sit at remainder 0 or 1 modulo its
  // prime, so every other remainder j gets an automaton whose *complement*
  // marking outlaws lengths = j (mod p_u).
  for (uint32_t u = 0; u < f.num_vars; ++u) {
    uint32_t p = primes.primes[u];
    for (uint32_t j = 2; j < p; ++j) {
      out.push_back(complement_marking(lasso_dfa(j, p, 0)));
    }
  }

  // Clause automata: the falsifying remainder pattern (0 for a positive
  // literal, 1 for a negated one) pins a unique residue z modulo the product
  // of the three primes; complementing its lasso forbids exactly that z.
  for (const Clause& clause : f.clauses) {
    std::array<uint32_t, 3> moduli, residues;
    uint64_t product = 1;
    for (size_t i = 0; i < 3; ++i) {
      moduli[i] = primes.primes[clause[i].var];
      residues[i] = clause[i].negated ? 1 : 0;
      product *= moduli[i];
    }
    if (product > kMaxClauseCycle) {
      throw Error(ErrorCode::InstanceTooLarge,
                  "clause cycle length " + std::to_string(product) +
                      " exceeds cap " + std::to_string(kMaxClauseCycle));
    }
    uint64_t z = crt3_scan(residues, moduli, product);
    out.push_back(complement_marking(
        lasso_dfa(0, static_cast<uint32_t>(product), static_cast<uint32_t>(z))));
  }
  return out;
}

bool sat3_bruteforce(const Cnf3& f) {
  if (f.num_vars > 16) {
    throw Error(ErrorCode::InstanceTooLarge,
                "brute force capped at 16 variables");
  }
  for (uint32_t assignment = 0; assignment < (1u << f.num_vars); ++assignment) {
    bool all = true;
    for (const Clause& clause : f.clauses) {
      bool any = false;
      for (const Literal& lit : clause) {
        bool value = (assignment >> lit.var) & 1u;
        if (value != lit.negated) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

bool graph_reachable(const Graph& g) {
  std::vector<std::vector<uint32_t>> adj(g.nodes);
  for (auto [u, v] : g.edges) adj[u].push_back(v);
  std::vector<bool> seen(g.nodes, false);
  std::queue<uint32_t> queue;
  seen[g.source] = true;
  queue.push(g.source);
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop();
    if (u == g.target) return true;
    for (uint32_t v : adj[u]) {
      if (!seen[v]) {
        seen[v] = true;
        queue.push(v);
      }
    }
  }
  return false;
}

bool nfa_universal_small(const Automaton& b, size_t max_subsets) {
  Dfa det = [&] {
    try {
      return determinize(b, max_subsets);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::StateBudgetExceeded) {
        throw Error(ErrorCode::InstanceTooLarge,
                    "determinization exceeds the oracle budget");
      }
      throw;
    }
  }();
  // Universal iff every reachable subset is marked and no string ever falls
  // off the transition function.
  for (uint32_t q = 0; q < det.num_states(); ++q) {
    if (!det.is_marked(q)) return false;
    for (EventId e = 0; e < det.alphabet().size(); ++e) {
      if (!det.next(q, e)) return false;
    }
  }
  return true;
}

bool dfaint_empty_small(const std::vector<Dfa>& components) {
  uint64_t bound = 1;
  for (const Dfa& c : components) {
    bound *= c.num_states();
    if (bound > 1'000'000) {
      throw Error(ErrorCode::InstanceTooLarge,
                  "explicit product exceeds the oracle budget");
    }
  }
  Dfa product = parallel_compose(components);
  return product.marked().empty();
}

}  // namespace nonblock
